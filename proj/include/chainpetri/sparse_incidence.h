// Copyright 2026 The chainpetri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chainpetri {

// Sparse matrix of positive integer counts, stored column-compressed and
// built one column at a time. After BuildRowIndex() a transposed copy
// gives row scans as well; the two copies always hold the same entry set.
//
// Zero entries are never stored. Row nnz counts are maintained during
// construction so they can be queried before the row index exists.
class SparseIncidence {
 public:
  // One stored entry. `index` is the row inside a column view and the
  // column inside a row view.
  struct Entry {
    std::uint32_t index = 0;
    std::uint32_t value = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  struct Triplet {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    std::uint32_t value = 0;
    friend bool operator==(const Triplet&, const Triplet&) = default;
  };

  SparseIncidence() = default;
  explicit SparseIncidence(std::uint32_t num_rows) : row_nnz_(num_rows) {}

  // Builds a matrix from triplets in any order. Duplicated coordinates and
  // zero values are rejected with std::invalid_argument.
  static SparseIncidence FromTriplets(std::uint32_t num_rows,
                                      std::uint32_t num_cols,
                                      std::span<const Triplet> triplets);

  std::uint32_t num_rows() const {
    return static_cast<std::uint32_t>(row_nnz_.size());
  }
  std::uint32_t num_cols() const {
    return static_cast<std::uint32_t>(col_ptr_.size() - 1);
  }
  std::size_t nnz() const { return col_entries_.size(); }

  void AddRows(std::uint32_t count);

  // Appends a column. `entries` is sorted by row in place; rows must be
  // distinct and in range, values positive.
  void AppendColumn(std::span<Entry> entries);

  std::span<const Entry> Column(std::uint32_t col) const;
  std::uint32_t ColumnNnz(std::uint32_t col) const {
    return static_cast<std::uint32_t>(col_ptr_[col + 1] - col_ptr_[col]);
  }

  // Requires the row index.
  std::span<const Entry> Row(std::uint32_t row) const;
  std::uint32_t RowNnz(std::uint32_t row) const { return row_nnz_[row]; }

  // Value at (row, col), 0 when absent.
  std::uint32_t At(std::uint32_t row, std::uint32_t col) const;

  // All entries ordered by row then column. Requires the row index.
  std::vector<Triplet> Triplets() const;

  void BuildRowIndex();
  bool has_row_index() const { return has_row_index_; }

  // Content equality; the presence of the row index is not compared.
  friend bool operator==(const SparseIncidence& a, const SparseIncidence& b) {
    return a.row_nnz_ == b.row_nnz_ && a.col_ptr_ == b.col_ptr_ &&
           a.col_entries_ == b.col_entries_;
  }

 private:
  std::vector<std::uint32_t> row_nnz_;
  std::vector<std::uint64_t> col_ptr_{0};
  std::vector<Entry> col_entries_;

  bool has_row_index_ = false;
  std::vector<std::uint64_t> row_ptr_;
  std::vector<Entry> row_entries_;
};

}  // namespace chainpetri
