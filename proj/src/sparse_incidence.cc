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

#include "chainpetri/sparse_incidence.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chainpetri/errors.h"

namespace chainpetri {

SparseIncidence SparseIncidence::FromTriplets(
    std::uint32_t num_rows, std::uint32_t num_cols,
    std::span<const Triplet> triplets) {
  std::vector<Triplet> sorted(triplets.begin(), triplets.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.col != b.col ? a.col < b.col : a.row < b.row;
            });
  SparseIncidence m(num_rows);
  m.col_ptr_.reserve(std::size_t{num_cols} + 1);
  m.col_entries_.reserve(sorted.size());
  std::size_t i = 0;
  for (std::uint32_t col = 0; col < num_cols; ++col) {
    for (; i < sorted.size() && sorted[i].col == col; ++i) {
      const Triplet& t = sorted[i];
      if (t.row >= num_rows) {
        throw std::invalid_argument("row " + std::to_string(t.row) +
                                    " out of range");
      }
      if (t.value == 0) {
        throw std::invalid_argument("zero value stored at (" +
                                    std::to_string(t.row) + ", " +
                                    std::to_string(t.col) + ")");
      }
      if (i > 0 && sorted[i - 1].col == col && sorted[i - 1].row == t.row) {
        throw std::invalid_argument("duplicate entry at (" +
                                    std::to_string(t.row) + ", " +
                                    std::to_string(t.col) + ")");
      }
      m.col_entries_.push_back({t.row, t.value});
      ++m.row_nnz_[t.row];
    }
    m.col_ptr_.push_back(m.col_entries_.size());
  }
  if (i != sorted.size()) {
    throw std::invalid_argument("column " + std::to_string(sorted[i].col) +
                                " out of range");
  }
  return m;
}

void SparseIncidence::AddRows(std::uint32_t count) {
  if (has_row_index_) {
    throw LifecycleError("cannot grow an indexed incidence matrix");
  }
  row_nnz_.resize(row_nnz_.size() + count, 0);
}

void SparseIncidence::AppendColumn(std::span<Entry> entries) {
  if (has_row_index_) {
    throw LifecycleError("cannot grow an indexed incidence matrix");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index >= num_rows()) {
      throw std::invalid_argument("row " + std::to_string(entries[i].index) +
                                  " out of range");
    }
    if (entries[i].value == 0) {
      throw std::invalid_argument("zero value in appended column");
    }
    if (i > 0 && entries[i - 1].index == entries[i].index) {
      throw std::invalid_argument("duplicate row " +
                                  std::to_string(entries[i].index) +
                                  " in appended column");
    }
  }
  for (const Entry& e : entries) {
    col_entries_.push_back(e);
    ++row_nnz_[e.index];
  }
  col_ptr_.push_back(col_entries_.size());
}

std::span<const SparseIncidence::Entry> SparseIncidence::Column(
    std::uint32_t col) const {
  return std::span<const Entry>(col_entries_)
      .subspan(col_ptr_[col], col_ptr_[col + 1] - col_ptr_[col]);
}

std::span<const SparseIncidence::Entry> SparseIncidence::Row(
    std::uint32_t row) const {
  if (!has_row_index_) {
    throw LifecycleError("row scan requires a row index");
  }
  return std::span<const Entry>(row_entries_)
      .subspan(row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]);
}

std::uint32_t SparseIncidence::At(std::uint32_t row, std::uint32_t col) const {
  const auto column = Column(col);
  const auto it = std::lower_bound(
      column.begin(), column.end(), row,
      [](const Entry& e, std::uint32_t r) { return e.index < r; });
  return it != column.end() && it->index == row ? it->value : 0;
}

std::vector<SparseIncidence::Triplet> SparseIncidence::Triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::uint32_t r = 0; r < num_rows(); ++r) {
    for (const Entry& e : Row(r)) out.push_back({r, e.index, e.value});
  }
  return out;
}

void SparseIncidence::BuildRowIndex() {
  if (has_row_index_) return;
  // Counting-sort transpose: columns are visited in order, so every row
  // receives its entries sorted by column.
  row_ptr_.assign(row_nnz_.size() + 1, 0);
  for (std::size_t r = 0; r < row_nnz_.size(); ++r) {
    row_ptr_[r + 1] = row_ptr_[r] + row_nnz_[r];
  }
  row_entries_.resize(col_entries_.size());
  std::vector<std::uint64_t> cursor(row_ptr_.begin(), row_ptr_.end() - 1);
  for (std::uint32_t c = 0; c < num_cols(); ++c) {
    for (const Entry& e : Column(c)) {
      row_entries_[cursor[e.index]++] = {c, e.value};
    }
  }
  has_row_index_ = true;
}

}  // namespace chainpetri
