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

#include "chainpetri/snapshot.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chainpetri/errors.h"
#include "json.hpp"

namespace chainpetri {
namespace {

using nlohmann::json;

void WriteStringArray(std::ostream& out, const std::vector<std::string>& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << json(v[i]).dump();
  }
  out << ']';
}

void WriteTriplets(std::ostream& out, const SparseIncidence& m) {
  out << '[';
  bool first = true;
  for (std::uint32_t r = 0; r < m.num_rows(); ++r) {
    for (const auto& e : m.Row(r)) {
      if (!first) out << ',';
      first = false;
      out << '[' << r << ',' << e.index << ',' << e.value << ']';
    }
  }
  out << ']';
}

// SAX consumer that decodes the snapshot without building a DOM and keeps
// track of the top-level key being read, so errors can name their section.
class SnapshotReader {
 public:
  using Triplet = SparseIncidence::Triplet;

  bool null() { return Fail("unexpected null"); }
  bool boolean(bool) { return Fail("unexpected boolean"); }
  bool number_integer(json::number_integer_t v) {
    if (v < 0) return Fail("negative integer");
    return number_unsigned(static_cast<json::number_unsigned_t>(v));
  }
  bool number_unsigned(json::number_unsigned_t v) {
    if (depth_ == 1 && section_ == "version") {
      // Reject an incompatible file before reading its (possibly huge) body.
      if (v != static_cast<json::number_unsigned_t>(kSnapshotVersion)) {
        return Fail("unsupported version " + std::to_string(v) + " (expected " +
                    std::to_string(kSnapshotVersion) + ")");
      }
      return true;
    }
    if (depth_ == 3 && IsMatrixSection()) {
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        return Fail("integer out of range");
      }
      if (triplet_fill_ >= 3) return Fail("triplet has more than 3 values");
      current_[triplet_fill_++] = static_cast<std::uint32_t>(v);
      return true;
    }
    return Fail("unexpected integer");
  }
  bool number_float(json::number_float_t, const json::string_t&) {
    return Fail("unexpected floating-point number");
  }
  bool string(json::string_t& s) {
    if (depth_ == 2 && section_ == "places") {
      places_.push_back(std::move(s));
      return true;
    }
    if (depth_ == 2 && section_ == "transitions") {
      transitions_.push_back(std::move(s));
      return true;
    }
    return Fail("unexpected string");
  }
  bool binary(json::binary_t&) { return Fail("unexpected binary value"); }

  bool start_object(std::size_t) {
    if (depth_ != 0) return Fail("unexpected object");
    ++depth_;
    return true;
  }
  bool key(json::string_t& k) {
    section_ = k;
    if (k != "version" && k != "places" && k != "transitions" && k != "pre" &&
        k != "post") {
      return Fail("unknown field");
    }
    if (std::find(seen_.begin(), seen_.end(), k) != seen_.end()) {
      return Fail("field appears twice");
    }
    seen_.push_back(k);
    return true;
  }
  bool end_object() {
    --depth_;
    section_ = "document";
    return true;
  }
  bool start_array(std::size_t) {
    if (depth_ == 1 && section_ != "version") {
      ++depth_;
      return true;
    }
    if (depth_ == 2 && IsMatrixSection()) {
      ++depth_;
      triplet_fill_ = 0;
      return true;
    }
    return Fail("unexpected array");
  }
  bool end_array() {
    if (depth_ == 3) {
      if (triplet_fill_ != 3) return Fail("triplet has fewer than 3 values");
      Matrix().push_back({current_[0], current_[1], current_[2]});
    }
    --depth_;
    return true;
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    if (error_.empty()) {
      error_section_ = section_;
      error_ = "malformed JSON at byte " + std::to_string(position) + ": " +
               ex.what();
    }
    return false;
  }

  PlaceTransitionNet Finish(bool parsed) {
    if (!parsed || !error_.empty()) {
      throw SnapshotError(error_section_.empty() ? "document" : error_section_,
                          error_.empty() ? "malformed JSON" : error_);
    }
    for (const char* required :
         {"version", "places", "transitions", "pre", "post"}) {
      if (std::find(seen_.begin(), seen_.end(), required) == seen_.end()) {
        throw SnapshotError(required, "missing field");
      }
    }
    if (places_.size() > std::numeric_limits<std::uint32_t>::max() ||
        transitions_.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw SnapshotError("places", "too many entries");
    }
    const auto rows = static_cast<std::uint32_t>(places_.size());
    const auto cols = static_cast<std::uint32_t>(transitions_.size());
    SparseIncidence pre = BuildMatrix("pre", pre_, rows, cols);
    SparseIncidence post = BuildMatrix("post", post_, rows, cols);
    bool binary = true;
    for (const auto* m : {&pre_, &post_}) {
      for (const auto& t : *m) binary = binary && t.value == 1;
    }
    try {
      return PlaceTransitionNet::FromParts(
          std::move(places_), std::move(transitions_), std::move(pre),
          std::move(post), binary ? NetLevel::kAddress : NetLevel::kEntity);
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      throw SnapshotError(
          what.find("place") != std::string::npos ? "places" : "transitions",
          what);
    }
  }

 private:
  bool IsMatrixSection() const {
    return section_ == "pre" || section_ == "post";
  }
  std::vector<Triplet>& Matrix() { return section_ == "pre" ? pre_ : post_; }

  bool Fail(const std::string& what) {
    if (error_.empty()) {
      error_section_ = section_.empty() ? "document" : section_;
      error_ = what;
    }
    return false;
  }

  static SparseIncidence BuildMatrix(const char* section,
                                     const std::vector<Triplet>& triplets,
                                     std::uint32_t rows, std::uint32_t cols) {
    for (std::size_t i = 1; i < triplets.size(); ++i) {
      const Triplet& a = triplets[i - 1];
      const Triplet& b = triplets[i];
      if (a.row > b.row || (a.row == b.row && a.col >= b.col)) {
        throw SnapshotError(section,
                            "triplets not strictly sorted by row, col "
                            "at index " +
                                std::to_string(i));
      }
    }
    try {
      return SparseIncidence::FromTriplets(rows, cols, triplets);
    } catch (const std::invalid_argument& e) {
      throw SnapshotError(section, e.what());
    }
  }

  int depth_ = 0;
  std::string section_ = "document";
  std::vector<std::string> seen_;
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  std::vector<Triplet> pre_;
  std::vector<Triplet> post_;
  std::array<std::uint32_t, 3> current_{};
  int triplet_fill_ = 0;
  std::string error_;
  std::string error_section_;
};

}  // namespace

void SaveSnapshot(const PlaceTransitionNet& net, std::ostream& out) {
  net.RequireSealed("snapshot save");
  out << "{\"version\":" << kSnapshotVersion << ",\"places\":";
  WriteStringArray(out, net.places());
  out << ",\"transitions\":";
  WriteStringArray(out, net.transitions());
  out << ",\"pre\":";
  WriteTriplets(out, net.pre());
  out << ",\"post\":";
  WriteTriplets(out, net.post());
  out << "}";
}

void SaveSnapshot(const PlaceTransitionNet& net,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path.string());
  SaveSnapshot(net, out);
  out.flush();
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
}

PlaceTransitionNet ParseSnapshot(std::string_view text) {
  SnapshotReader reader;
  const bool parsed = json::sax_parse(text.begin(), text.end(), &reader);
  return reader.Finish(parsed);
}

PlaceTransitionNet LoadSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return ParseSnapshot(text);
}

}  // namespace chainpetri
