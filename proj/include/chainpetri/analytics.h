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

#include <cstdint>
#include <span>
#include <vector>

#include "chainpetri/ids.h"
#include "chainpetri/net.h"

namespace chainpetri {

enum class DegreeSide { kPre, kPost, kBoth };

// One count per place: the number of nonzero entries of its Pre row, Post
// row, or both added together.
struct DegreeMultiset {
  DegreeSide side = DegreeSide::kPre;
  std::vector<std::uint64_t> counts;  // indexed by place
};

DegreeMultiset Degrees(const PlaceTransitionNet& net, DegreeSide side);

struct CcdfPoint {
  std::uint64_t x = 0;
  double probability = 0.0;  // P(L > x)
  friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

// Points at x = 0 and at every distinct observed value, ascending.
// Throws DomainError on an empty sample.
std::vector<CcdfPoint> Ccdf(std::span<const std::uint64_t> values);

struct ActivityEntry {
  PlaceId place;
  std::uint32_t pre_nnz = 0;
  std::uint32_t post_nnz = 0;
  friend bool operator==(const ActivityEntry&, const ActivityEntry&) = default;
};

// Places ranked by pre_nnz + post_nnz descending, ties by place id.
std::vector<ActivityEntry> TopKActive(const PlaceTransitionNet& net,
                                      std::size_t k);

// Places that received at least once and never spent.
std::vector<PlaceId> AccumulateOnly(const PlaceTransitionNet& net);

// Transitions whose concatenated (Pre column, Post column) are identical,
// values included.
struct RepeatGroups {
  // Each group ascending with at least two members; groups ordered by their
  // first member.
  std::vector<std::vector<TransitionId>> groups;
  // Members beyond the first of every group.
  std::uint64_t repetition_count = 0;
  std::uint64_t num_transitions = 0;

  double fraction() const {
    return num_transitions == 0
               ? 0.0
               : static_cast<double>(repetition_count) / num_transitions;
  }
};

RepeatGroups RepeatedGroups(const PlaceTransitionNet& net);

struct SummaryReport {
  std::uint64_t places = 0;
  std::uint64_t transitions = 0;
  std::uint64_t pre_arcs = 0;
  std::uint64_t post_arcs = 0;
  std::uint64_t accumulate_only = 0;
  std::uint64_t disposable = 0;
  friend bool operator==(const SummaryReport&, const SummaryReport&) = default;
};

SummaryReport Summarize(const PlaceTransitionNet& net);

}  // namespace chainpetri
