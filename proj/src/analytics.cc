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

#include "chainpetri/analytics.h"

#include <algorithm>
#include <numeric>

#include "chainpetri/chains.h"
#include "chainpetri/errors.h"

namespace chainpetri {
namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running state
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

std::uint64_t ColumnHash(const PlaceTransitionNet& net, std::uint32_t t) {
  std::uint64_t h = 0;
  for (const auto& e : net.pre().Column(t)) {
    h = Mix(h, (std::uint64_t{e.index} << 32) | e.value);
  }
  h = Mix(h, ~0ULL);
  for (const auto& e : net.post().Column(t)) {
    h = Mix(h, (std::uint64_t{e.index} << 32) | e.value);
  }
  return h;
}

bool SameColumns(const PlaceTransitionNet& net, std::uint32_t a,
                 std::uint32_t b) {
  auto equal = [](auto x, auto y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  };
  return equal(net.pre().Column(a), net.pre().Column(b)) &&
         equal(net.post().Column(a), net.post().Column(b));
}

}  // namespace

DegreeMultiset Degrees(const PlaceTransitionNet& net, DegreeSide side) {
  net.RequireSealed("degree computation");
  DegreeMultiset degrees;
  degrees.side = side;
  degrees.counts.resize(net.num_places());
  for (std::uint32_t p = 0; p < net.num_places(); ++p) {
    std::uint64_t count = 0;
    if (side != DegreeSide::kPost) count += net.pre().RowNnz(p);
    if (side != DegreeSide::kPre) count += net.post().RowNnz(p);
    degrees.counts[p] = count;
  }
  return degrees;
}

std::vector<CcdfPoint> Ccdf(std::span<const std::uint64_t> values) {
  if (values.empty()) throw DomainError("CCDF of an empty sample");
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());

  std::vector<CcdfPoint> points;
  auto emit = [&](std::uint64_t x) {
    const auto above = static_cast<double>(
        sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x));
    points.push_back({x, above / n});
  };
  if (sorted.front() != 0) emit(0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) emit(sorted[i]);
  }
  return points;
}

std::vector<ActivityEntry> TopKActive(const PlaceTransitionNet& net,
                                      std::size_t k) {
  net.RequireSealed("activity ranking");
  if (k == 0) throw DomainError("top-k requires k >= 1");
  std::vector<ActivityEntry> entries(net.num_places());
  for (std::uint32_t p = 0; p < net.num_places(); ++p) {
    entries[p] = {PlaceId{p}, net.pre().RowNnz(p), net.post().RowNnz(p)};
  }
  const std::size_t keep = std::min(k, entries.size());
  std::partial_sort(
      entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(keep),
      entries.end(), [](const ActivityEntry& a, const ActivityEntry& b) {
        const std::uint64_t sa = std::uint64_t{a.pre_nnz} + a.post_nnz;
        const std::uint64_t sb = std::uint64_t{b.pre_nnz} + b.post_nnz;
        return sa != sb ? sa > sb : a.place < b.place;
      });
  entries.resize(keep);
  return entries;
}

std::vector<PlaceId> AccumulateOnly(const PlaceTransitionNet& net) {
  net.RequireSealed("accumulate-only search");
  std::vector<PlaceId> out;
  for (std::uint32_t p = 0; p < net.num_places(); ++p) {
    if (net.pre().RowNnz(p) == 0 && net.post().RowNnz(p) > 0) {
      out.push_back(PlaceId{p});
    }
  }
  return out;
}

RepeatGroups RepeatedGroups(const PlaceTransitionNet& net) {
  net.RequireSealed("repeat grouping");
  const std::uint32_t n = net.num_transitions();
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(n);
  for (std::uint32_t t = 0; t < n; ++t) keyed[t] = {ColumnHash(net, t), t};
  std::sort(keyed.begin(), keyed.end());

  RepeatGroups result;
  result.num_transitions = n;
  std::vector<std::vector<TransitionId>> buckets;
  for (std::size_t begin = 0; begin < keyed.size();) {
    std::size_t end = begin + 1;
    while (end < keyed.size() && keyed[end].first == keyed[begin].first) ++end;
    if (end - begin > 1) {
      // Hash collisions are split by exact comparison against the first
      // member of each candidate group.
      buckets.clear();
      for (std::size_t i = begin; i < end; ++i) {
        const std::uint32_t t = keyed[i].second;
        auto it = std::find_if(buckets.begin(), buckets.end(),
                               [&](const std::vector<TransitionId>& g) {
                                 return SameColumns(net, g.front().value, t);
                               });
        if (it == buckets.end()) {
          buckets.push_back({TransitionId{t}});
        } else {
          it->push_back(TransitionId{t});
        }
      }
      for (auto& group : buckets) {
        if (group.size() < 2) continue;
        result.repetition_count += group.size() - 1;
        result.groups.push_back(std::move(group));
      }
    }
    begin = end;
  }
  std::sort(result.groups.begin(), result.groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

SummaryReport Summarize(const PlaceTransitionNet& net) {
  net.RequireSealed("summary");
  SummaryReport summary;
  summary.places = net.num_places();
  summary.transitions = net.num_transitions();
  summary.pre_arcs = net.pre().nnz();
  summary.post_arcs = net.post().nnz();
  summary.accumulate_only = AccumulateOnly(net).size();
  summary.disposable = DisposableAddresses(net).size();
  return summary;
}

}  // namespace chainpetri
