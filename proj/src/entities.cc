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

#include "chainpetri/entities.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "chainpetri/errors.h"

namespace chainpetri {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t Find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  void Union(std::uint32_t a, std::uint32_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

// Renumbers arbitrary per-place group labels into the canonical partition.
EntityPartition Canonicalize(const std::vector<std::uint32_t>& labels) {
  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> label_to_entity(labels.size(), kUnset);
  EntityPartition partition;
  partition.place_to_entity.resize(labels.size());
  for (std::uint32_t p = 0; p < labels.size(); ++p) {
    std::uint32_t& e = label_to_entity[labels[p]];
    if (e == kUnset) {
      e = static_cast<std::uint32_t>(partition.entities.size());
      partition.entities.emplace_back();
    }
    partition.entities[e].push_back(PlaceId{p});
    partition.place_to_entity[p] = e;
  }
  return partition;
}

}  // namespace

EntityPartition ComputeEntities(const PlaceTransitionNet& net) {
  net.RequireSealed("entity computation");
  DisjointSets sets(net.num_places());
  const SparseIncidence& pre = net.pre();
  for (std::uint32_t t = 0; t < pre.num_cols(); ++t) {
    const auto column = pre.Column(t);
    for (std::size_t i = 1; i < column.size(); ++i) {
      sets.Union(column[0].index, column[i].index);
    }
  }
  std::vector<std::uint32_t> labels(net.num_places());
  for (std::uint32_t p = 0; p < labels.size(); ++p) labels[p] = sets.Find(p);
  return Canonicalize(labels);
}

EntityPartition ComputeEntitiesByClosure(const PlaceTransitionNet& net) {
  net.RequireSealed("entity computation");
  constexpr std::uint32_t kUnassigned = ~0u;
  const SparseIncidence& pre = net.pre();
  std::vector<bool> explored(pre.num_cols(), false);
  std::vector<std::uint32_t> labels(net.num_places(), kUnassigned);
  std::uint32_t next_label = 0;
  std::vector<std::uint32_t> unexplored_places;

  for (std::uint32_t t = 0; t < pre.num_cols(); ++t) {
    if (explored[t]) continue;
    explored[t] = true;
    if (pre.ColumnNnz(t) == 0) continue;  // coinbase: no owner to infer
    const std::uint32_t label = next_label++;
    unexplored_places.clear();
    for (const auto& e : pre.Column(t)) {
      if (labels[e.index] == kUnassigned) {
        labels[e.index] = label;
        unexplored_places.push_back(e.index);
      }
    }
    while (!unexplored_places.empty()) {
      const std::uint32_t p = unexplored_places.back();
      unexplored_places.pop_back();
      for (const auto& spend : pre.Row(p)) {
        if (explored[spend.index]) continue;
        explored[spend.index] = true;
        for (const auto& e : pre.Column(spend.index)) {
          if (labels[e.index] == kUnassigned) {
            labels[e.index] = label;
            unexplored_places.push_back(e.index);
          }
        }
      }
    }
  }
  // Places that never spend are only reachable as outputs.
  for (auto& label : labels) {
    if (label == kUnassigned) label = next_label++;
  }
  return Canonicalize(labels);
}

std::string EntityLabel(std::uint32_t index) {
  return "entity-" + std::to_string(index);
}

EntityNet BuildEntityNet(const PlaceTransitionNet& net,
                         const EntityPartition& partition) {
  net.RequireSealed("entity net construction");
  if (partition.place_to_entity.size() != net.num_places()) {
    throw ConsistencyError(
        "partition covers " + std::to_string(partition.place_to_entity.size()) +
        " places but the net has " + std::to_string(net.num_places()));
  }
  std::size_t covered = 0;
  for (std::uint32_t e = 0; e < partition.entities.size(); ++e) {
    if (partition.entities[e].empty()) {
      throw ConsistencyError("entity " + std::to_string(e) + " is empty");
    }
    for (PlaceId p : partition.entities[e]) {
      if (p.value >= net.num_places()) {
        throw ConsistencyError("unknown place " + std::to_string(p.value));
      }
      if (partition.place_to_entity[p.value] != e) {
        throw ConsistencyError("place " + std::to_string(p.value) +
                               " is not mapped to entity " + std::to_string(e));
      }
    }
    covered += partition.entities[e].size();
  }
  if (covered != net.num_places()) {
    throw ConsistencyError("partition entities do not cover the net exactly");
  }

  const auto num_entities = static_cast<std::uint32_t>(partition.size());
  SparseIncidence pre(num_entities);
  SparseIncidence post(num_entities);
  std::vector<SparseIncidence::Entry> column;
  for (std::uint32_t t = 0; t < net.num_transitions(); ++t) {
    for (Side side : {Side::kPre, Side::kPost}) {
      column.clear();
      for (const auto& e : net.Column(side, TransitionId{t})) {
        column.push_back({partition.place_to_entity[e.index], e.value});
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.index < b.index; });
      // Sum the member rows: merge runs of the same entity.
      std::size_t out = 0;
      for (std::size_t i = 0; i < column.size(); ++i) {
        if (out > 0 && column[out - 1].index == column[i].index) {
          column[out - 1].value += column[i].value;
        } else {
          column[out++] = column[i];
        }
      }
      column.resize(out);
      (side == Side::kPre ? pre : post).AppendColumn(column);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(num_entities);
  for (std::uint32_t e = 0; e < num_entities; ++e) {
    labels.push_back(EntityLabel(e));
  }
  return {PlaceTransitionNet::FromParts(std::move(labels), net.transitions(),
                                        std::move(pre), std::move(post),
                                        NetLevel::kEntity),
          partition.entities};
}

std::vector<TransitionId> CyclicTransitions(const PlaceTransitionNet& net) {
  std::vector<TransitionId> out;
  for (std::uint32_t t = 0; t < net.num_transitions(); ++t) {
    const auto in = net.Column(Side::kPre, TransitionId{t});
    const auto outs = net.Column(Side::kPost, TransitionId{t});
    auto a = in.begin();
    auto b = outs.begin();
    while (a != in.end() && b != outs.end()) {
      if (a->index == b->index) {
        out.push_back(TransitionId{t});
        break;
      }
      a->index < b->index ? ++a : ++b;
    }
  }
  return out;
}

}  // namespace chainpetri
