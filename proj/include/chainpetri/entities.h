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
#include <vector>

#include "chainpetri/ids.h"
#include "chainpetri/net.h"

namespace chainpetri {

// Owner groups of addresses. Two places share an entity iff they are
// connected through transactions that spend from them together.
struct EntityPartition {
  // Members ascending; entities ordered by their smallest member.
  std::vector<std::vector<PlaceId>> entities;
  // Entity index of every place of the source net.
  std::vector<std::uint32_t> place_to_entity;

  std::size_t size() const { return entities.size(); }
  friend bool operator==(const EntityPartition&,
                         const EntityPartition&) = default;
};

// Common-input clustering with a disjoint-set forest over Pre columns.
// Places that never spend become singleton entities.
EntityPartition ComputeEntities(const PlaceTransitionNet& net);

// The same partition computed by the transition-driven closure: start from
// an unexplored transition, absorb its input places, and keep expanding
// through every other transition those places feed.
EntityPartition ComputeEntitiesByClosure(const PlaceTransitionNet& net);

// Net whose places are entities. Its Pre/Post rows are the element-wise
// sums of the member rows; transition ids and labels match the source.
struct EntityNet {
  PlaceTransitionNet net;
  std::vector<std::vector<PlaceId>> members;  // address-level places
};

// Throws ConsistencyError if `partition` does not cover exactly the
// places of `net`.
EntityNet BuildEntityNet(const PlaceTransitionNet& net,
                         const EntityPartition& partition);

// Label given to entity places: "entity-<index>".
std::string EntityLabel(std::uint32_t index);

// Transitions in which some place appears both as input and as output.
// On entity nets these are the transfers an owner makes to itself.
std::vector<TransitionId> CyclicTransitions(const PlaceTransitionNet& net);

}  // namespace chainpetri
