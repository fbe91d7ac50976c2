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

#include <compare>
#include <cstdint>
#include <functional>
#include <string_view>

namespace chainpetri {

// Dense index of a place (one per address, or one per entity on entity nets).
struct PlaceId {
  std::uint32_t value = 0;
  friend auto operator<=>(const PlaceId&, const PlaceId&) = default;
};

// Dense index of a transition, in ingestion order.
struct TransitionId {
  std::uint32_t value = 0;
  friend auto operator<=>(const TransitionId&, const TransitionId&) = default;
};

// Which incidence function a query reads: Pre (place -> transition arcs,
// i.e. spends) or Post (transition -> place arcs, i.e. receives).
enum class Side { kPre, kPost };

constexpr std::string_view SideName(Side side) {
  return side == Side::kPre ? "pre" : "post";
}

}  // namespace chainpetri

template <>
struct std::hash<chainpetri::PlaceId> {
  std::size_t operator()(chainpetri::PlaceId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

template <>
struct std::hash<chainpetri::TransitionId> {
  std::size_t operator()(chainpetri::TransitionId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
