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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chainpetri/ids.h"
#include "chainpetri/sparse_incidence.h"

namespace chainpetri {

// Address-level nets hold binary incidence; entity-level nets hold the row
// sums of their members and may carry entries greater than one.
enum class NetLevel { kAddress, kEntity };

// A place/transition net N = (P, T, Pre, Post) over blockchain data:
// places are addresses (or entities), transitions are transactions.
//
// Lifecycle: the net is mutable until Seal(); every analysis requires a
// sealed net, which is immutable and safe to share between threads.
class PlaceTransitionNet {
 public:
  PlaceTransitionNet() = default;

  // Assembles a sealed net from its parts. Throws std::invalid_argument
  // when dimensions disagree or labels repeat.
  static PlaceTransitionNet FromParts(std::vector<std::string> places,
                                      std::vector<std::string> transitions,
                                      SparseIncidence pre, SparseIncidence post,
                                      NetLevel level);

  // Returns the place of `address`, allocating the next id on first sight.
  PlaceId InternAddress(std::string_view address);

  // Appends one transition. Repeated addresses within one side collapse to
  // a single arc of weight 1. An empty input list denotes a coinbase.
  TransitionId RecordTransaction(std::string_view tx_id,
                                 std::span<const std::string> inputs,
                                 std::span<const std::string> outputs);

  void Seal();
  bool sealed() const { return sealed_; }
  NetLevel level() const { return level_; }

  std::uint32_t num_places() const {
    return static_cast<std::uint32_t>(places_.size());
  }
  std::uint32_t num_transitions() const {
    return static_cast<std::uint32_t>(transitions_.size());
  }

  const std::string& address(PlaceId p) const;
  const std::string& tx_id(TransitionId t) const;
  const std::vector<std::string>& places() const { return places_; }
  const std::vector<std::string>& transitions() const { return transitions_; }
  std::optional<PlaceId> FindPlace(std::string_view address) const;
  std::optional<TransitionId> FindTransition(std::string_view tx_id) const;

  const SparseIncidence& incidence(Side side) const {
    return side == Side::kPre ? pre_ : post_;
  }
  const SparseIncidence& pre() const { return pre_; }
  const SparseIncidence& post() const { return post_; }

  // Number of distinct transitions linked to `p` on `side`.
  std::uint32_t RowNnz(Side side, PlaceId p) const;

  // Places with a nonzero entry in column `t`, ascending.
  std::vector<PlaceId> ColumnPlaces(Side side, TransitionId t) const;
  std::span<const SparseIncidence::Entry> Column(Side side,
                                                 TransitionId t) const;

  // Transitions linked to `p`, ascending. Requires a sealed net.
  std::span<const SparseIncidence::Entry> Row(Side side, PlaceId p) const;

  // Receives minus spends of an address. Under the binary model this is
  // the unspent-output count whenever no address is reused.
  std::int64_t UtxoCount(PlaceId p) const;

  // Throws LifecycleError naming `operation` unless the net is sealed.
  void RequireSealed(std::string_view operation) const;

  friend bool operator==(const PlaceTransitionNet& a,
                         const PlaceTransitionNet& b) {
    return a.sealed_ == b.sealed_ && a.level_ == b.level_ &&
           a.places_ == b.places_ && a.transitions_ == b.transitions_ &&
           a.pre_ == b.pre_ && a.post_ == b.post_;
  }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using Registry = std::unordered_map<std::string, std::uint32_t, StringHash,
                                      std::equal_to<>>;

  void CheckPlace(PlaceId p) const;
  void CheckTransition(TransitionId t) const;

  bool sealed_ = false;
  NetLevel level_ = NetLevel::kAddress;
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  Registry place_index_;
  Registry transition_index_;
  SparseIncidence pre_;
  SparseIncidence post_;
};

}  // namespace chainpetri
