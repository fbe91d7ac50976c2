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

#include "chainpetri/net.h"

#include <algorithm>
#include <stdexcept>

#include "chainpetri/errors.h"

namespace chainpetri {
namespace {

// Collapses an address list into weight-1 column entries.
void CollectColumn(PlaceTransitionNet& net,
                   std::span<const std::string> addresses,
                   std::vector<SparseIncidence::Entry>& column) {
  column.clear();
  for (const std::string& address : addresses) {
    column.push_back({net.InternAddress(address).value, 1});
  }
  std::sort(column.begin(), column.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  column.erase(std::unique(column.begin(), column.end()), column.end());
}

}  // namespace

PlaceTransitionNet PlaceTransitionNet::FromParts(
    std::vector<std::string> places, std::vector<std::string> transitions,
    SparseIncidence pre, SparseIncidence post, NetLevel level) {
  if (pre.num_rows() != places.size() || post.num_rows() != places.size()) {
    throw std::invalid_argument("incidence rows do not match place count");
  }
  if (pre.num_cols() != transitions.size() ||
      post.num_cols() != transitions.size()) {
    throw std::invalid_argument(
        "incidence columns do not match transition count");
  }
  PlaceTransitionNet net;
  net.level_ = level;
  net.place_index_.reserve(places.size());
  for (std::uint32_t i = 0; i < places.size(); ++i) {
    if (!net.place_index_.emplace(places[i], i).second) {
      throw std::invalid_argument("duplicate place label '" + places[i] + "'");
    }
  }
  net.transition_index_.reserve(transitions.size());
  for (std::uint32_t i = 0; i < transitions.size(); ++i) {
    if (!net.transition_index_.emplace(transitions[i], i).second) {
      throw std::invalid_argument("duplicate transition label '" +
                                  transitions[i] + "'");
    }
  }
  net.places_ = std::move(places);
  net.transitions_ = std::move(transitions);
  net.pre_ = std::move(pre);
  net.post_ = std::move(post);
  net.Seal();
  return net;
}

PlaceId PlaceTransitionNet::InternAddress(std::string_view address) {
  if (sealed_) throw LifecycleError("cannot intern an address in a sealed net");
  if (address.empty()) {
    throw MalformedTransactionError("address must be non-empty");
  }
  if (auto it = place_index_.find(address); it != place_index_.end()) {
    return PlaceId{it->second};
  }
  const auto id = static_cast<std::uint32_t>(places_.size());
  places_.emplace_back(address);
  place_index_.emplace(places_.back(), id);
  pre_.AddRows(1);
  post_.AddRows(1);
  return PlaceId{id};
}

TransitionId PlaceTransitionNet::RecordTransaction(
    std::string_view tx_id, std::span<const std::string> inputs,
    std::span<const std::string> outputs) {
  if (sealed_) {
    throw LifecycleError("cannot record a transaction in a sealed net");
  }
  if (tx_id.empty()) {
    throw MalformedTransactionError("transaction id must be non-empty");
  }
  if (outputs.empty()) {
    throw MalformedTransactionError("transaction '" + std::string(tx_id) +
                                    "' has no outputs");
  }
  for (auto side : {inputs, outputs}) {
    for (const std::string& a : side) {
      if (a.empty()) {
        throw MalformedTransactionError("transaction '" + std::string(tx_id) +
                                        "' has an empty address");
      }
    }
  }
  if (transition_index_.contains(tx_id)) {
    throw DuplicateTransactionError(std::string(tx_id));
  }

  std::vector<SparseIncidence::Entry> column;
  column.reserve(std::max(inputs.size(), outputs.size()));
  CollectColumn(*this, inputs, column);
  pre_.AppendColumn(column);
  CollectColumn(*this, outputs, column);
  post_.AppendColumn(column);

  const auto id = static_cast<std::uint32_t>(transitions_.size());
  transitions_.emplace_back(tx_id);
  transition_index_.emplace(transitions_.back(), id);
  return TransitionId{id};
}

void PlaceTransitionNet::Seal() {
  pre_.BuildRowIndex();
  post_.BuildRowIndex();
  sealed_ = true;
}

const std::string& PlaceTransitionNet::address(PlaceId p) const {
  CheckPlace(p);
  return places_[p.value];
}

const std::string& PlaceTransitionNet::tx_id(TransitionId t) const {
  CheckTransition(t);
  return transitions_[t.value];
}

std::optional<PlaceId> PlaceTransitionNet::FindPlace(
    std::string_view address) const {
  if (auto it = place_index_.find(address); it != place_index_.end()) {
    return PlaceId{it->second};
  }
  return std::nullopt;
}

std::optional<TransitionId> PlaceTransitionNet::FindTransition(
    std::string_view tx_id) const {
  if (auto it = transition_index_.find(tx_id); it != transition_index_.end()) {
    return TransitionId{it->second};
  }
  return std::nullopt;
}

std::uint32_t PlaceTransitionNet::RowNnz(Side side, PlaceId p) const {
  CheckPlace(p);
  return incidence(side).RowNnz(p.value);
}

std::vector<PlaceId> PlaceTransitionNet::ColumnPlaces(Side side,
                                                      TransitionId t) const {
  std::vector<PlaceId> out;
  for (const auto& e : Column(side, t)) out.push_back(PlaceId{e.index});
  return out;
}

std::span<const SparseIncidence::Entry> PlaceTransitionNet::Column(
    Side side, TransitionId t) const {
  CheckTransition(t);
  return incidence(side).Column(t.value);
}

std::span<const SparseIncidence::Entry> PlaceTransitionNet::Row(
    Side side, PlaceId p) const {
  RequireSealed("row scan");
  CheckPlace(p);
  return incidence(side).Row(p.value);
}

std::int64_t PlaceTransitionNet::UtxoCount(PlaceId p) const {
  if (level_ != NetLevel::kAddress) {
    throw DomainError("utxo count is defined on address-level nets only");
  }
  return static_cast<std::int64_t>(RowNnz(Side::kPost, p)) -
         static_cast<std::int64_t>(RowNnz(Side::kPre, p));
}

void PlaceTransitionNet::RequireSealed(std::string_view operation) const {
  if (!sealed_) {
    throw LifecycleError(std::string(operation) + " requires a sealed net");
  }
}

void PlaceTransitionNet::CheckPlace(PlaceId p) const {
  if (p.value >= places_.size()) {
    throw IndexError("place " + std::to_string(p.value) + " out of range [0, " +
                     std::to_string(places_.size()) + ")");
  }
}

void PlaceTransitionNet::CheckTransition(TransitionId t) const {
  if (t.value >= transitions_.size()) {
    throw IndexError("transition " + std::to_string(t.value) +
                     " out of range [0, " +
                     std::to_string(transitions_.size()) + ")");
  }
}

}  // namespace chainpetri
