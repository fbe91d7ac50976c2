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

#include <optional>
#include <vector>

#include "chainpetri/ids.h"
#include "chainpetri/net.h"

namespace chainpetri {

// Disposable addresses are received once and spent once. A disposable
// transaction spends a single disposable address and pays exactly two
// addresses, at least one of them disposable.
struct DisposableSets {
  std::vector<PlaceId> addresses;          // ascending
  std::vector<TransitionId> transactions;  // ascending
  std::vector<TransitionId> starts;        // ascending, subset of above
};

struct Chain {
  std::vector<TransitionId> links;  // execution order
  std::size_t length() const { return links.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

// A successor that was not followed because a transaction had two
// disposable outputs each spent by a disposable transaction.
struct BypassedSuccessor {
  TransitionId from;
  TransitionId followed;
  TransitionId bypassed;
  friend bool operator==(const BypassedSuccessor&,
                         const BypassedSuccessor&) = default;
};

struct ChainSet {
  // Sorted by descending length, ties by first link.
  std::vector<Chain> chains;
  std::vector<BypassedSuccessor> bypassed;
};

// Places with exactly one pre arc and exactly one post arc.
std::vector<PlaceId> DisposableAddresses(const PlaceTransitionNet& net);

DisposableSets DisposableTransactions(const PlaceTransitionNet& net,
                                      std::vector<PlaceId> addresses);

// Starts one chain at every start transaction and extends it through NEXT
// until no disposable successor remains. When two successors exist the
// smaller transition id is followed. Throws IntegrityError when the
// successor relation is cyclic.
ChainSet BuildChains(const PlaceTransitionNet& net, const DisposableSets& sets);

// Funding transaction of the single input of `t`, if unique.
std::optional<TransitionId> PreviousTransaction(const PlaceTransitionNet& net,
                                                TransitionId t);

}  // namespace chainpetri
