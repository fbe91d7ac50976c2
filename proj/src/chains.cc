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

#include "chainpetri/chains.h"

#include <algorithm>
#include <string>

#include "chainpetri/errors.h"

namespace chainpetri {
namespace {

bool Contains(const std::vector<bool>& mask, std::uint32_t i) {
  return i < mask.size() && mask[i];
}

// Disposable transactions spending a disposable output of `t`, ascending.
std::vector<std::uint32_t> Successors(const PlaceTransitionNet& net,
                                      const std::vector<bool>& disposable,
                                      const std::vector<bool>& in_set,
                                      std::uint32_t t) {
  std::vector<std::uint32_t> out;
  for (const auto& e : net.post().Column(t)) {
    if (!disposable[e.index]) continue;
    const auto spends = net.pre().Row(e.index);
    if (spends.size() == 1 && Contains(in_set, spends[0].index)) {
      out.push_back(spends[0].index);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PlaceId> DisposableAddresses(const PlaceTransitionNet& net) {
  net.RequireSealed("disposable address search");
  std::vector<PlaceId> out;
  for (std::uint32_t p = 0; p < net.num_places(); ++p) {
    if (net.pre().RowNnz(p) == 1 && net.post().RowNnz(p) == 1) {
      out.push_back(PlaceId{p});
    }
  }
  return out;
}

std::optional<TransitionId> PreviousTransaction(const PlaceTransitionNet& net,
                                                TransitionId t) {
  net.RequireSealed("previous transaction lookup");
  const auto inputs = net.Column(Side::kPre, t);
  if (inputs.size() != 1) return std::nullopt;
  const auto funders = net.post().Row(inputs[0].index);
  if (funders.size() != 1) return std::nullopt;
  return TransitionId{funders[0].index};
}

DisposableSets DisposableTransactions(const PlaceTransitionNet& net,
                                      std::vector<PlaceId> addresses) {
  net.RequireSealed("disposable transaction search");
  std::sort(addresses.begin(), addresses.end());
  std::vector<bool> disposable(net.num_places(), false);
  for (PlaceId p : addresses) disposable.at(p.value) = true;

  DisposableSets sets;
  std::vector<bool> in_set(net.num_transitions(), false);
  for (std::uint32_t t = 0; t < net.num_transitions(); ++t) {
    const auto inputs = net.pre().Column(t);
    const auto outputs = net.post().Column(t);
    if (inputs.size() != 1 || outputs.size() != 2) continue;
    if (!disposable[inputs[0].index]) continue;
    if (!disposable[outputs[0].index] && !disposable[outputs[1].index]) {
      continue;
    }
    in_set[t] = true;
    sets.transactions.push_back(TransitionId{t});
  }
  for (TransitionId t : sets.transactions) {
    const auto prev = PreviousTransaction(net, t);
    if (!prev || !in_set[prev->value]) sets.starts.push_back(t);
  }
  sets.addresses = std::move(addresses);
  return sets;
}

ChainSet BuildChains(const PlaceTransitionNet& net,
                     const DisposableSets& sets) {
  net.RequireSealed("chain construction");
  std::vector<bool> disposable(net.num_places(), false);
  for (PlaceId p : sets.addresses) disposable.at(p.value) = true;
  std::vector<bool> in_set(net.num_transitions(), false);
  for (TransitionId t : sets.transactions) in_set.at(t.value) = true;

  ChainSet result;
  std::vector<bool> visited(net.num_transitions(), false);
  for (TransitionId start : sets.starts) {
    Chain chain;
    std::uint32_t current = start.value;
    while (true) {
      if (visited[current]) {
        throw IntegrityError("transaction '" + net.transitions()[current] +
                             "' reached twice while building chains");
      }
      visited[current] = true;
      chain.links.push_back(TransitionId{current});
      const auto next = Successors(net, disposable, in_set, current);
      if (next.empty()) break;
      for (std::size_t i = 1; i < next.size(); ++i) {
        result.bypassed.push_back({TransitionId{current}, TransitionId{next[0]},
                                   TransitionId{next[i]}});
      }
      current = next[0];
    }
    result.chains.push_back(std::move(chain));
  }

  // Every unvisited disposable transaction has its predecessor inside the
  // set; walking predecessors must end at a visited transaction (an orphan
  // behind a bypassed successor) or the relation contains a cycle.
  std::vector<std::uint8_t> state(net.num_transitions(), 0);  // 1 walking, 2 ok
  std::vector<std::uint32_t> walk;
  for (TransitionId t : sets.transactions) {
    if (visited[t.value] || state[t.value] == 2) continue;
    walk.clear();
    std::uint32_t current = t.value;
    while (!visited[current] && state[current] != 2) {
      if (state[current] == 1) {
        throw IntegrityError("cycle among disposable transactions through '" +
                             net.transitions()[current] + "'");
      }
      state[current] = 1;
      walk.push_back(current);
      const auto prev = PreviousTransaction(net, TransitionId{current});
      if (!prev || !in_set[prev->value]) break;
      current = prev->value;
    }
    for (std::uint32_t w : walk) state[w] = 2;
  }

  std::stable_sort(result.chains.begin(), result.chains.end(),
                   [](const Chain& a, const Chain& b) {
                     if (a.length() != b.length()) {
                       return a.length() > b.length();
                     }
                     return a.links.front() < b.links.front();
                   });
  return result;
}

}  // namespace chainpetri
