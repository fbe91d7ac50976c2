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

#include <set>

#include "chainpetri/analytics.h"
#include "chainpetri/errors.h"
#include "chainpetri/ingest.h"
#include "chainpetri/synthetic.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace chainpetri {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

using Tx =
    std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>;

PlaceTransitionNet NetOf(const std::vector<Tx>& txs) {
  PlaceTransitionNet net;
  for (const auto& [id, in, out] : txs) net.RecordTransaction(id, in, out);
  net.Seal();
  return net;
}

TransitionId T(std::uint32_t i) { return TransitionId{i}; }

std::vector<std::vector<std::string>> ChainTxIds(const PlaceTransitionNet& net,
                                                 const ChainSet& set) {
  std::vector<std::vector<std::string>> out;
  for (const Chain& c : set.chains) {
    std::vector<std::string> ids;
    for (TransitionId t : c.links) ids.push_back(net.tx_id(t));
    out.push_back(std::move(ids));
  }
  return out;
}

ChainSet Chains(const PlaceTransitionNet& net) {
  return BuildChains(net,
                     DisposableTransactions(net, DisposableAddresses(net)));
}

TEST(DisposableAddressesTest, WorkedExample) {
  // a1 is received twice (t1, t2), so only a3 and a6 qualify.
  const auto net = testing::WorkedExampleNet();
  EXPECT_THAT(DisposableAddresses(net), ElementsAre(PlaceId{2}, PlaceId{5}));
}

TEST(DisposableAddressesTest, EmptyNet) {
  PlaceTransitionNet net;
  net.Seal();
  EXPECT_THAT(DisposableAddresses(net), IsEmpty());
}

TEST(DisposableTransactionsTest, WorkedExampleHasNone) {
  const auto net = testing::WorkedExampleNet();
  const auto sets = DisposableTransactions(net, DisposableAddresses(net));
  EXPECT_THAT(sets.transactions, IsEmpty());
  EXPECT_THAT(sets.starts, IsEmpty());
  EXPECT_THAT(Chains(net).chains, IsEmpty());
}

TEST(DisposableTransactionsTest, CoinbasesOnly) {
  const auto net = NetOf({{"c1", {}, {"a", "b"}}, {"c2", {}, {"c"}}});
  const auto sets = DisposableTransactions(net, DisposableAddresses(net));
  EXPECT_THAT(sets.transactions, IsEmpty());
  EXPECT_THAT(sets.starts, IsEmpty());
}

TEST(BuildChainsTest, HandBuiltChainOfTwo) {
  const auto net = NetOf({{"cb", {}, {"a0"}},
                          {"l1", {"a0"}, {"a1", "c1"}},
                          {"l2", {"a1"}, {"c2", "a2"}},
                          {"sink", {"a2"}, {"s"}}});
  const auto sets = DisposableTransactions(net, DisposableAddresses(net));
  EXPECT_THAT(sets.transactions, ElementsAre(T(1), T(2)));
  EXPECT_THAT(sets.starts, ElementsAre(T(1)));
  EXPECT_EQ(PreviousTransaction(net, T(2)), T(1));
  EXPECT_EQ(PreviousTransaction(net, T(1)), T(0));
  const ChainSet chains = BuildChains(net, sets);
  EXPECT_EQ(ChainTxIds(net, chains),
            (std::vector<std::vector<std::string>>{{"l1", "l2"}}));
  EXPECT_THAT(chains.bypassed, IsEmpty());
}

TEST(BuildChainsTest, SingleLinkChainIsKept) {
  const auto net = NetOf({{"cb", {}, {"a0"}},
                          {"l1", {"a0"}, {"a1", "c1"}},
                          {"sink", {"a1"}, {"s"}}});
  EXPECT_EQ(ChainTxIds(net, Chains(net)),
            (std::vector<std::vector<std::string>>{{"l1"}}));
}

TEST(BuildChainsTest, AmbiguousSuccessorFollowsSmallestId) {
  const auto net = NetOf({{"cb", {}, {"a0"}},
                          {"fork", {"a0"}, {"x", "y"}},
                          {"ly", {"y"}, {"y2", "cy"}},
                          {"lx", {"x"}, {"x2", "cx"}},
                          {"sx", {"x2"}, {"s1"}},
                          {"sy", {"y2"}, {"s2"}}});
  const ChainSet chains = Chains(net);
  EXPECT_EQ(ChainTxIds(net, chains),
            (std::vector<std::vector<std::string>>{{"fork", "ly"}}));
  EXPECT_THAT(chains.bypassed,
              ElementsAre(BypassedSuccessor{T(1), T(2), T(3)}));
}

TEST(BuildChainsTest, CycleIsAnIntegrityError) {
  // Only possible on temporally invalid input: a funds b and b funds a.
  const auto net =
      NetOf({{"t0", {"a"}, {"b", "c"}}, {"t1", {"b"}, {"a", "d"}}});
  const auto sets = DisposableTransactions(net, DisposableAddresses(net));
  EXPECT_THAT(sets.transactions, ElementsAre(T(0), T(1)));
  EXPECT_THAT(sets.starts, IsEmpty());
  EXPECT_THROW(BuildChains(net, sets), IntegrityError);
}

TEST(BuildChainsTest, EmptySetGivesNoChains) {
  const auto net = testing::WorkedExampleNet();
  EXPECT_THAT(BuildChains(net, DisposableSets{}).chains, IsEmpty());
}

TEST(BuildChainsTest, RecoversPlantedChains) {
  GeneratorConfig config;
  config.chain_lengths = {3, 5, 2};
  config.entity_sizes = {3, 4};
  config.fillers = 200;
  const auto synthetic = GenerateSynthetic(config, 11);
  const auto [net, report] = Ingest(synthetic.blocks, IngestMode::kStrict);
  ASSERT_EQ(report.rejects, 0u);

  const auto sets = DisposableTransactions(net, DisposableAddresses(net));
  EXPECT_EQ(sets.transactions.size(), 10u);
  EXPECT_EQ(sets.starts.size(), 3u);
  const ChainSet chains = BuildChains(net, sets);
  ASSERT_EQ(chains.chains.size(), 3u);
  EXPECT_EQ(chains.chains[0].length(), 5u);
  EXPECT_EQ(chains.chains[1].length(), 3u);
  EXPECT_EQ(chains.chains[2].length(), 2u);
  std::set<std::vector<std::string>> recovered, planted;
  for (auto& c : ChainTxIds(net, chains)) recovered.insert(c);
  for (auto& c : synthetic.truth.planted_chains) planted.insert(c);
  EXPECT_EQ(recovered, planted);
}

TEST(BuildChainsTest, SingleChainShape) {
  GeneratorConfig config;
  config.chain_lengths = {3};
  const auto synthetic = GenerateSynthetic(config, 7);
  ASSERT_EQ(synthetic.truth.planted_chains.size(), 1u);
  ASSERT_EQ(synthetic.truth.planted_chains[0].size(), 3u);
  const auto [net, report] = Ingest(synthetic.blocks);
  const auto sets = DisposableTransactions(net, DisposableAddresses(net));
  EXPECT_EQ(sets.transactions.size(), 3u);
  EXPECT_EQ(sets.starts.size(), 1u);
  EXPECT_EQ(ChainTxIds(net, BuildChains(net, sets)),
            synthetic.truth.planted_chains);
  // Every intermediate planted address is disposable.
  EXPECT_EQ(DisposableAddresses(net).size(), 4u);
}

TEST(BuildChainsTest, ChainInvariantsOnLargerRun) {
  GeneratorConfig config;
  for (std::uint32_t i = 1; i <= 40; ++i) config.chain_lengths.push_back(i);
  config.entity_sizes = {2, 2, 6, 10};
  config.repeat_group_sizes = {2, 4};
  config.fillers = 3000;
  const auto synthetic = GenerateSynthetic(config, 99);
  const auto [net, report] = Ingest(synthetic.blocks);
  const auto addresses = DisposableAddresses(net);
  const std::set<PlaceId> disposable(addresses.begin(), addresses.end());
  const ChainSet chains = Chains(net);
  ASSERT_EQ(chains.chains.size(), 40u);

  std::set<TransitionId> used;
  std::vector<std::uint64_t> lengths;
  for (const Chain& chain : chains.chains) {
    lengths.push_back(chain.length());
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
      EXPECT_TRUE(used.insert(chain.links[i]).second);
      if (i == 0) continue;
      EXPECT_LT(chain.links[i - 1], chain.links[i]);
      // The successor's sole input is a disposable output of its predecessor.
      const auto in = net.ColumnPlaces(Side::kPre, chain.links[i]);
      ASSERT_EQ(in.size(), 1u);
      EXPECT_TRUE(disposable.contains(in[0]));
      const auto out = net.ColumnPlaces(Side::kPost, chain.links[i - 1]);
      EXPECT_TRUE(std::find(out.begin(), out.end(), in[0]) != out.end());
    }
  }
  EXPECT_TRUE(std::is_sorted(lengths.rbegin(), lengths.rend()));

  // Chain-length CCDF is non-increasing and reaches zero at the maximum.
  const auto ccdf = Ccdf(lengths);
  for (std::size_t i = 1; i < ccdf.size(); ++i) {
    EXPECT_LE(ccdf[i].probability, ccdf[i - 1].probability);
  }
  EXPECT_EQ(ccdf.back().x, 40u);
  EXPECT_EQ(ccdf.back().probability, 0.0);
}

TEST(BuildChainsTest, Deterministic) {
  GeneratorConfig config;
  config.chain_lengths = {4, 4, 1};
  config.fillers = 100;
  const auto synthetic = GenerateSynthetic(config, 5);
  const auto [net, report] = Ingest(synthetic.blocks);
  const ChainSet a = Chains(net);
  const ChainSet b = Chains(net);
  EXPECT_EQ(a.chains, b.chains);
}

}  // namespace
}  // namespace chainpetri
