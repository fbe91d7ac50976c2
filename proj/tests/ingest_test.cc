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

#include "chainpetri/ingest.h"

#include "chainpetri/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace chainpetri {
namespace {

TEST(IngestTest, WorkedExampleLax) {
  const auto blocks = testing::WorkedExampleBlocks();
  const auto [net, report] = Ingest(blocks);
  EXPECT_TRUE(net.sealed());
  EXPECT_EQ(report.blocks, 2u);
  EXPECT_EQ(report.addresses, 6u);
  EXPECT_EQ(report.transactions, 7u);
  EXPECT_EQ(report.pre_arcs, 5u);
  EXPECT_EQ(report.post_arcs, 10u);
  EXPECT_EQ(report.rejects, 0u);
  EXPECT_EQ(testing::Dense(net.pre()), testing::kWorkedPre);
  EXPECT_EQ(testing::Dense(net.post()), testing::kWorkedPost);
}

TEST(IngestTest, WorkedExampleIsStrictlyValid) {
  const auto blocks = testing::WorkedExampleBlocks();
  const auto lax = Ingest(blocks, IngestMode::kLax);
  const auto strict = Ingest(blocks, IngestMode::kStrict);
  EXPECT_EQ(strict.report.rejects, 0u);
  EXPECT_EQ(strict.net, lax.net);
}

TEST(IngestTest, EmptyStream) {
  const auto [net, report] = Ingest({});
  EXPECT_TRUE(net.sealed());
  EXPECT_EQ(net.num_places(), 0u);
  EXPECT_EQ(report, IngestReport{});
}

TEST(IngestTest, StrictRejectsSpendOfUnfundedAddress) {
  const std::vector<Block> blocks = {
      {1, {{"A", {}, {"x"}}, {"B", {"never-paid"}, {"y"}}}},
      {2, {{"C", {"x"}, {"z"}}}}};
  const auto [net, report] = Ingest(blocks, IngestMode::kStrict);
  EXPECT_EQ(report.rejects, 1u);
  ASSERT_EQ(report.rejections.size(), 1u);
  EXPECT_EQ(report.rejections[0].tx_id, "B");
  EXPECT_EQ(report.rejections[0].height, 1u);
  EXPECT_EQ(net.num_transitions(), 2u);
  EXPECT_FALSE(net.FindPlace("never-paid").has_value());
  EXPECT_FALSE(net.FindPlace("y").has_value());

  const auto lax = Ingest(blocks, IngestMode::kLax);
  EXPECT_EQ(lax.report.rejects, 0u);
  EXPECT_EQ(lax.net.num_transitions(), 3u);
}

TEST(IngestTest, StrictRejectsDoubleSpendUnderBinaryModel) {
  const std::vector<Block> blocks = {
      {1, {{"fund", {}, {"x"}}, {"s1", {"x"}, {"y"}}, {"s2", {"x"}, {"z"}}}}};
  const auto [net, report] = Ingest(blocks, IngestMode::kStrict);
  ASSERT_EQ(report.rejects, 1u);
  EXPECT_EQ(report.rejections[0].tx_id, "s2");
}

TEST(IngestTest, HeightsMustStrictlyIncrease) {
  const std::vector<Block> equal = {{5, {}}, {5, {}}};
  EXPECT_THROW(Ingest(equal), OrderingError);
  const std::vector<Block> decreasing = {{5, {}}, {4, {}}};
  EXPECT_THROW(Ingest(decreasing), OrderingError);
}

TEST(IngestTest, DuplicateTransactionIdsAreSkippedAndReported) {
  const std::vector<Block> blocks = {{1, {{"cb", {}, {"m"}}}},
                                     {2, {{"cb", {}, {"m"}}}}};
  for (IngestMode mode : {IngestMode::kLax, IngestMode::kStrict}) {
    const auto [net, report] = Ingest(blocks, mode);
    EXPECT_EQ(net.num_transitions(), 1u);
    EXPECT_EQ(report.duplicates, 1u);
    EXPECT_EQ(report.rejects, 0u);
  }
}

TEST(IngestTest, MalformedTransactionIsFatal) {
  const std::vector<Block> blocks = {{1, {{"bad", {}, {}}}}};
  EXPECT_THROW(Ingest(blocks), MalformedTransactionError);
}

}  // namespace
}  // namespace chainpetri
