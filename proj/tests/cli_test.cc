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

// End-to-end tests that drive the command-line tool as a subprocess.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chainpetri/analytics.h"
#include "chainpetri/snapshot.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace chainpetri {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using ::testing::HasSubstr;
using ::testing::UnorderedElementsAre;

const fs::path kTool = CHAINPETRI_TOOL;
const fs::path kData = CHAINPETRI_TEST_DATA;

struct ToolRun {
  int exit_code = -1;
  std::string err;
};

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("chainpetri_cli_" + std::string(info->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with `args`; stdout goes to `stdout_file` under the
  // scratch directory.
  ToolRun Tool(const std::string& args, const std::string& env = "",
               const std::string& stdout_file = "stdout.txt") {
    const fs::path err = dir_ / "stderr.txt";
    const std::string command = env + " '" + kTool.string() + "' " + args +
                                " > '" + (dir_ / stdout_file).string() +
                                "' 2> '" + err.string() + "'";
    const int status = std::system(command.c_str());
    ToolRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.err = Slurp(err);
    return run;
  }

  std::string Path(const std::string& name) const {
    return "'" + (dir_ / name).string() + "'";
  }

  ToolRun BuildFixture(const std::string& snapshot = "worked.snap") {
    return Tool("build '" + (kData / "worked_example").string() + "' --out " +
                Path(snapshot) + " --no-timestamp");
  }

  fs::path dir_;
};

TEST_F(CliTest, BuildWorkedExample) {
  ASSERT_EQ(BuildFixture().exit_code, 0);
  const auto net = LoadSnapshot(dir_ / "worked.snap");
  EXPECT_EQ(Summarize(net), (SummaryReport{6, 7, 5, 10, 2, 2}));
  const json report = json::parse(Slurp(dir_ / "worked.snap.report.json"));
  EXPECT_EQ(report["transactions"], 7);
  EXPECT_EQ(report["blocks"], 2);
  EXPECT_FALSE(report.contains("generated_at"));
}

TEST_F(CliTest, ReportTimestampIsOptIn) {
  ASSERT_EQ(Tool("build '" + (kData / "worked_example").string() + "' --out " +
                 Path("a.snap") + " --report " + Path("r.json"))
                .exit_code,
            0);
  EXPECT_TRUE(json::parse(Slurp(dir_ / "r.json")).contains("generated_at"));
}

TEST_F(CliTest, RawblockMatchesCanonical) {
  ASSERT_EQ(BuildFixture().exit_code, 0);
  ASSERT_EQ(
      Tool("build '" + (kData / "worked_example_rawblock").string() +
           "' --format rawblock --out " + Path("raw.snap") + " --no-timestamp")
          .exit_code,
      0);
  EXPECT_EQ(Slurp(dir_ / "worked.snap"), Slurp(dir_ / "raw.snap"));
  const json report = json::parse(Slurp(dir_ / "raw.snap.report.json"));
  EXPECT_EQ(report["conversion"]["dropped_transactions"], 1);
}

TEST_F(CliTest, BuildIsDeterministicAcrossThreadCounts) {
  // A missing config file is an I/O failure.
  ASSERT_EQ(Tool("synth --config " + Path("c.json") + " --out " + Path("chain"))
                .exit_code,
            3);
  std::ofstream(dir_ / "c.json") << R"({"fillers": 3000, "chain_lengths": [4],
                                        "max_block_transactions": 7})";
  ASSERT_EQ(Tool("synth --config " + Path("c.json") + " --seed 5 --out " +
                 Path("chain"))
                .exit_code,
            0);
  ASSERT_EQ(Tool("build " + Path("chain") + " --out " + Path("one.snap") +
                     " --no-timestamp",
                 "CHAINPETRI_THREADS=1")
                .exit_code,
            0);
  ASSERT_EQ(Tool("build " + Path("chain") + " --out " + Path("many.snap") +
                     " --no-timestamp",
                 "CHAINPETRI_THREADS=8")
                .exit_code,
            0);
  EXPECT_EQ(Slurp(dir_ / "one.snap"), Slurp(dir_ / "many.snap"));
  EXPECT_EQ(Slurp(dir_ / "one.snap.report.json"),
            Slurp(dir_ / "many.snap.report.json"));
}

TEST_F(CliTest, EmptyInputDirectory) {
  fs::create_directories(dir_ / "empty");
  const ToolRun run =
      Tool("build " + Path("empty") + " --out " + Path("x.snap"));
  EXPECT_EQ(run.exit_code, 2);
  EXPECT_THAT(run.err, HasSubstr("no input blocks"));
  EXPECT_FALSE(fs::exists(dir_ / "x.snap"));
}

TEST_F(CliTest, MalformedBlockReportsFile) {
  fs::create_directories(dir_ / "bad");
  fs::copy(kData / "worked_example" / "block_100.json", dir_ / "bad");
  std::ofstream(dir_ / "bad" / "block_101.json") << "{\"height\": 101, ";
  const ToolRun run = Tool("build " + Path("bad") + " --out " + Path("x.snap"));
  EXPECT_EQ(run.exit_code, 2);
  EXPECT_THAT(run.err, HasSubstr("block_101.json"));
  EXPECT_THAT(run.err, HasSubstr("byte"));
}

TEST_F(CliTest, InvalidTransactionNamesIt) {
  std::ofstream(dir_ / "block_1.json")
      << R"({"height": 1, "transactions": [{"tx_id": "tx9", "inputs": [],
            "outputs": []}]})";
  const ToolRun run =
      Tool("build " + Path("block_1.json") + " --out " + Path("x.snap"));
  EXPECT_EQ(run.exit_code, 2);
  EXPECT_THAT(run.err, HasSubstr("tx9"));
}

TEST_F(CliTest, MissingInputIsIoFailure) {
  EXPECT_EQ(
      Tool("build " + Path("nowhere") + " --out " + Path("x.snap")).exit_code,
      3);
}

TEST_F(CliTest, SnapshotLoadFailures) {
  EXPECT_EQ(Tool("top " + Path("missing.snap")).exit_code, 4);
  std::ofstream(dir_ / "corrupt.snap") << R"({"version": 2})";
  const ToolRun run =
      Tool("entities " + Path("corrupt.snap") + " --out " + Path("out"));
  EXPECT_EQ(run.exit_code, 4);
  EXPECT_THAT(run.err, HasSubstr("version"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Tool("").exit_code, 1);
  EXPECT_EQ(Tool("frobnicate").exit_code, 1);
  ASSERT_EQ(BuildFixture().exit_code, 0);
  EXPECT_EQ(
      Tool("stats " + Path("worked.snap") + " --level galaxy --out " + Path("s"))
          .exit_code,
      1);
  EXPECT_EQ(Tool("top " + Path("worked.snap") + " --k 0").exit_code, 1);
  EXPECT_EQ(Tool("build " + Path("worked.snap") + " --format xml --out " +
                 Path("y.snap"))
                .exit_code,
            1);
  EXPECT_EQ(Tool("--help").exit_code, 0);
}

TEST_F(CliTest, EntitiesReport) {
  ASSERT_EQ(BuildFixture().exit_code, 0);
  ASSERT_EQ(
      Tool("entities " + Path("worked.snap") + " --out " + Path("e")).exit_code,
      0);
  const json report = json::parse(Slurp(dir_ / "e" / "entities.json"));
  std::vector<int> sizes;
  for (const auto& entity : report) sizes.push_back(entity["size"]);
  EXPECT_THAT(sizes, ::testing::ElementsAre(3, 1, 1, 1));
  EXPECT_EQ(report[0]["addresses"], json({"a2", "a3", "a6"}));
}

TEST_F(CliTest, RepeatsReport) {
  ASSERT_EQ(BuildFixture().exit_code, 0);
  ASSERT_EQ(Tool("repeats " + Path("worked.snap") + " --level address", "",
                 "repeats.json")
                .exit_code,
            0);
  const json report = json::parse(Slurp(dir_ / "repeats.json"));
  EXPECT_EQ(report["groups"], json::parse(R"([["t1","t2"],["t4","t6"]])"));
  EXPECT_EQ(report["repetition_count"], 2);
}

TEST_F(CliTest, TopReport) {
  ASSERT_EQ(BuildFixture().exit_code, 0);
  ASSERT_EQ(
      Tool("top " + Path("worked.snap") + " --k 1", "", "top.json").exit_code, 0);
  EXPECT_EQ(json::parse(Slurp(dir_ / "top.json")),
            json::parse(R"([{"address":"a2","pre":2,"post":3,"total":5}])"));
}

TEST_F(CliTest, StatsAtBothLevels) {
  ASSERT_EQ(BuildFixture().exit_code, 0);
  ASSERT_EQ(
      Tool("stats " + Path("worked.snap") + " --out " + Path("addr")).exit_code,
      0);
  ASSERT_EQ(Tool("stats " + Path("worked.snap") + " --level entity --out " +
                 Path("ent"))
                .exit_code,
            0);
  const json address = json::parse(Slurp(dir_ / "addr" / "summary.json"));
  const json entity = json::parse(Slurp(dir_ / "ent" / "summary.json"));
  EXPECT_EQ(address["places"], 6);
  EXPECT_EQ(entity["places"], 4);
  EXPECT_EQ(entity["transitions"], 7);
  EXPECT_EQ(Slurp(dir_ / "addr" / "ccdf_pre.csv"),
            "x,ccdf\n"
            "0,6.666666666666666e-01\n"
            "1,1.666666666666667e-01\n"
            "2,0.000000000000000e+00\n");
  for (const char* name : {"ccdf_post.csv", "ccdf_both.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "ent" / name)) << name;
  }
}

TEST_F(CliTest, SynthBuildChainsRecoversGroundTruth) {
  std::ofstream(dir_ / "c.json") << R"({"entity_sizes": [3, 8],
      "chain_lengths": [1, 4, 12, 30], "repeat_group_sizes": [3],
      "deposits": 5, "fillers": 800, "addresses_per_filler": 3})";
  ASSERT_EQ(Tool("synth --config " + Path("c.json") + " --seed 77 --out " +
                 Path("chain"))
                .exit_code,
            0);
  ASSERT_EQ(Tool("build " + Path("chain") + " --mode strict --out " +
                 Path("s.snap") + " --no-timestamp")
                .exit_code,
            0);
  EXPECT_EQ(json::parse(Slurp(dir_ / "s.snap.report.json"))["rejects"], 0);
  ASSERT_EQ(Tool("chains " + Path("s.snap") + " --out " + Path("c")).exit_code,
            0);
  const json truth = json::parse(Slurp(dir_ / "chain" / "ground_truth.json"));
  const json chains = json::parse(Slurp(dir_ / "c" / "chains.json"));
  std::set<json> expected(truth["planted_chains"].begin(),
                          truth["planted_chains"].end());
  std::set<json> found;
  std::vector<int> lengths;
  for (const auto& c : chains) {
    found.insert(c["transactions"]);
    lengths.push_back(c["length"]);
  }
  EXPECT_EQ(found, expected);
  EXPECT_THAT(lengths, ::testing::ElementsAre(30, 12, 4, 1));
}

}  // namespace
}  // namespace chainpetri
