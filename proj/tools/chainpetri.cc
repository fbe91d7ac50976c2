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

// chainpetri: batch front end for building ledger snapshots and running the
// entity, chain, degree, activity and repetition analyses over them.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation failure, 3 I/O failure,
// 4 snapshot load failure.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "chainpetri/analytics.h"
#include "chainpetri/block.h"
#include "chainpetri/chains.h"
#include "chainpetri/entities.h"
#include "chainpetri/errors.h"
#include "chainpetri/ingest.h"
#include "chainpetri/net.h"
#include "chainpetri/reports.h"
#include "chainpetri/snapshot.h"
#include "chainpetri/synthetic.h"

namespace chainpetri {
namespace {

namespace fs = std::filesystem;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalid = 2,
  kIo = 3,
  kSnapshot = 4,
};

// Carries an exit code out of a command body.
class CommandFailure : public std::runtime_error {
 public:
  CommandFailure(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandFailure(kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw CommandFailure(kIo, "cannot read " + path.string());
  return std::move(buffer).str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CommandFailure(kIo, "cannot open " + path.string());
  out << content;
  out.flush();
  if (!out) throw CommandFailure(kIo, "cannot write " + path.string());
}

void MakeDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw CommandFailure(kIo, "cannot create directory " + dir.string());
  }
}

PlaceTransitionNet LoadOrFail(const fs::path& path) {
  try {
    return LoadSnapshot(path);
  } catch (const SnapshotError& e) {
    throw CommandFailure(kSnapshot, path.string() + ": section '" +
                                        e.section() + "': " + e.what());
  } catch (const std::exception& e) {
    throw CommandFailure(kSnapshot, path.string() + ": " + e.what());
  }
}

enum class Level { kAddress, kEntity };

const std::map<std::string, Level> kLevels = {{"address", Level::kAddress},
                                              {"entity", Level::kEntity}};

PlaceTransitionNet AtLevel(PlaceTransitionNet net, Level level) {
  if (level == Level::kAddress) return net;
  return BuildEntityNet(net, ComputeEntities(net)).net;
}

unsigned WorkerCount(std::size_t jobs) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("CHAINPETRI_THREADS")) {
    const long value = std::strtol(cap, nullptr, 10);
    if (value >= 1) workers = std::min<unsigned>(workers, value);
  }
  return static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

// ---------------------------------------------------------------------------
// build

enum class InputFormat { kCanonical, kRawblock };

struct BuildOptions {
  std::vector<std::string> inputs;
  InputFormat format = InputFormat::kCanonical;
  IngestMode mode = IngestMode::kLax;
  std::string out;
  std::string report;
  bool no_timestamp = false;
};

bool IsBlockFile(const fs::path& path) {
  const std::string name = path.filename().string();
  return name.starts_with("block_") && path.extension() == ".json";
}

std::vector<fs::path> CollectInputFiles(
    const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path, ec)) {
        if (entry.is_regular_file() && IsBlockFile(entry.path())) {
          found.push_back(entry.path());
        }
      }
      if (ec) throw CommandFailure(kIo, "cannot list " + input);
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(path, ec)) {
      files.push_back(path);
    } else {
      throw CommandFailure(kIo, "no such input: " + input);
    }
  }
  return files;
}

struct ParsedFile {
  std::vector<Block> blocks;
  ConversionReport conversion;
  std::string error;       // parse/validation diagnostic
  std::string read_error;  // I/O diagnostic
};

ParsedFile ParseFile(const fs::path& path, InputFormat format) {
  ParsedFile result;
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const CommandFailure& e) {
    result.read_error = e.what();
    return result;
  }
  try {
    if (format == InputFormat::kCanonical) {
      result.blocks = ParseBlocks(text);
    } else {
      RawblockConversion converted = ConvertRawblock(text);
      result.blocks.push_back(std::move(converted.block));
      result.conversion = converted.report;
    }
  } catch (const ParseError& e) {
    result.error = path.string() + ": byte " + std::to_string(e.byte_offset()) +
                   ": " + e.what();
  } catch (const ValidationError& e) {
    result.error =
        path.string() + ": transaction " + e.tx_id() + ": " + e.what();
  } catch (const Error& e) {
    result.error = path.string() + ": " + e.what();
  }
  return result;
}

std::vector<ParsedFile> ParseAll(const std::vector<fs::path>& files,
                                 InputFormat format) {
  std::vector<ParsedFile> parsed(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
      parsed[i] = ParseFile(files[i], format);
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = WorkerCount(files.size());
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return parsed;
}

int RunBuild(const BuildOptions& options) {
  const std::vector<fs::path> files = CollectInputFiles(options.inputs);
  std::vector<ParsedFile> parsed = ParseAll(files, options.format);

  bool io_failed = false;
  bool invalid = false;
  std::vector<Block> blocks;
  ConversionReport conversion;
  for (ParsedFile& file : parsed) {
    if (!file.read_error.empty()) {
      std::cerr << "error: " << file.read_error << "\n";
      io_failed = true;
    } else if (!file.error.empty()) {
      std::cerr << "error: " << file.error << "\n";
      invalid = true;
    }
    conversion += file.conversion;
    std::move(file.blocks.begin(), file.blocks.end(),
              std::back_inserter(blocks));
  }
  if (io_failed) return kIo;
  if (invalid) return kInvalid;
  if (blocks.empty()) {
    std::cerr << "error: no input blocks\n";
    return kInvalid;
  }
  std::stable_sort(
      blocks.begin(), blocks.end(),
      [](const Block& a, const Block& b) { return a.height < b.height; });

  NetBuilder builder(options.mode);
  try {
    for (const Block& block : blocks) builder.AddBlock(block);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  IngestResult result = std::move(builder).Finish();

  try {
    SaveSnapshot(result.net, fs::path(options.out));
  } catch (const std::exception& e) {
    throw CommandFailure(kIo, e.what());
  }
  const std::string report_path =
      options.report.empty() ? options.out + ".report.json" : options.report;
  const std::optional<ConversionReport> conversion_part =
      options.format == InputFormat::kRawblock
          ? std::optional<ConversionReport>(conversion)
          : std::nullopt;
  const std::optional<std::string> timestamp =
      options.no_timestamp ? std::nullopt
                           : std::optional<std::string>(UtcTimestamp());
  WriteFile(report_path,
            IngestReportJson(result.report, conversion_part, timestamp) + "\n");
  std::cerr << "built " << result.report.transactions << " transactions over "
            << result.report.addresses << " addresses from "
            << result.report.blocks << " blocks (" << result.report.rejects
            << " rejected, " << result.report.duplicates << " duplicates)\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// analyses

int RunEntities(const std::string& snapshot, const std::string& out) {
  const PlaceTransitionNet net = LoadOrFail(snapshot);
  const EntityPartition partition = ComputeEntities(net);
  MakeDirectory(out);
  WriteFile(fs::path(out) / "entities.json",
            EntityReportJson(net, partition) + "\n");
  return kOk;
}

int RunChains(const std::string& snapshot, const std::string& out) {
  const PlaceTransitionNet net = LoadOrFail(snapshot);
  const DisposableSets sets =
      DisposableTransactions(net, DisposableAddresses(net));
  const ChainSet chains = BuildChains(net, sets);
  MakeDirectory(out);
  WriteFile(fs::path(out) / "chains.json", ChainReportJson(net, chains) + "\n");
  WriteFile(fs::path(out) / "chain_summary.json",
            ChainSummaryJson(net, sets, chains) + "\n");
  return kOk;
}

std::string CcdfFile(const PlaceTransitionNet& net, DegreeSide side) {
  const DegreeMultiset degrees = Degrees(net, side);
  if (degrees.counts.empty()) return CcdfCsv({});
  return CcdfCsv(Ccdf(degrees.counts));
}

int RunStats(const std::string& snapshot, Level level, const std::string& out) {
  const PlaceTransitionNet net = AtLevel(LoadOrFail(snapshot), level);
  MakeDirectory(out);
  const fs::path dir(out);
  WriteFile(dir / "summary.json", SummaryJson(Summarize(net)) + "\n");
  WriteFile(dir / "ccdf_pre.csv", CcdfFile(net, DegreeSide::kPre));
  WriteFile(dir / "ccdf_post.csv", CcdfFile(net, DegreeSide::kPost));
  WriteFile(dir / "ccdf_both.csv", CcdfFile(net, DegreeSide::kBoth));
  return kOk;
}

int RunTop(const std::string& snapshot, std::size_t k) {
  const PlaceTransitionNet net = LoadOrFail(snapshot);
  std::cout << TopJson(net, TopKActive(net, k)) << "\n";
  return kOk;
}

int RunRepeats(const std::string& snapshot, Level level) {
  const PlaceTransitionNet net = AtLevel(LoadOrFail(snapshot), level);
  std::cout << RepeatsJson(net, RepeatedGroups(net)) << "\n";
  return kOk;
}

int RunSynth(const std::string& config_path, std::uint64_t seed,
             const std::string& out) {
  GeneratorConfig config;
  if (!config_path.empty()) {
    try {
      config = ParseGeneratorConfig(ReadFile(config_path));
    } catch (const ConfigError& e) {
      std::cerr << "error: " << config_path << ": " << e.what() << "\n";
      return kInvalid;
    }
  }
  SyntheticChain chain;
  try {
    chain = GenerateSynthetic(config, seed);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  MakeDirectory(out);
  const fs::path dir(out);
  for (const Block& block : chain.blocks) {
    WriteFile(dir / ("block_" + std::to_string(block.height) + ".json"),
              EncodeBlock(block) + "\n");
  }
  WriteFile(dir / "ground_truth.json", EncodeGroundTruth(chain.truth) + "\n");
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Blockchain ledger analysis as a place/transition net"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand(
      "build", "Ingest block files and write a net snapshot");
  build_cmd
      ->add_option("inputs", build.inputs,
                   "Block files or directories of block_*.json files")
      ->required();
  build_cmd->add_option("--format", build.format, "Input block format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{
              {"canonical", InputFormat::kCanonical},
              {"rawblock", InputFormat::kRawblock}},
          CLI::ignore_case));
  build_cmd->add_option("--mode", build.mode, "Ingest validation mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, IngestMode>{{"lax", IngestMode::kLax},
                                            {"strict", IngestMode::kStrict}},
          CLI::ignore_case));
  build_cmd->add_option("--out", build.out, "Snapshot path")->required();
  build_cmd->add_option("--report", build.report,
                        "Ingest report path (default <out>.report.json)");
  build_cmd->add_flag("--no-timestamp", build.no_timestamp,
                      "Omit the generation time from the ingest report");

  std::string snapshot;
  std::string out;
  Level level = Level::kAddress;
  std::size_t k = 10;
  std::string config_path;
  std::uint64_t seed = 0;

  auto add_snapshot = [&](CLI::App* cmd) {
    cmd->add_option("snapshot", snapshot, "Snapshot written by build")
        ->required();
  };
  auto add_level = [&](CLI::App* cmd) {
    cmd->add_option("--level", level, "Analyse addresses or entities")
        ->transform(CLI::CheckedTransformer(kLevels, CLI::ignore_case));
  };

  auto* entities_cmd =
      app.add_subcommand("entities", "Write the entity partition report");
  add_snapshot(entities_cmd);
  entities_cmd->add_option("--out", out, "Output directory")->required();

  auto* chains_cmd =
      app.add_subcommand("chains", "Write the disposable chain report");
  add_snapshot(chains_cmd);
  chains_cmd->add_option("--out", out, "Output directory")->required();

  auto* stats_cmd = app.add_subcommand(
      "stats", "Write summary counts and degree CCDF series");
  add_snapshot(stats_cmd);
  add_level(stats_cmd);
  stats_cmd->add_option("--out", out, "Output directory")->required();

  auto* top_cmd = app.add_subcommand("top", "Print the most active addresses");
  add_snapshot(top_cmd);
  top_cmd->add_option("--k", k, "Number of addresses")
      ->check(CLI::PositiveNumber);

  auto* repeats_cmd = app.add_subcommand(
      "repeats", "Print groups of transactions with identical columns");
  add_snapshot(repeats_cmd);
  add_level(repeats_cmd);

  auto* synth_cmd = app.add_subcommand(
      "synth", "Generate a seeded synthetic chain with ground truth");
  synth_cmd->add_option("--config", config_path, "Generator config JSON")
      ->required();
  synth_cmd->add_option("--seed", seed, "Generator seed");
  synth_cmd->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build_cmd) return RunBuild(build);
    if (*entities_cmd) return RunEntities(snapshot, out);
    if (*chains_cmd) return RunChains(snapshot, out);
    if (*stats_cmd) return RunStats(snapshot, level, out);
    if (*top_cmd) return RunTop(snapshot, k);
    if (*repeats_cmd) return RunRepeats(snapshot, level);
    if (*synth_cmd) return RunSynth(config_path, seed, out);
  } catch (const CommandFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace
}  // namespace chainpetri

int main(int argc, char** argv) { return chainpetri::Main(argc, argv); }
