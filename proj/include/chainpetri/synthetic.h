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
#include <string>
#include <string_view>
#include <vector>

#include "chainpetri/block.h"

namespace chainpetri {

// Shape of a synthetic blockchain. Every planted structure is realized
// with the exact transaction shapes the analyses look for; filler traffic
// is built so it can never complete a chain link or repeat a transaction.
struct GeneratorConfig {
  std::vector<std::uint32_t> entity_sizes;        // addresses per owner, >= 1
  std::vector<std::uint32_t> chain_lengths;       // links per chain, >= 1
  std::vector<std::uint32_t> repeat_group_sizes;  // copies per group, >= 2
  std::uint32_t deposits = 0;  // addresses funded once and never spent
  std::uint64_t fillers = 0;
  std::uint32_t addresses_per_filler = 2;  // one fresh address plus hubs
  std::uint32_t hubs = 0;                  // 0 picks fillers / 10 + 1
  std::uint32_t max_block_transactions = 64;
  std::uint64_t max_transactions = 0;  // 0 means unbounded

  friend bool operator==(const GeneratorConfig&,
                         const GeneratorConfig&) = default;
};

// JSON form used by the CLI. Unknown fields raise ConfigError.
GeneratorConfig ParseGeneratorConfig(std::string_view json_text);
std::string EncodeGeneratorConfig(const GeneratorConfig& config);

// Number of transactions the planted structures (without fillers) need.
std::uint64_t PlannedTransactions(const GeneratorConfig& config);

struct SyntheticGroundTruth {
  // Every emitted address, grouped by owner; owners in creation order.
  std::vector<std::vector<std::string>> entity_partition;
  std::vector<std::vector<std::string>> planted_chains;  // ordered tx ids
  std::vector<std::vector<std::string>> planted_repeat_groups;
  std::vector<std::string> planted_deposits;
  std::vector<std::string> accumulate_only;  // never spent, all sources

  std::uint64_t transactions = 0;
  std::uint64_t addresses = 0;
  std::uint64_t pre_arcs = 0;
  std::uint64_t post_arcs = 0;
  std::uint64_t disposable = 0;  // received once and spent once
};

struct SyntheticChain {
  std::vector<Block> blocks;
  SyntheticGroundTruth truth;
};

// Pure function of (config, seed). Throws ConfigError on contradictory
// configurations.
SyntheticChain GenerateSynthetic(const GeneratorConfig& config,
                                 std::uint64_t seed);

std::string EncodeGroundTruth(const SyntheticGroundTruth& truth);

}  // namespace chainpetri
