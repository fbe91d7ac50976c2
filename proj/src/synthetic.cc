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

#include "chainpetri/synthetic.h"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "chainpetri/errors.h"
#include "json.hpp"

namespace chainpetri {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kBase58 =
    "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Bijective 64-bit mixer, so distinct counters give distinct labels.
std::uint64_t Mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::string Base58Label(char prefix, std::uint64_t value) {
  std::string digits;
  do {
    digits.push_back(kBase58[value % kBase58.size()]);
    value /= kBase58.size();
  } while (value != 0);
  digits.push_back(prefix);
  std::reverse(digits.begin(), digits.end());
  return digits;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n), n > 0.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  std::uint64_t Between(std::uint64_t lo, std::uint64_t hi) {
    return lo + Below(hi - lo + 1);
  }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Role { kOther, kChainLink, kRepeat };

struct PlannedTx {
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint32_t> outputs;
  Role role = Role::kOther;
  std::uint32_t group = 0;
};

void Validate(const GeneratorConfig& config) {
  for (auto size : config.entity_sizes) {
    if (size == 0) throw ConfigError("entity sizes must be >= 1");
  }
  for (auto length : config.chain_lengths) {
    if (length == 0) throw ConfigError("chain lengths must be >= 1");
  }
  for (auto size : config.repeat_group_sizes) {
    if (size < 2) throw ConfigError("repeat group sizes must be >= 2");
  }
  if (config.addresses_per_filler == 0) {
    throw ConfigError("addresses_per_filler must be >= 1");
  }
  if (config.max_block_transactions == 0) {
    throw ConfigError("max_block_transactions must be >= 1");
  }
  if (config.max_transactions != 0) {
    const std::uint64_t needed = PlannedTransactions(config) + config.fillers;
    if (needed > config.max_transactions) {
      throw ConfigError("configuration needs " + std::to_string(needed) +
                        " transactions but the budget is " +
                        std::to_string(config.max_transactions));
    }
  }
}

// Consecutive member windows of 2..4 addresses overlapping by one, so the
// co-spending transactions connect the whole entity.
std::uint64_t EntityChunks(
    std::uint32_t size, Random* rng,
    std::vector<std::pair<std::uint32_t, std::uint32_t>>* out) {
  if (size < 2) return 0;
  std::uint64_t count = 0;
  std::uint32_t start = 0;
  while (true) {
    // Without an rng the worst case (windows of two) bounds the count.
    const std::uint32_t width =
        rng ? static_cast<std::uint32_t>(rng->Between(2, 4)) : 2;
    const std::uint32_t end = std::min(start + width, size);
    if (out) out->emplace_back(start, end);
    ++count;
    if (end == size) break;
    start = end - 1;
  }
  return count;
}

class Generator {
 public:
  Generator(const GeneratorConfig& config, std::uint64_t seed)
      : config_(config),
        rng_(seed),
        label_offset_(seed * 0x9e3779b97f4a7c15ULL) {}

  SyntheticChain Run();

 private:
  std::uint32_t NewOwner() { return next_owner_++; }
  std::uint32_t NewAddress(std::uint32_t owner) {
    owner_.push_back(owner);
    receives_.push_back(0);
    spends_.push_back(0);
    return static_cast<std::uint32_t>(owner_.size() - 1);
  }
  std::uint32_t Fresh() { return NewAddress(NewOwner()); }

  void PlanEntity(std::uint32_t size);
  void PlanChain(std::uint32_t index, std::uint32_t length);
  void PlanRepeatGroup(std::uint32_t index, std::uint32_t copies);
  void PlanDeposit();

  PlannedTx NextFiller();
  std::uint32_t HubAddress(std::uint32_t hub);
  std::uint32_t DrawHub() { return urn_[rng_.Below(urn_.size())]; }
  void Emit(const PlannedTx& tx);

  const GeneratorConfig& config_;
  Random rng_;
  std::uint64_t label_offset_;

  std::uint32_t next_owner_ = 0;
  std::vector<std::uint32_t> owner_;
  std::vector<std::uint32_t> receives_;
  std::vector<std::uint32_t> spends_;

  std::vector<std::vector<PlannedTx>> programs_;
  std::vector<std::uint32_t> deposits_;

  std::vector<std::uint32_t> hub_address_;
  std::vector<std::uint32_t> urn_;  // hub slots, once per receipt plus one

  std::vector<TransactionRecord> emitted_;
  SyntheticGroundTruth truth_;
};

void Generator::PlanEntity(std::uint32_t size) {
  const std::uint32_t owner = NewOwner();
  std::vector<std::uint32_t> members(size);
  for (auto& m : members) m = NewAddress(owner);
  std::vector<PlannedTx> program;
  if (size == 1) {
    program.push_back({{}, {members[0]}, Role::kOther, 0});
  } else {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chunks;
    EntityChunks(size, &rng_, &chunks);
    for (const auto& [begin, end] : chunks) {
      std::vector<std::uint32_t> chunk(members.begin() + begin,
                                       members.begin() + end);
      program.push_back({{}, chunk, Role::kOther, 0});
      program.push_back({chunk, {Fresh()}, Role::kOther, 0});
    }
  }
  programs_.push_back(std::move(program));
}

void Generator::PlanChain(std::uint32_t index, std::uint32_t length) {
  std::vector<PlannedTx> program;
  std::uint32_t carried = Fresh();
  program.push_back({{}, {carried}, Role::kOther, 0});
  for (std::uint32_t i = 0; i < length; ++i) {
    const std::uint32_t next = Fresh();
    const std::uint32_t change = Fresh();
    PlannedTx link{{carried}, {next, change}, Role::kChainLink, index};
    if (rng_.Below(2) == 1) std::swap(link.outputs[0], link.outputs[1]);
    program.push_back(std::move(link));
    carried = next;
  }
  // The last disposable output is spent by a one-output transaction, which
  // ends the chain without being part of it.
  program.push_back({{carried}, {Fresh()}, Role::kOther, 0});
  programs_.push_back(std::move(program));
}

void Generator::PlanRepeatGroup(std::uint32_t index, std::uint32_t copies) {
  const std::uint32_t owner = NewOwner();
  std::vector<std::uint32_t> from(rng_.Between(1, 3));
  for (auto& a : from) a = NewAddress(owner);
  std::vector<std::uint32_t> to(rng_.Between(1, 3));
  for (auto& a : to) a = Fresh();
  std::vector<PlannedTx> program;
  for (std::uint32_t c = 0; c < copies; ++c) {
    // A distinct nonce output keeps the funding transactions unique.
    std::vector<std::uint32_t> funding = from;
    funding.push_back(Fresh());
    program.push_back({{}, std::move(funding), Role::kOther, 0});
    program.push_back({from, to, Role::kRepeat, index});
  }
  programs_.push_back(std::move(program));
}

void Generator::PlanDeposit() {
  const std::uint32_t deposit = Fresh();
  deposits_.push_back(deposit);
  programs_.push_back({{{}, {deposit}, Role::kOther, 0}});
}

std::uint32_t Generator::HubAddress(std::uint32_t hub) {
  if (hub_address_[hub] == kNone) hub_address_[hub] = Fresh();
  return hub_address_[hub];
}

PlannedTx Generator::NextFiller() {
  PlannedTx tx;
  std::uint32_t spender = kNone;
  if (!urn_.empty() && rng_.Below(2) == 1) {
    // Only hubs received at least twice may spend: their Post row then has
    // two entries, so they can never be disposable.
    for (int attempt = 0; attempt < 4 && spender == kNone; ++attempt) {
      const std::uint32_t hub = DrawHub();
      const std::uint32_t a = hub_address_[hub];
      if (a != kNone && receives_[a] >= 2 && receives_[a] > spends_[a]) {
        spender = hub;
      }
    }
  }
  if (spender != kNone) tx.inputs.push_back(hub_address_[spender]);

  tx.outputs.push_back(Fresh());
  const std::size_t wanted =
      std::min<std::size_t>(config_.addresses_per_filler - 1,
                            hub_address_.size() - (spender != kNone));
  std::vector<std::uint32_t> chosen;
  for (int attempt = 0; chosen.size() < wanted && attempt < 64; ++attempt) {
    const std::uint32_t hub = DrawHub();
    if (hub != spender &&
        std::find(chosen.begin(), chosen.end(), hub) == chosen.end()) {
      chosen.push_back(hub);
    }
  }
  for (std::uint32_t hub = 0; chosen.size() < wanted; ++hub) {
    if (hub != spender &&
        std::find(chosen.begin(), chosen.end(), hub) == chosen.end()) {
      chosen.push_back(hub);
    }
  }
  for (std::uint32_t hub : chosen) {
    tx.outputs.push_back(HubAddress(hub));
    urn_.push_back(hub);
  }
  return tx;
}

void Generator::Emit(const PlannedTx& tx) {
  TransactionRecord record;
  record.tx_id = Base58Label('t', Mix64(emitted_.size() + label_offset_));
  auto label = [&](std::uint32_t a) {
    return Base58Label('1', Mix64(a + label_offset_));
  };
  for (std::uint32_t a : tx.inputs) {
    record.inputs.push_back(label(a));
    ++spends_[a];
  }
  for (std::uint32_t a : tx.outputs) {
    record.outputs.push_back(label(a));
    ++receives_[a];
  }
  truth_.pre_arcs += tx.inputs.size();
  truth_.post_arcs += tx.outputs.size();
  if (tx.role == Role::kChainLink) {
    truth_.planted_chains[tx.group].push_back(record.tx_id);
  } else if (tx.role == Role::kRepeat) {
    truth_.planted_repeat_groups[tx.group].push_back(record.tx_id);
  }
  emitted_.push_back(std::move(record));
}

SyntheticChain Generator::Run() {
  for (std::uint32_t size : config_.entity_sizes) PlanEntity(size);
  truth_.planted_chains.resize(config_.chain_lengths.size());
  for (std::uint32_t i = 0; i < config_.chain_lengths.size(); ++i) {
    PlanChain(i, config_.chain_lengths[i]);
  }
  truth_.planted_repeat_groups.resize(config_.repeat_group_sizes.size());
  for (std::uint32_t i = 0; i < config_.repeat_group_sizes.size(); ++i) {
    PlanRepeatGroup(i, config_.repeat_group_sizes[i]);
  }
  for (std::uint32_t i = 0; i < config_.deposits; ++i) PlanDeposit();

  const std::uint32_t hubs =
      config_.hubs != 0 ? config_.hubs
                        : static_cast<std::uint32_t>(config_.fillers / 10 + 1);
  if (config_.fillers > 0 && config_.addresses_per_filler > 1) {
    hub_address_.assign(hubs, kNone);
    urn_.resize(hubs);
    for (std::uint32_t h = 0; h < hubs; ++h) urn_[h] = h;
  }

  // A uniformly random interleaving that keeps every program in order.
  std::vector<std::uint32_t> schedule;
  for (std::uint32_t p = 0; p < programs_.size(); ++p) {
    schedule.insert(schedule.end(), programs_[p].size(), p);
  }
  schedule.insert(schedule.end(), config_.fillers, kNone);
  rng_.Shuffle(schedule);

  emitted_.reserve(schedule.size());
  std::vector<std::size_t> cursor(programs_.size(), 0);
  for (std::uint32_t p : schedule) {
    if (p == kNone) {
      Emit(NextFiller());
    } else {
      Emit(programs_[p][cursor[p]++]);
    }
  }
  programs_.clear();

  SyntheticChain result;
  for (std::size_t begin = 0; begin < emitted_.size();) {
    const std::size_t size = rng_.Between(1, config_.max_block_transactions);
    const std::size_t end = std::min(begin + size, emitted_.size());
    Block block;
    block.height = result.blocks.size();
    block.transactions.assign(std::make_move_iterator(emitted_.begin() + begin),
                              std::make_move_iterator(emitted_.begin() + end));
    result.blocks.push_back(std::move(block));
    begin = end;
  }
  truth_.transactions = emitted_.size();
  emitted_.clear();

  auto label = [&](std::uint32_t a) {
    return Base58Label('1', Mix64(a + label_offset_));
  };
  std::vector<std::uint32_t> owner_slot(next_owner_, kNone);
  for (std::uint32_t a = 0; a < owner_.size(); ++a) {
    if (receives_[a] == 0 && spends_[a] == 0) continue;  // never emitted
    ++truth_.addresses;
    std::uint32_t& slot = owner_slot[owner_[a]];
    if (slot == kNone) {
      slot = static_cast<std::uint32_t>(truth_.entity_partition.size());
      truth_.entity_partition.emplace_back();
    }
    truth_.entity_partition[slot].push_back(label(a));
    if (spends_[a] == 0) truth_.accumulate_only.push_back(label(a));
    if (spends_[a] == 1 && receives_[a] == 1) ++truth_.disposable;
  }
  for (std::uint32_t d : deposits_) truth_.planted_deposits.push_back(label(d));
  result.truth = std::move(truth_);
  return result;
}

template <typename T>
void ReadField(const json& doc, const char* name, T& out) {
  const auto it = doc.find(name);
  if (it == doc.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

std::uint64_t PlannedTransactions(const GeneratorConfig& config) {
  std::uint64_t total = config.deposits;
  for (auto size : config.entity_sizes) {
    // Upper bound: windows of two need size - 1 funding/spend pairs.
    total += size == 1 ? 1 : 2 * EntityChunks(size, nullptr, nullptr);
  }
  for (auto length : config.chain_lengths) total += std::uint64_t{length} + 2;
  for (auto size : config.repeat_group_sizes) total += 2 * std::uint64_t{size};
  return total;
}

GeneratorConfig ParseGeneratorConfig(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed generator config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("generator config must be an object");
  static constexpr std::string_view kFields[] = {"entity_sizes",
                                                 "chain_lengths",
                                                 "repeat_group_sizes",
                                                 "deposits",
                                                 "fillers",
                                                 "addresses_per_filler",
                                                 "hubs",
                                                 "max_block_transactions",
                                                 "max_transactions"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kFields), std::end(kFields), key) ==
        std::end(kFields)) {
      throw ConfigError("unknown generator config field '" + key + "'");
    }
  }
  GeneratorConfig config;
  ReadField(doc, "entity_sizes", config.entity_sizes);
  ReadField(doc, "chain_lengths", config.chain_lengths);
  ReadField(doc, "repeat_group_sizes", config.repeat_group_sizes);
  ReadField(doc, "deposits", config.deposits);
  ReadField(doc, "fillers", config.fillers);
  ReadField(doc, "addresses_per_filler", config.addresses_per_filler);
  ReadField(doc, "hubs", config.hubs);
  ReadField(doc, "max_block_transactions", config.max_block_transactions);
  ReadField(doc, "max_transactions", config.max_transactions);
  Validate(config);
  return config;
}

std::string EncodeGeneratorConfig(const GeneratorConfig& config) {
  ordered_json doc = {{"entity_sizes", config.entity_sizes},
                      {"chain_lengths", config.chain_lengths},
                      {"repeat_group_sizes", config.repeat_group_sizes},
                      {"deposits", config.deposits},
                      {"fillers", config.fillers},
                      {"addresses_per_filler", config.addresses_per_filler},
                      {"hubs", config.hubs},
                      {"max_block_transactions", config.max_block_transactions},
                      {"max_transactions", config.max_transactions}};
  return doc.dump(2);
}

SyntheticChain GenerateSynthetic(const GeneratorConfig& config,
                                 std::uint64_t seed) {
  Validate(config);
  return Generator(config, seed).Run();
}

std::string EncodeGroundTruth(const SyntheticGroundTruth& truth) {
  ordered_json doc = {{"entity_partition", truth.entity_partition},
                      {"planted_chains", truth.planted_chains},
                      {"planted_repeat_groups", truth.planted_repeat_groups},
                      {"planted_deposits", truth.planted_deposits},
                      {"accumulate_only", truth.accumulate_only},
                      {"totals",
                       {{"transactions", truth.transactions},
                        {"addresses", truth.addresses},
                        {"pre_arcs", truth.pre_arcs},
                        {"post_arcs", truth.post_arcs},
                        {"disposable", truth.disposable}}}};
  return doc.dump();
}

}  // namespace chainpetri
