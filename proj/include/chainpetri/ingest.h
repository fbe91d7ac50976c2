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
#include <vector>

#include "chainpetri/block.h"
#include "chainpetri/net.h"

namespace chainpetri {

// kLax accepts every well-formed transaction. kStrict additionally rejects
// a transaction spending from an address whose receives-minus-spends count
// is not positive at that point of the stream.
enum class IngestMode { kLax, kStrict };

struct Rejection {
  std::string tx_id;
  std::uint64_t height = 0;
  std::string reason;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

struct IngestReport {
  std::uint64_t blocks = 0;
  std::uint64_t transactions = 0;  // recorded transitions
  std::uint64_t addresses = 0;
  std::uint64_t pre_arcs = 0;
  std::uint64_t post_arcs = 0;
  std::uint64_t rejects = 0;
  // Transactions whose id was already recorded; they are skipped in both
  // modes (the ledger contains a few such coinbase duplicates).
  std::uint64_t duplicates = 0;
  std::vector<Rejection> rejections;  // strict rejects and duplicates

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct IngestResult {
  PlaceTransitionNet net;
  IngestReport report;
};

// Sequential fold of a block stream into an address-level net.
class NetBuilder {
 public:
  explicit NetBuilder(IngestMode mode = IngestMode::kLax) : mode_(mode) {}

  // Throws OrderingError unless heights strictly increase.
  void AddBlock(const Block& block);

  const PlaceTransitionNet& net() const { return net_; }

  // Seals the net and returns it with the final report.
  IngestResult Finish() &&;

 private:
  // Empty when the transaction may be spent under the strict rule.
  std::optional<std::string> StrictViolation(const TransactionRecord& tx) const;

  IngestMode mode_;
  PlaceTransitionNet net_;
  IngestReport report_;
  std::optional<std::uint64_t> last_height_;
};

IngestResult Ingest(std::span<const Block> blocks,
                    IngestMode mode = IngestMode::kLax);

}  // namespace chainpetri
