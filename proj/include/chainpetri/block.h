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

namespace chainpetri {

struct TransactionRecord {
  std::string tx_id;
  std::vector<std::string> inputs;   // empty for a coinbase
  std::vector<std::string> outputs;  // never empty
  friend bool operator==(const TransactionRecord&,
                         const TransactionRecord&) = default;
};

struct Block {
  std::uint64_t height = 0;
  std::vector<TransactionRecord> transactions;  // in validation order
  friend bool operator==(const Block&, const Block&) = default;
};

// Canonical block JSON:
//   {"height": <int>, "transactions": [
//      {"tx_id": "<text>", "inputs": ["<addr>", ...],
//       "outputs": ["<addr>", ...]}, ...]}
// Field order is irrelevant and unknown fields are ignored.
// Throws ParseError (with byte offset) or ValidationError (with tx_id).
Block ParseBlock(std::string_view json_text);

// Parses either one block or a newline-delimited sequence of blocks.
std::vector<Block> ParseBlocks(std::string_view text);

// Compact canonical encoding; ParseBlock(EncodeBlock(b)) == b.
std::string EncodeBlock(const Block& block);

// Accounting for what the rawblock adapter could not map.
struct ConversionReport {
  std::uint64_t transactions = 0;  // transactions emitted
  std::uint64_t coinbase_transactions = 0;
  std::uint64_t skipped_inputs = 0;        // prev_out without addr
  std::uint64_t skipped_outputs = 0;       // out entry without addr
  std::uint64_t dropped_transactions = 0;  // no addressable output left

  ConversionReport& operator+=(const ConversionReport& other);
  friend bool operator==(const ConversionReport&,
                         const ConversionReport&) = default;
};

struct RawblockConversion {
  Block block;
  ConversionReport report;
};

// Maps the blockchain.info rawblock shape onto a Block:
//   tx[].hash -> tx_id, tx[].inputs[].prev_out.addr -> inputs,
//   tx[].out[].addr -> outputs.
// Inputs without prev_out are coinbase inputs and contribute nothing.
RawblockConversion ConvertRawblock(std::string_view json_text);

}  // namespace chainpetri
