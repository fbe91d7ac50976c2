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

#include "chainpetri/block.h"

#include <utility>

#include "chainpetri/errors.h"
#include "json.hpp"

namespace chainpetri {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

std::string DescribeTx(std::size_t index, const std::string& tx_id) {
  return tx_id.empty() ? "#" + std::to_string(index) : tx_id;
}

std::uint64_t ReadHeight(const json& doc) {
  const auto it = doc.find("height");
  if (it == doc.end()) throw ValidationError("", "missing field 'height'");
  if (!it->is_number_unsigned()) {
    throw ValidationError("", "'height' must be a nonnegative integer");
  }
  return it->get<std::uint64_t>();
}

std::vector<std::string> ReadAddressList(const json& tx, const char* field,
                                         const std::string& tx_id) {
  const auto it = tx.find(field);
  if (it == tx.end()) {
    throw ValidationError(tx_id, std::string("missing field '") + field + "'");
  }
  if (!it->is_array()) {
    throw ValidationError(tx_id,
                          std::string("'") + field + "' must be an array");
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const json& a : *it) {
    if (!a.is_string() || a.get_ref<const std::string&>().empty()) {
      throw ValidationError(
          tx_id, std::string("'") + field + "' must hold non-empty strings");
    }
    out.push_back(a.get<std::string>());
  }
  return out;
}

const std::string* StringField(const json& obj, const char* field) {
  if (!obj.is_object()) return nullptr;
  const auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) return nullptr;
  return &it->get_ref<const std::string&>();
}

}  // namespace

Block ParseBlock(std::string_view json_text) {
  const json doc = ParseJson(json_text);
  if (!doc.is_object()) throw ValidationError("", "block must be an object");
  Block block;
  block.height = ReadHeight(doc);
  const auto txs = doc.find("transactions");
  if (txs == doc.end()) {
    throw ValidationError("", "missing field 'transactions'");
  }
  if (!txs->is_array()) {
    throw ValidationError("", "'transactions' must be an array");
  }
  block.transactions.reserve(txs->size());
  for (std::size_t i = 0; i < txs->size(); ++i) {
    const json& tx = (*txs)[i];
    if (!tx.is_object()) {
      throw ValidationError(DescribeTx(i, ""), "transaction must be an object");
    }
    const std::string* tx_id = StringField(tx, "tx_id");
    if (tx_id == nullptr || tx_id->empty()) {
      throw ValidationError(DescribeTx(i, ""),
                            "missing or empty field 'tx_id'");
    }
    TransactionRecord record;
    record.tx_id = *tx_id;
    record.inputs = ReadAddressList(tx, "inputs", record.tx_id);
    record.outputs = ReadAddressList(tx, "outputs", record.tx_id);
    if (record.outputs.empty()) {
      throw ValidationError(record.tx_id, "'outputs' must be non-empty");
    }
    block.transactions.push_back(std::move(record));
  }
  return block;
}

std::vector<Block> ParseBlocks(std::string_view text) {
  // Newline-delimited when the first non-blank line is a complete value by
  // itself; otherwise the whole text is one (possibly pretty-printed) block.
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      lines.emplace_back(start, line);
    }
    start = end + 1;
  }
  if (lines.empty()) throw ValidationError("", "no block in input");
  if (lines.size() == 1 ||
      !json::accept(lines.front().second.begin(), lines.front().second.end())) {
    return {ParseBlock(text)};
  }
  std::vector<Block> blocks;
  blocks.reserve(lines.size());
  for (const auto& [offset, line] : lines) {
    try {
      blocks.push_back(ParseBlock(line));
    } catch (const ParseError& e) {
      throw ParseError(offset + e.byte_offset(), e.what());
    }
  }
  return blocks;
}

std::string EncodeBlock(const Block& block) {
  nlohmann::ordered_json txs = nlohmann::ordered_json::array();
  for (const TransactionRecord& tx : block.transactions) {
    txs.push_back(
        {{"tx_id", tx.tx_id}, {"inputs", tx.inputs}, {"outputs", tx.outputs}});
  }
  nlohmann::ordered_json doc = {{"height", block.height},
                                {"transactions", std::move(txs)}};
  return doc.dump();
}

ConversionReport& ConversionReport::operator+=(const ConversionReport& other) {
  transactions += other.transactions;
  coinbase_transactions += other.coinbase_transactions;
  skipped_inputs += other.skipped_inputs;
  skipped_outputs += other.skipped_outputs;
  dropped_transactions += other.dropped_transactions;
  return *this;
}

RawblockConversion ConvertRawblock(std::string_view json_text) {
  const json doc = ParseJson(json_text);
  if (!doc.is_object()) throw ValidationError("", "rawblock must be an object");
  RawblockConversion result;
  result.block.height = ReadHeight(doc);
  const auto txs = doc.find("tx");
  if (txs == doc.end()) throw ValidationError("", "missing field 'tx'");
  if (!txs->is_array()) throw ValidationError("", "'tx' must be an array");

  ConversionReport& report = result.report;
  for (std::size_t i = 0; i < txs->size(); ++i) {
    const json& tx = (*txs)[i];
    const std::string* hash = StringField(tx, "hash");
    if (hash == nullptr || hash->empty()) {
      throw ValidationError(DescribeTx(i, ""), "missing field 'hash'");
    }
    TransactionRecord record;
    record.tx_id = *hash;
    bool coinbase = false;
    if (const auto inputs = tx.find("inputs"); inputs != tx.end()) {
      if (!inputs->is_array()) {
        throw ValidationError(record.tx_id, "'inputs' must be an array");
      }
      for (const json& in : *inputs) {
        const auto prev = in.is_object() ? in.find("prev_out") : in.end();
        if (!in.is_object() || prev == in.end() || prev->is_null()) {
          coinbase = true;
          continue;
        }
        if (const std::string* addr = StringField(*prev, "addr");
            addr != nullptr && !addr->empty()) {
          record.inputs.push_back(*addr);
        } else {
          ++report.skipped_inputs;
        }
      }
    }
    const auto outs = tx.find("out");
    if (outs == tx.end() || !outs->is_array()) {
      throw ValidationError(record.tx_id, "missing or non-array field 'out'");
    }
    for (const json& out : *outs) {
      if (const std::string* addr = StringField(out, "addr");
          addr != nullptr && !addr->empty()) {
        record.outputs.push_back(*addr);
      } else {
        ++report.skipped_outputs;
      }
    }
    if (record.outputs.empty()) {
      ++report.dropped_transactions;
      continue;
    }
    if (coinbase && record.inputs.empty()) ++report.coinbase_transactions;
    ++report.transactions;
    result.block.transactions.push_back(std::move(record));
  }
  return result;
}

}  // namespace chainpetri
