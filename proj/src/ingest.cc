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

#include <utility>

#include "chainpetri/errors.h"

namespace chainpetri {

void NetBuilder::AddBlock(const Block& block) {
  if (last_height_ && block.height <= *last_height_) {
    throw OrderingError("block height " + std::to_string(block.height) +
                        " does not follow height " +
                        std::to_string(*last_height_));
  }
  last_height_ = block.height;
  ++report_.blocks;

  for (const TransactionRecord& tx : block.transactions) {
    if (net_.FindTransition(tx.tx_id)) {
      ++report_.duplicates;
      report_.rejections.push_back(
          {tx.tx_id, block.height, "duplicate transaction id"});
      continue;
    }
    if (mode_ == IngestMode::kStrict) {
      if (auto violation = StrictViolation(tx)) {
        ++report_.rejects;
        report_.rejections.push_back(
            {tx.tx_id, block.height, std::move(*violation)});
        continue;
      }
    }
    net_.RecordTransaction(tx.tx_id, tx.inputs, tx.outputs);
  }
}

std::optional<std::string> NetBuilder::StrictViolation(
    const TransactionRecord& tx) const {
  for (const std::string& address : tx.inputs) {
    const auto p = net_.FindPlace(address);
    if (!p) return "input address '" + address + "' was never funded";
    if (net_.UtxoCount(*p) <= 0) {
      return "input address '" + address + "' has no unspent output";
    }
  }
  return std::nullopt;
}

IngestResult NetBuilder::Finish() && {
  net_.Seal();
  report_.transactions = net_.num_transitions();
  report_.addresses = net_.num_places();
  report_.pre_arcs = net_.pre().nnz();
  report_.post_arcs = net_.post().nnz();
  return {std::move(net_), std::move(report_)};
}

IngestResult Ingest(std::span<const Block> blocks, IngestMode mode) {
  NetBuilder builder(mode);
  for (const Block& block : blocks) builder.AddBlock(block);
  return std::move(builder).Finish();
}

}  // namespace chainpetri
