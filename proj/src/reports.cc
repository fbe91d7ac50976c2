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

#include "chainpetri/reports.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <numeric>
#include <unordered_set>

#include "json.hpp"

namespace chainpetri {
namespace {

using nlohmann::ordered_json;

ordered_json TxIds(const PlaceTransitionNet& net,
                   std::span<const TransitionId> ids) {
  ordered_json out = ordered_json::array();
  for (TransitionId t : ids) out.push_back(net.tx_id(t));
  return out;
}

}  // namespace

std::string EntityReportJson(const PlaceTransitionNet& net,
                             const EntityPartition& partition) {
  std::vector<std::uint32_t> order(partition.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(
      order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return partition.entities[a].size() > partition.entities[b].size();
      });
  ordered_json out = ordered_json::array();
  for (std::uint32_t e : order) {
    ordered_json addresses = ordered_json::array();
    for (PlaceId p : partition.entities[e]) addresses.push_back(net.address(p));
    out.push_back({{"entity", e},
                   {"size", partition.entities[e].size()},
                   {"addresses", std::move(addresses)}});
  }
  return out.dump();
}

std::string ChainReportJson(const PlaceTransitionNet& net,
                            const ChainSet& chains) {
  ordered_json out = ordered_json::array();
  std::unordered_set<std::uint32_t> seen;
  for (const Chain& chain : chains.chains) {
    ordered_json addresses = ordered_json::array();
    seen.clear();
    for (TransitionId t : chain.links) {
      for (Side side : {Side::kPre, Side::kPost}) {
        for (const auto& e : net.Column(side, t)) {
          if (seen.insert(e.index).second) {
            addresses.push_back(net.address(PlaceId{e.index}));
          }
        }
      }
    }
    out.push_back({{"length", chain.length()},
                   {"transactions", TxIds(net, chain.links)},
                   {"addresses", std::move(addresses)}});
  }
  return out.dump();
}

std::string ChainSummaryJson(const PlaceTransitionNet& net,
                             const DisposableSets& sets,
                             const ChainSet& chains) {
  std::uint64_t multi_link = 0;
  std::uint64_t longest = 0;
  std::uint64_t chained = 0;
  for (const Chain& c : chains.chains) {
    multi_link += c.length() >= 2;
    longest = std::max<std::uint64_t>(longest, c.length());
    chained += c.length();
  }
  ordered_json bypassed = ordered_json::array();
  for (const BypassedSuccessor& b : chains.bypassed) {
    bypassed.push_back({{"from", net.tx_id(b.from)},
                        {"followed", net.tx_id(b.followed)},
                        {"bypassed", net.tx_id(b.bypassed)}});
  }
  ordered_json doc = {{"disposable_addresses", sets.addresses.size()},
                      {"disposable_transactions", sets.transactions.size()},
                      {"chain_starts", sets.starts.size()},
                      {"chains", chains.chains.size()},
                      {"chains_with_two_or_more_links", multi_link},
                      {"chained_transactions", chained},
                      {"longest_chain", longest},
                      {"bypassed_successors", std::move(bypassed)}};
  return doc.dump();
}

std::string CcdfCsv(std::span<const CcdfPoint> points) {
  std::string out = "x,ccdf\n";
  char buffer[64];
  for (const CcdfPoint& p : points) {
    std::snprintf(buffer, sizeof(buffer), "%llu,%.15e\n",
                  static_cast<unsigned long long>(p.x), p.probability);
    out += buffer;
  }
  return out;
}

std::string SummaryJson(const SummaryReport& s) {
  ordered_json doc = {{"places", s.places},
                      {"transitions", s.transitions},
                      {"pre_arcs", s.pre_arcs},
                      {"post_arcs", s.post_arcs},
                      {"accumulate_only", s.accumulate_only},
                      {"disposable", s.disposable}};
  return doc.dump();
}

std::string TopJson(const PlaceTransitionNet& net,
                    std::span<const ActivityEntry> entries) {
  ordered_json out = ordered_json::array();
  for (const ActivityEntry& e : entries) {
    out.push_back({{"address", net.address(e.place)},
                   {"pre", e.pre_nnz},
                   {"post", e.post_nnz},
                   {"total", std::uint64_t{e.pre_nnz} + e.post_nnz}});
  }
  return out.dump();
}

std::string RepeatsJson(const PlaceTransitionNet& net,
                        const RepeatGroups& groups) {
  ordered_json list = ordered_json::array();
  for (const auto& g : groups.groups) list.push_back(TxIds(net, g));
  ordered_json doc = {{"num_transitions", groups.num_transitions},
                      {"group_count", groups.groups.size()},
                      {"repetition_count", groups.repetition_count},
                      {"fraction", groups.fraction()},
                      {"groups", std::move(list)}};
  return doc.dump();
}

std::string IngestReportJson(const IngestReport& report,
                             const std::optional<ConversionReport>& conversion,
                             const std::optional<std::string>& generated_at) {
  ordered_json rejections = ordered_json::array();
  for (const Rejection& r : report.rejections) {
    rejections.push_back(
        {{"tx_id", r.tx_id}, {"height", r.height}, {"reason", r.reason}});
  }
  ordered_json doc;
  if (generated_at) doc["generated_at"] = *generated_at;
  doc["blocks"] = report.blocks;
  doc["transactions"] = report.transactions;
  doc["addresses"] = report.addresses;
  doc["pre_arcs"] = report.pre_arcs;
  doc["post_arcs"] = report.post_arcs;
  doc["rejects"] = report.rejects;
  doc["duplicates"] = report.duplicates;
  doc["rejections"] = std::move(rejections);
  if (conversion) {
    doc["conversion"] = {
        {"transactions", conversion->transactions},
        {"coinbase_transactions", conversion->coinbase_transactions},
        {"skipped_inputs", conversion->skipped_inputs},
        {"skipped_outputs", conversion->skipped_outputs},
        {"dropped_transactions", conversion->dropped_transactions}};
  }
  return doc.dump();
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace chainpetri
