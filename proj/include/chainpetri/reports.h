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

#include <optional>
#include <span>
#include <string>

#include "chainpetri/analytics.h"
#include "chainpetri/block.h"
#include "chainpetri/chains.h"
#include "chainpetri/entities.h"
#include "chainpetri/ingest.h"
#include "chainpetri/net.h"

namespace chainpetri {

// Machine-readable exports. JSON documents are compact and end without a
// trailing newline; CSV files end with one.

// [{"entity": i, "size": n, "addresses": [...]}, ...] by descending size,
// ties by entity index.
std::string EntityReportJson(const PlaceTransitionNet& net,
                             const EntityPartition& partition);

// [{"length": n, "transactions": [...], "addresses": [...]}, ...] in the
// order of `chains` (descending length). Addresses are every address the
// chain's transactions touch, in first-use order.
std::string ChainReportJson(const PlaceTransitionNet& net,
                            const ChainSet& chains);

// Totals, including the count without single-link chains.
std::string ChainSummaryJson(const PlaceTransitionNet& net,
                             const DisposableSets& sets,
                             const ChainSet& chains);

// Header "x,ccdf"; probabilities in scientific notation with 16
// significant digits.
std::string CcdfCsv(std::span<const CcdfPoint> points);

std::string SummaryJson(const SummaryReport& summary);

std::string TopJson(const PlaceTransitionNet& net,
                    std::span<const ActivityEntry> entries);

// Groups as transaction-id lists plus both the group count and the number
// of repetitions beyond the first member.
std::string RepeatsJson(const PlaceTransitionNet& net,
                        const RepeatGroups& groups);

std::string IngestReportJson(const IngestReport& report,
                             const std::optional<ConversionReport>& conversion,
                             const std::optional<std::string>& generated_at);

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string UtcTimestamp();

}  // namespace chainpetri
