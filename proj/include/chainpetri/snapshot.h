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

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "chainpetri/net.h"

namespace chainpetri {

inline constexpr int kSnapshotVersion = 1;

// Writes a sealed net as a single JSON document:
//   {"version":1,"places":[...],"transitions":[...],
//    "pre":[[row,col,value],...],"post":[[row,col,value],...]}
// Triplets are sorted by row then column.
void SaveSnapshot(const PlaceTransitionNet& net, std::ostream& out);
void SaveSnapshot(const PlaceTransitionNet& net,
                  const std::filesystem::path& path);

// Reads a snapshot back into a sealed net. Throws SnapshotError naming the
// offending section on corrupt, truncated or version-mismatched input.
// ParseSnapshot takes the document text; LoadSnapshot reads it from a file
// and additionally throws std::ios_base::failure if the file is unreadable.
PlaceTransitionNet ParseSnapshot(std::string_view text);
PlaceTransitionNet LoadSnapshot(const std::filesystem::path& path);

}  // namespace chainpetri
