// Copyright 2026 The ppm Authors
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

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ppm/fragments.hpp"
#include "ppm/verifier.hpp"

namespace ppm {

struct BrickTableEntry {
  BrickSettings settings;
  // Measured brick vertex -> choice function.
  std::map<int, BoolFn> choices;
  // Output brick vertex -> frame functions.
  std::map<int, Correction> corrections;
  std::string label;
  double worst_infidelity = 0.0;
  size_t branch_count = 0;
};

struct BrickTable {
  std::vector<BrickTableEntry> entries;
  // Lane gates with a witness on each side.
  std::vector<LaneGate> left_gates;
  std::vector<LaneGate> right_gates;

  const BrickTableEntry* find(const BrickSettings& s) const;
  bool supports(const BrickSettings& s) const { return find(s) != nullptr; }
  nlohmann::ordered_json to_json() const;
  static BrickTable from_json(const nlohmann::json& j);
};

// Built from the table data compiled into the library.
const BrickTable& shipped_brick_table();

PatternFragment brick_from_entry(const BrickTableEntry& e);

struct DeriveOptions {
  VerifyOptions verify;
  // Stop after finding lane witnesses, without certifying product entries.
  bool certify_entries = true;
};

// Enumerates lane and hub basis assignments on the brick topology, labels
// each by the operator it realizes, infers adaptive rules for T-like hairs,
// then certifies every (left, right, cz) combination exhaustively. Throws
// InferenceError if any advertised lane gate lacks a witness.
BrickTable derive_brick_table(const PatternFragment& topology, const DeriveOptions& opts = {},
                              std::ostream* log = nullptr);

}  // namespace ppm
