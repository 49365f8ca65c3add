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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ppm/pattern.hpp"

namespace ppm {

struct ComposeResult {
  PatternFragment fragment;
  // Vertex of f2 -> vertex of the composite.
  std::vector<int> f2_vertices;
  // Prefix applied to every f2 variable, empty when there was no clash.
  std::string f2_prefix;
};

// Runs f1 then f2, identifying output u of f1 with input wiring[u] of f2.
// f2's input-error variables on wired inputs are replaced by f1's corrections
// for the matching output. Composite inputs are f1's inputs followed by the
// unwired inputs of f2; composite outputs are the unwired outputs of f1
// followed by f2's outputs. f2 layout sites are shifted by offset.
ComposeResult compose_detailed(const PatternFragment& f1, const PatternFragment& f2,
                               const std::map<int, int>& wiring, Site offset = {});

PatternFragment compose(const PatternFragment& f1, const PatternFragment& f2, const std::map<int, int>& wiring);

// Wires output wire i of f1 to input wire i of f2.
PatternFragment sequence(const PatternFragment& f1, const PatternFragment& f2);

PatternFragment rename_variables(const PatternFragment& f, const std::function<std::string(const std::string&)>& fn);
PatternFragment prefix_variables(const PatternFragment& f, const std::string& prefix);

}  // namespace ppm
