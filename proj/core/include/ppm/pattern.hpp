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
#include <set>
#include <string>
#include <vector>

#include "ppm/basis.hpp"
#include "ppm/boolfn.hpp"
#include "ppm/pgraph.hpp"

namespace ppm {

struct Measurement {
  std::string var;
  BoolFn choice;

  bool operator==(const Measurement&) const = default;
};

struct MeasurementPattern {
  PGraph graph;
  std::map<int, Measurement> measurements;

  // Checks vertex ranges, variable freshness and that every choice function
  // reads only measurement outputs or the given extra variables.
  void validate(const std::set<std::string>& extra_vars = {}) const;
  // Output variable name -> vertex that produces it.
  std::map<std::string, int> var_owners() const;
  std::vector<int> unmeasured() const;

  bool operator==(const MeasurementPattern&) const = default;
};

// Names of the (z, x) input-error variables of one input wire.
struct ErrorVars {
  std::string z;
  std::string x;

  bool operator==(const ErrorVars&) const = default;
};

// Output frame X^xi Z^zeta of one output wire.
struct Correction {
  BoolFn zeta;
  BoolFn xi;

  bool operator==(const Correction&) const = default;
};

// Grid coordinate used by tiling checks and DOT export.
struct Site {
  int col = 0;
  int row = 0;

  auto operator<=>(const Site&) const = default;
};

// Wire i enters at inputs[i] and leaves at outputs[i].
struct PatternFragment {
  std::string name;
  MeasurementPattern pattern;
  std::vector<int> inputs;
  std::vector<int> outputs;
  std::map<int, ErrorVars> input_errors;
  std::map<int, Correction> corrections;
  std::map<int, Site> layout;

  const PGraph& graph() const { return pattern.graph; }
  std::set<std::string> error_variables() const;
  std::set<std::string> measurement_variables() const;
  // Error variables listed wire by wire as z0, x0, z1, x1, ...
  std::vector<std::string> ordered_error_variables() const;
  // Throws StructuralError on any violated fragment invariant.
  void validate(bool require_corrections = true) const;
  int input_wire(int vertex) const;
  int output_wire(int vertex) const;

  bool operator==(const PatternFragment&) const = default;
};

// Vertex pairs sharing a grid site.
std::vector<std::pair<int, int>> layout_collisions(const PatternFragment& f);

}  // namespace ppm
