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

#include <string>
#include <vector>

#include "ppm/fragments.hpp"
#include "ppm/gates.hpp"
#include "ppm/pattern.hpp"

namespace ppm {

enum class GateKind { H, S, Sdg, T, Tdg, CZ, CNOT };

std::string to_string(GateKind k);

struct Gate {
  GateKind kind = GateKind::H;
  // Control first for CNOT.
  std::vector<int> qubits;
  // Source line, 0 when built in code.
  int line = 0;
};

struct Circuit {
  int qubit_count = 0;
  std::vector<Gate> gates;

  int t_count() const;
};

// Line format: "qubits N" header, then one "LABEL q [q2]" per line. '#'
// starts a comment. Errors carry the offending line number.
Circuit parse_circuit(const std::string& text);
std::string to_text(const Circuit& c);

// Unitary on `lanes` qubits (at least c.qubit_count); qubit 0 is the most
// significant. Extra lanes carry the identity.
Matrix circuit_unitary(const Circuit& c, int lanes = -1);

struct BrickPlacement {
  // The brick's left lane; its right lane is first_lane + 1.
  int first_lane = 0;
  BrickSettings settings;
};

struct BrickLayer {
  std::vector<BrickPlacement> bricks;
};

struct CompiledCircuit {
  // Qubits rounded up to an even count of at least two.
  int lanes = 2;
  std::vector<BrickLayer> layers;
};

// Lane pairs of a layer: (0,1),(2,3),... on even layers. With more than two
// lanes odd layers pair (1,2),(3,4),...
std::vector<int> layer_pairs(int lanes, int layer);

// Greedy as-soon-as-possible placement of each gate's lane operations. T
// and Tdg on a lane whose side lacks them are conjugated by H. CNOT is an
// H-conjugated CZ. Sdg is three S. CZ is allowed only between neighbouring
// qubits.
CompiledCircuit compile_to_bricks(const Circuit& c);

// Product of the brick unitaries, last layer leftmost.
Matrix compiled_unitary(const CompiledCircuit& cc);

// Instantiates and composes one brick per placement. Brick variables are
// prefixed "L<layer>P<lane>." and layout sites shift two rows per layer and
// two columns per lane. Inputs and outputs are ordered by lane.
PatternFragment layout_brickwork(const CompiledCircuit& cc);

std::string describe(const CompiledCircuit& cc);

}  // namespace ppm
