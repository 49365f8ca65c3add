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

#include <optional>
#include <string>
#include <vector>

#include "ppm/gates.hpp"
#include "ppm/pattern.hpp"

namespace ppm {

enum class EMode { T, Tdg, H, S };

std::string to_string(EMode mode);

// Single-lane gates a brick can realize. Pad is the identity lane.
enum class LaneGate { Pad, H, S, HSH, HSHS, T, Tdg, HTH, HTdgH };

inline constexpr LaneGate kAllLaneGates[] = {LaneGate::Pad, LaneGate::H,   LaneGate::S,
                                             LaneGate::HSH, LaneGate::HSHS, LaneGate::T,
                                             LaneGate::Tdg, LaneGate::HTH,  LaneGate::HTdgH};

std::string to_string(LaneGate g);
// Accepts the names above plus "I" and "PAD" for the identity lane.
std::optional<LaneGate> parse_lane_gate(const std::string& name);
Matrix lane_gate_unitary(LaneGate g);

struct BrickSettings {
  LaneGate left = LaneGate::Pad;
  LaneGate right = LaneGate::Pad;
  bool cz = false;

  // e.g. "CZ*(T@HTH)" or "T@HTH"; Pad prints as I.
  std::string label() const;
  // CZ^cz (left @ right)
  Matrix unitary() const;

  bool operator==(const BrickSettings&) const = default;
};

// Two vertices joined by a double edge; the input is X-measured.
PatternFragment xhalf_fragment();

// Six vertices: input spine vertex a, middle spine c, output, a single-edge
// hair b on the input, and double-edge hairs d (middle) and e (output).
PatternFragment e_fragment(EMode mode);
// T mode without the middle hair d.
PatternFragment e_fragment_without_middle_hair();

// Lanes q1, q2 (input and output) joined through hub b, with hair a on b.
// on: a in Z, b in X gives CZ. off: a in X, b in Z leaves local phases.
PatternFragment cz_fragment(bool on);
// Label of the local gates left by the switched-off CZ fragment, derived
// from its provisional branch.
std::string cz_off_label();

// Sixteen-vertex brick: two lanes l0 -> l1 -> l2 and r0 -> r1 -> r2 with
// hairs, joined at the outputs through a CZ hub. All measured vertices
// default to X and no corrections are attached.
PatternFragment brick_topology();
// Brick vertex by variable name ("l0", "bL", ..., "l2", "r2").
int brick_vertex(const std::string& name);
// Measured vertices of each lane, in table order.
const std::vector<std::string>& brick_left_hairs();
const std::vector<std::string>& brick_right_hairs();
// Brick with bases and corrections taken from the shipped table.
PatternFragment brick(const BrickSettings& settings);

// Z(pi / 2^m) with stage hairs cancelling residual rotations. Spine links
// carry 2^(m-1) edges, so a single edge is P(pi / 2^m).
PatternFragment hierarchy_fragment(int m, int cap = 16);
// Vertices of the cascade stage hairs, stage 1 first.
std::vector<int> hierarchy_stage_vertices(int m);

struct Builtin {
  std::string name;
  PatternFragment fragment;
  // Label accepted by parse_unitary.
  std::string target;
};

// Stable registry names: xhalf, e_t, e_tdg, e_h, e_s, e_t_nomid, cz_on,
// cz_off, brick, brick:L,R,cz, hier_m{K}.
std::vector<std::string> builtin_names();
Builtin builtin(const std::string& name);

}  // namespace ppm
