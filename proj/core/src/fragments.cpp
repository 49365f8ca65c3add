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

#include "ppm/fragments.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "ppm/brick_table.hpp"
#include "ppm/errors.hpp"
#include "ppm/verifier.hpp"

namespace ppm {

namespace {

void measure(PatternFragment& f, int v, const std::string& var, const BoolFn& choice) {
  f.pattern.measurements[v] = Measurement{var, choice};
}

BoolFn fn(const std::string& text) { return BoolFn::parse(text); }

const BoolFn kX = BoolFn::zero();
const BoolFn kZ = BoolFn::one();

}  // namespace

std::string to_string(EMode mode) {
  switch (mode) {
    case EMode::T: return "T";
    case EMode::Tdg: return "Tdg";
    case EMode::H: return "H";
    case EMode::S: return "S";
  }
  return "?";
}

std::string to_string(LaneGate g) {
  switch (g) {
    case LaneGate::Pad: return "I";
    case LaneGate::H: return "H";
    case LaneGate::S: return "S";
    case LaneGate::HSH: return "HSH";
    case LaneGate::HSHS: return "HSHS";
    case LaneGate::T: return "T";
    case LaneGate::Tdg: return "Tdg";
    case LaneGate::HTH: return "HTH";
    case LaneGate::HTdgH: return "HTdgH";
  }
  return "?";
}

std::optional<LaneGate> parse_lane_gate(const std::string& name) {
  if (name == "PAD" || name == "Pad" || name == "I") return LaneGate::Pad;
  for (LaneGate g : kAllLaneGates) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

Matrix lane_gate_unitary(LaneGate g) { return parse_unitary(to_string(g)); }

std::string BrickSettings::label() const {
  std::string lanes = to_string(left) + "@" + to_string(right);
  return cz ? "CZ*(" + lanes + ")" : lanes;
}

Matrix BrickSettings::unitary() const {
  Matrix u = kron(lane_gate_unitary(left), lane_gate_unitary(right));
  return cz ? Matrix(gates::CZ() * u) : u;
}

PatternFragment xhalf_fragment() {
  PatternFragment f;
  f.name = "xhalf";
  f.pattern.graph = PGraph(2, 2);
  f.pattern.graph.connect(0, 1, 2);
  measure(f, 0, "a", kX);
  f.inputs = {0};
  f.outputs = {1};
  f.input_errors[0] = {"z", "x"};
  f.corrections[1] = {fn("z ^ a"), fn("z ^ a ^ x ^ 1")};
  f.layout = {{0, {0, 0}}, {1, {0, 1}}};
  f.validate();
  return f;
}

namespace {

// Vertices: 0 a (input), 1 c, 2 output, 3 b, 4 d, 5 e.
PatternFragment e_shape(bool middle_hair) {
  PatternFragment f;
  const int n = middle_hair ? 6 : 5;
  const int e = middle_hair ? 5 : 4;
  f.pattern.graph = PGraph(n, 2);
  auto& g = f.pattern.graph;
  g.connect(0, 1, 2);
  g.connect(1, 2, 2);
  g.connect(0, 3, 1);
  if (middle_hair) g.connect(1, 4, 2);
  g.connect(2, e, 2);
  measure(f, 0, "a", kX);
  measure(f, 1, "c", kX);
  measure(f, 3, "b", kX);
  if (middle_hair) measure(f, 4, "d", kX);
  measure(f, e, "e", kX);
  f.inputs = {0};
  f.outputs = {2};
  f.input_errors[0] = {"z", "x"};
  f.layout = {{0, {0, 0}}, {1, {0, 1}}, {2, {0, 2}}, {3, {1, 0}}, {e, {1, 2}}};
  if (middle_hair) f.layout[4] = {1, 1};
  return f;
}

}  // namespace

PatternFragment e_fragment(EMode mode) {
  PatternFragment f = e_shape(true);
  f.name = "e_" + to_string(mode);
  switch (mode) {
    case EMode::T:
    case EMode::Tdg:
      f.pattern.measurements[3].choice = kZ;
      f.pattern.measurements[5].choice = mode == EMode::T ? fn("b ^ x") : fn("b ^ x ^ 1");
      break;
    case EMode::H:
      f.pattern.measurements[4].choice = kZ;
      break;
    case EMode::S:
      f.pattern.measurements[5].choice = kZ;
      break;
  }
  if (mode == EMode::T) {
    f.corrections[2] = {fn("a ^ c ^ d ^ e ^ z ^ (b ^ x)*(c ^ d ^ x ^ 1)"), fn("c ^ d ^ x ^ 1")};
  } else {
    const char* target = mode == EMode::Tdg ? "Tdg" : (mode == EMode::H ? "H" : "S");
    f.corrections = infer_corrections(f, parse_unitary(target));
  }
  f.validate();
  return f;
}

PatternFragment e_fragment_without_middle_hair() {
  PatternFragment f = e_shape(false);
  f.name = "e_T_nomid";
  f.pattern.measurements[3].choice = kZ;
  f.pattern.measurements[4].choice = fn("b ^ x");
  f.corrections = infer_corrections(f, gates::T());
  f.validate();
  return f;
}

namespace {

// Vertices: 0 q1, 1 q2, 2 a, 3 b.
PatternFragment cz_shape(bool on) {
  PatternFragment f;
  f.name = on ? "cz_on" : "cz_off";
  f.pattern.graph = PGraph(4, 2);
  auto& g = f.pattern.graph;
  g.connect(0, 3, 2);
  g.connect(1, 3, 2);
  g.connect(2, 3, 2);
  measure(f, 2, "a", on ? kZ : kX);
  measure(f, 3, "b", on ? kX : kZ);
  f.inputs = {0, 1};
  f.outputs = {0, 1};
  f.input_errors[0] = {"z1", "x1"};
  f.input_errors[1] = {"z2", "x2"};
  f.layout = {{0, {0, 2}}, {1, {0, 0}}, {2, {1, 1}}, {3, {0, 1}}};
  return f;
}

Dictionary local_dictionary() {
  std::vector<std::string> labels;
  for (LaneGate a : kAllLaneGates) {
    for (LaneGate b : kAllLaneGates) labels.push_back(to_string(a) + "@" + to_string(b));
  }
  return make_dictionary(labels);
}

}  // namespace

std::string cz_off_label() {
  static const std::string label = [] {
    auto cls = classify_up_to_pauli(provisional_unitary(cz_shape(false)), local_dictionary());
    if (!cls) throw InferenceError("switched-off CZ fragment does not match any product of lane gates");
    return cls->label;
  }();
  return label;
}

PatternFragment cz_fragment(bool on) {
  PatternFragment f = cz_shape(on);
  if (on) {
    f.corrections[0] = {fn("z1 ^ x2 ^ a ^ b ^ 1"), fn("x1")};
    f.corrections[1] = {fn("z2 ^ x1 ^ a ^ b ^ 1"), fn("x2")};
  } else {
    f.corrections = infer_corrections(f, parse_unitary(cz_off_label()));
  }
  f.validate();
  return f;
}

namespace {

struct BrickVertex {
  const char* name;
  Site site;
};

// Index order is the vertex numbering.
constexpr BrickVertex kBrick[] = {
    {"l0", {2, 0}}, {"r0", {4, 1}},  {"bL", {0, 0}}, {"sB", {0, 1}}, {"sR", {5, 1}}, {"l1", {2, 1}},
    {"dL", {1, 1}}, {"r1", {4, 2}},  {"bR", {5, 2}}, {"dR", {6, 2}}, {"l2", {2, 2}}, {"eL", {1, 2}},
    {"r2", {4, 3}}, {"sT", {6, 3}},  {"czb", {3, 3}}, {"cza", {3, 2}},
};

}  // namespace

int brick_vertex(const std::string& name) {
  for (int v = 0; v < 16; ++v) {
    if (name == kBrick[v].name) return v;
  }
  throw StructuralError("unknown brick vertex '" + name + "'");
}

const std::vector<std::string>& brick_left_hairs() {
  static const std::vector<std::string> hairs = {"sB", "bL", "dL", "eL"};
  return hairs;
}

const std::vector<std::string>& brick_right_hairs() {
  static const std::vector<std::string> hairs = {"sR", "bR", "dR", "sT"};
  return hairs;
}

PatternFragment brick_topology() {
  PatternFragment f;
  f.name = "brick";
  f.pattern.graph = PGraph(16, 2);
  auto& g = f.pattern.graph;
  auto link = [&](const char* a, const char* b, int k) { g.connect(brick_vertex(a), brick_vertex(b), k); };
  link("l0", "l1", 2);
  link("l1", "l2", 2);
  link("r0", "r1", 2);
  link("r1", "r2", 2);
  link("l0", "bL", 1);
  link("l0", "sB", 2);
  link("l1", "dL", 2);
  link("l2", "eL", 2);
  link("r0", "sR", 2);
  link("r1", "bR", 1);
  link("r1", "dR", 2);
  link("r2", "sT", 2);
  link("l2", "czb", 2);
  link("r2", "czb", 2);
  link("cza", "czb", 2);
  for (int v = 0; v < 16; ++v) {
    f.layout[v] = kBrick[v].site;
    const std::string name = kBrick[v].name;
    if (name == "l2" || name == "r2") continue;
    measure(f, v, name, kX);
  }
  f.inputs = {brick_vertex("l0"), brick_vertex("r0")};
  f.outputs = {brick_vertex("l2"), brick_vertex("r2")};
  f.input_errors[f.inputs[0]] = {"zL", "xL"};
  f.input_errors[f.inputs[1]] = {"zR", "xR"};
  f.validate(false);
  return f;
}

PatternFragment brick(const BrickSettings& settings) {
  const BrickTableEntry* e = shipped_brick_table().find(settings);
  if (!e) throw StructuralError("brick settings " + settings.label() + " have no witness in the brick table");
  return brick_from_entry(*e);
}

PatternFragment hierarchy_fragment(int m, int cap) {
  if (m < 1) throw StructuralError("hierarchy exponent must be at least 1");
  if (m > cap) throw CapacityError("hierarchy exponent " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  PatternFragment f;
  f.name = "hier_m" + std::to_string(m);
  const int bundle = 1 << (m - 1);
  const int n = 5 + (m - 1);
  f.pattern.graph = PGraph(n, m);
  auto& g = f.pattern.graph;
  g.connect(0, 1, bundle);
  g.connect(1, 2, bundle);
  g.connect(0, 3, 1);
  g.connect(1, 4, bundle);
  measure(f, 0, "a", kX);
  measure(f, 1, "c", kX);
  measure(f, 3, "b", kZ);
  measure(f, 4, "d", kX);
  // Stage k fires when every earlier stage injected the wrong sign.
  const BoolFn frame_x = fn("c ^ d ^ x ^ 1");
  BoolFn fire = fn("b ^ x");
  for (int k = 1; k < m; ++k) {
    const int v = 4 + k;
    g.connect(2, v, 1 << k);
    const std::string var = k == 1 ? "e" : "e" + std::to_string(k);
    measure(f, v, var, fire);
    fire = fire * (BoolFn::var(var) ^ frame_x);
  }
  f.inputs = {0};
  f.outputs = {2};
  f.input_errors[0] = {"z", "x"};
  f.corrections = infer_corrections(f, gates::zrot(std::numbers::pi / std::ldexp(1.0, m)));
  f.validate();
  return f;
}

std::vector<int> hierarchy_stage_vertices(int m) {
  std::vector<int> out;
  for (int k = 1; k < m; ++k) out.push_back(4 + k);
  return out;
}

std::vector<std::string> builtin_names() {
  return {"xhalf", "e_t", "e_tdg", "e_h", "e_s", "e_t_nomid", "cz_on", "cz_off", "brick",
          "hier_m1", "hier_m2", "hier_m3", "hier_m4"};
}

Builtin builtin(const std::string& name) {
  if (name == "xhalf") return {name, xhalf_fragment(), "X(pi/2)"};
  if (name == "e_t") return {name, e_fragment(EMode::T), "T"};
  if (name == "e_tdg") return {name, e_fragment(EMode::Tdg), "Tdg"};
  if (name == "e_h") return {name, e_fragment(EMode::H), "H"};
  if (name == "e_s") return {name, e_fragment(EMode::S), "S"};
  if (name == "e_t_nomid") return {name, e_fragment_without_middle_hair(), "T"};
  if (name == "cz_on") return {name, cz_fragment(true), "CZ"};
  if (name == "cz_off") return {name, cz_fragment(false), cz_off_label()};
  if (name == "brick" || name.rfind("brick:", 0) == 0) {
    BrickSettings s{LaneGate::T, LaneGate::HTH, false};
    if (name != "brick") {
      // brick:LEFT,RIGHT,CZ
      std::string rest = name.substr(6);
      std::vector<std::string> parts;
      size_t start = 0;
      for (size_t i = 0; i <= rest.size(); ++i) {
        if (i == rest.size() || rest[i] == ',') {
          parts.push_back(rest.substr(start, i - start));
          start = i + 1;
        }
      }
      if (parts.size() != 3) throw ParseError("brick builtin expects brick:LEFT,RIGHT,CZ");
      auto l = parse_lane_gate(parts[0]);
      auto r = parse_lane_gate(parts[1]);
      if (!l || !r || (parts[2] != "0" && parts[2] != "1")) throw ParseError("bad brick settings '" + rest + "'");
      s = {*l, *r, parts[2] == "1"};
    }
    return {name, brick(s), s.label()};
  }
  if (name.rfind("hier_m", 0) == 0) {
    const std::string digits = name.substr(6);
    bool ok = !digits.empty() && digits.size() <= 2;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) {
      const int m = std::stoi(digits);
      return {name, hierarchy_fragment(m), "Z(pi/2^" + digits + ")"};
    }
  }
  throw ParseError("unknown builtin fragment '" + name + "'");
}

}  // namespace ppm
