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

#include "ppm/compiler.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ppm/brick_table.hpp"
#include "ppm/compose.hpp"
#include "ppm/errors.hpp"

namespace ppm {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

int Circuit::t_count() const {
  int n = 0;
  for (const auto& g : gates) n += g.kind == GateKind::T || g.kind == GateKind::Tdg;
  return n;
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 9) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  out = std::stoi(s);
  return true;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  static const std::map<std::string, GateKind> kinds = {
      {"H", GateKind::H},     {"S", GateKind::S},   {"Sdg", GateKind::Sdg},   {"T", GateKind::T},
      {"Tdg", GateKind::Tdg}, {"CZ", GateKind::CZ}, {"CNOT", GateKind::CNOT}, {"CX", GateKind::CNOT}};
  Circuit c;
  bool header = false;
  std::istringstream is(text);
  int lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    auto fail = [&](const std::string& why) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + why, lineno);
    };
    if (words[0] == "qubits") {
      if (header) fail("duplicate qubits header");
      if (!c.gates.empty()) fail("qubits header after gates");
      int n = 0;
      if (words.size() != 2 || !parse_int(words[1], n) || n < 1) fail("expected 'qubits N' with N >= 1");
      c.qubit_count = n;
      header = true;
      continue;
    }
    auto it = kinds.find(words[0]);
    if (it == kinds.end()) fail("unknown gate '" + words[0] + "'");
    if (!header) fail("gate before the qubits header");
    Gate g;
    g.kind = it->second;
    g.line = lineno;
    const size_t arity = (g.kind == GateKind::CZ || g.kind == GateKind::CNOT) ? 2 : 1;
    if (words.size() - 1 != arity) {
      fail(words[0] + " takes " + std::to_string(arity) + " operand" + (arity == 1 ? "" : "s"));
    }
    for (size_t i = 1; i < words.size(); ++i) {
      int q = 0;
      if (!parse_int(words[i], q)) fail("operand '" + words[i] + "' is not a qubit index");
      if (q >= c.qubit_count) fail("operand " + words[i] + " out of range for " + std::to_string(c.qubit_count) + " qubits");
      g.qubits.push_back(q);
    }
    if (arity == 2 && g.qubits[0] == g.qubits[1]) fail(words[0] + " operands must differ");
    c.gates.push_back(std::move(g));
  }
  if (!header) throw ParseError("missing 'qubits N' header", lineno);
  return c;
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.qubit_count << "\n";
  for (const auto& g : c.gates) {
    os << to_string(g.kind);
    for (int q : g.qubits) os << ' ' << q;
    os << "\n";
  }
  return os.str();
}

namespace {

Matrix on_lanes(const Matrix& u, int first, int lanes) {
  const int k = qubits_of(u);
  Matrix out = gates::identity(first);
  out = kron(out, u);
  return kron(out, gates::identity(lanes - first - k));
}

Matrix controlled_on(int control, int target, int lanes, bool cnot) {
  const Eigen::Index d = Eigen::Index{1} << lanes;
  Matrix m = Matrix::Zero(d, d);
  const Eigen::Index cb = Eigen::Index{1} << (lanes - 1 - control);
  const Eigen::Index tb = Eigen::Index{1} << (lanes - 1 - target);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (cnot) {
      m((i & cb) ? (i ^ tb) : i, i) = 1.0;
    } else {
      m(i, i) = ((i & cb) && (i & tb)) ? -1.0 : 1.0;
    }
  }
  return m;
}

}  // namespace

Matrix circuit_unitary(const Circuit& c, int lanes) {
  if (lanes < 0) lanes = c.qubit_count;
  if (lanes < c.qubit_count) throw DimensionError("fewer lanes than circuit qubits");
  if (lanes > 12) throw CapacityError("circuit_unitary is limited to 12 qubits");
  Matrix u = gates::identity(lanes);
  for (const auto& g : c.gates) {
    Matrix step;
    switch (g.kind) {
      case GateKind::H: step = on_lanes(gates::H(), g.qubits[0], lanes); break;
      case GateKind::S: step = on_lanes(gates::S(), g.qubits[0], lanes); break;
      case GateKind::Sdg: step = on_lanes(gates::Sdg(), g.qubits[0], lanes); break;
      case GateKind::T: step = on_lanes(gates::T(), g.qubits[0], lanes); break;
      case GateKind::Tdg: step = on_lanes(gates::Tdg(), g.qubits[0], lanes); break;
      case GateKind::CZ: step = controlled_on(g.qubits[0], g.qubits[1], lanes, false); break;
      case GateKind::CNOT: step = controlled_on(g.qubits[0], g.qubits[1], lanes, true); break;
    }
    u = step * u;
  }
  return u;
}

std::vector<int> layer_pairs(int lanes, int layer) {
  std::vector<int> out;
  const int start = (lanes > 2 && layer % 2 == 1) ? 1 : 0;
  for (int a = start; a + 1 < lanes; a += 2) out.push_back(a);
  return out;
}

namespace {

class Placer {
 public:
  Placer(int lanes, const BrickTable& table) : lanes_(lanes), table_(table), frontier_(static_cast<size_t>(lanes), 0) {}

  // Side of lane q in a layer: 0 left, 1 right, -1 unpaired.
  int side(int q, int layer) const {
    for (int a : layer_pairs(lanes_, layer)) {
      if (q == a) return 0;
      if (q == a + 1) return 1;
    }
    return -1;
  }

  bool side_supports(int s, LaneGate g) const {
    const auto& gs = s == 0 ? table_.left_gates : table_.right_gates;
    return std::find(gs.begin(), gs.end(), g) != gs.end();
  }

  // Whether lane q ever sits on a side that realizes g.
  bool reaches(int q, LaneGate g) const {
    for (int layer = 0; layer < 2; ++layer) {
      int s = side(q, layer);
      if (s >= 0 && side_supports(s, g)) return true;
    }
    return false;
  }

  void lane_op(int q, LaneGate g) {
    if (!reaches(q, g)) {
      LaneGate conj = g == LaneGate::T ? LaneGate::HTH : g == LaneGate::Tdg ? LaneGate::HTdgH
                    : g == LaneGate::HTH ? LaneGate::T : g == LaneGate::HTdgH ? LaneGate::Tdg : LaneGate::Pad;
      if (conj == LaneGate::Pad || !reaches(q, conj) || !reaches(q, LaneGate::H)) {
        throw StructuralError("lane " + std::to_string(q) + " cannot realize " + to_string(g));
      }
      lane_op(q, LaneGate::H);
      lane_op(q, conj);
      lane_op(q, LaneGate::H);
      return;
    }
    for (int layer = frontier_[static_cast<size_t>(q)];; ++layer) {
      int s = side(q, layer);
      if (s < 0 || !side_supports(s, g)) continue;
      BrickSettings& b = slot(layer, q);
      (s == 0 ? b.left : b.right) = g;
      frontier_[static_cast<size_t>(q)] = layer + 1;
      return;
    }
  }

  void cz(int a, int b) {
    if (std::abs(a - b) != 1) {
      throw StructuralError("CZ between non-adjacent qubits " + std::to_string(a) + " and " + std::to_string(b));
    }
    const int lo = std::min(a, b);
    const size_t ua = static_cast<size_t>(a), ub = static_cast<size_t>(b);
    for (int layer = std::max(0, std::max(frontier_[ua], frontier_[ub]) - 1);; ++layer) {
      if (side(lo, layer) != 0) continue;
      BrickSettings& s = slot(layer, lo);
      if (s.cz) continue;
      s.cz = true;
      frontier_[ua] = frontier_[ub] = layer + 1;
      return;
    }
  }

  CompiledCircuit finish() {
    CompiledCircuit cc;
    cc.lanes = lanes_;
    if (layers_.empty()) layers_.emplace_back();
    for (size_t layer = 0; layer < layers_.size(); ++layer) {
      BrickLayer bl;
      for (int a : layer_pairs(lanes_, static_cast<int>(layer))) {
        auto it = layers_[layer].find(a);
        bl.bricks.push_back({a, it == layers_[layer].end() ? BrickSettings{} : it->second});
      }
      cc.layers.push_back(std::move(bl));
    }
    return cc;
  }

 private:
  // Brick containing lane q at a layer, created on demand.
  BrickSettings& slot(int layer, int q) {
    while (static_cast<int>(layers_.size()) <= layer) layers_.emplace_back();
    int a = side(q, layer) == 0 ? q : q - 1;
    return layers_[static_cast<size_t>(layer)][a];
  }

  int lanes_;
  const BrickTable& table_;
  std::vector<int> frontier_;
  std::vector<std::map<int, BrickSettings>> layers_;
};

}  // namespace

CompiledCircuit compile_to_bricks(const Circuit& c) {
  if (c.qubit_count < 1) throw StructuralError("circuit needs at least one qubit");
  int lanes = std::max(2, c.qubit_count + (c.qubit_count % 2));
  Placer p(lanes, shipped_brick_table());
  for (const auto& g : c.gates) {
    const int q = g.qubits[0];
    switch (g.kind) {
      case GateKind::H: p.lane_op(q, LaneGate::H); break;
      case GateKind::S: p.lane_op(q, LaneGate::S); break;
      case GateKind::Sdg:
        for (int i = 0; i < 3; ++i) p.lane_op(q, LaneGate::S);
        break;
      case GateKind::T: p.lane_op(q, LaneGate::T); break;
      case GateKind::Tdg: p.lane_op(q, LaneGate::Tdg); break;
      case GateKind::CZ: p.cz(q, g.qubits[1]); break;
      case GateKind::CNOT:
        p.lane_op(g.qubits[1], LaneGate::H);
        p.cz(q, g.qubits[1]);
        p.lane_op(g.qubits[1], LaneGate::H);
        break;
    }
  }
  return p.finish();
}

Matrix compiled_unitary(const CompiledCircuit& cc) {
  Matrix u = gates::identity(cc.lanes);
  for (const auto& layer : cc.layers) {
    Matrix step = gates::identity(cc.lanes);
    for (const auto& b : layer.bricks) step = on_lanes(b.settings.unitary(), b.first_lane, cc.lanes) * step;
    u = step * u;
  }
  return u;
}

PatternFragment layout_brickwork(const CompiledCircuit& cc) {
  if (cc.layers.empty()) throw StructuralError("layout_brickwork needs at least one layer");
  const auto lanes = static_cast<size_t>(cc.lanes);
  std::vector<int> in_vertex(lanes, -1), out_vertex(lanes, -1);
  PatternFragment acc;
  acc.pattern.graph = PGraph(0, 2);
  bool first = true;
  for (size_t layer = 0; layer < cc.layers.size(); ++layer) {
    for (const auto& bp : cc.layers[layer].bricks) {
      PatternFragment b = prefix_variables(brick(bp.settings),
                                           "L" + std::to_string(layer) + "P" + std::to_string(bp.first_lane) + ".");
      const auto a = static_cast<size_t>(bp.first_lane);
      const Site offset{2 * bp.first_lane, 2 * static_cast<int>(layer)};
      if (first) {
        for (auto& [v, s] : b.layout) s = Site{s.col + offset.col, s.row + offset.row};
        acc = b;
        in_vertex[a] = b.inputs[0];
        in_vertex[a + 1] = b.inputs[1];
        out_vertex[a] = b.outputs[0];
        out_vertex[a + 1] = b.outputs[1];
        first = false;
        continue;
      }
      std::map<int, int> wiring;
      if (out_vertex[a] >= 0) wiring[out_vertex[a]] = b.inputs[0];
      if (out_vertex[a + 1] >= 0) wiring[out_vertex[a + 1]] = b.inputs[1];
      ComposeResult r = compose_detailed(acc, b, wiring, offset);
      acc = std::move(r.fragment);
      for (size_t side = 0; side < 2; ++side) {
        const int in = r.f2_vertices[static_cast<size_t>(b.inputs[side])];
        if (in_vertex[a + side] < 0) in_vertex[a + side] = in;
        out_vertex[a + side] = r.f2_vertices[static_cast<size_t>(b.outputs[side])];
      }
    }
  }
  for (size_t q = 0; q < lanes; ++q) {
    if (in_vertex[q] < 0) throw StructuralError("lane " + std::to_string(q) + " never enters a brick");
  }
  acc.inputs = in_vertex;
  acc.outputs = out_vertex;
  acc.name = "brickwork(" + std::to_string(cc.layers.size()) + (cc.layers.size() == 1 ? " layer)" : " layers)");
  acc.validate();
  return acc;
}

std::string describe(const CompiledCircuit& cc) {
  std::ostringstream os;
  for (size_t layer = 0; layer < cc.layers.size(); ++layer) {
    os << "layer " << layer << ":";
    for (const auto& b : cc.layers[layer].bricks) {
      os << " [" << b.first_lane << "," << b.first_lane + 1 << "] " << to_string(b.settings.left) << " | "
         << to_string(b.settings.right) << (b.settings.cz ? " +CZ" : "");
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ppm
