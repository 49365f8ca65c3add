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

#include "ppm/compose.hpp"

#include <set>

#include "ppm/errors.hpp"

namespace ppm {

namespace {

std::set<std::string> all_variables(const PatternFragment& f) {
  auto vs = f.error_variables();
  auto ms = f.measurement_variables();
  vs.insert(ms.begin(), ms.end());
  return vs;
}

}  // namespace

PatternFragment rename_variables(const PatternFragment& f, const std::function<std::string(const std::string&)>& fn) {
  PatternFragment out = f;
  for (auto& [v, m] : out.pattern.measurements) {
    m.var = fn(m.var);
    m.choice = m.choice.rename(fn);
  }
  for (auto& [v, e] : out.input_errors) {
    e.z = fn(e.z);
    e.x = fn(e.x);
  }
  for (auto& [v, c] : out.corrections) {
    c.zeta = c.zeta.rename(fn);
    c.xi = c.xi.rename(fn);
  }
  return out;
}

PatternFragment prefix_variables(const PatternFragment& f, const std::string& prefix) {
  return rename_variables(f, [&](const std::string& s) { return prefix + s; });
}

ComposeResult compose_detailed(const PatternFragment& f1, const PatternFragment& f2,
                               const std::map<int, int>& wiring, Site offset) {
  if (f1.graph().base_exponent() != f2.graph().base_exponent()) {
    throw StructuralError("cannot compose fragments with different base exponents");
  }
  std::set<int> f1_outs(f1.outputs.begin(), f1.outputs.end());
  std::set<int> f2_ins(f2.inputs.begin(), f2.inputs.end());
  std::set<int> targets;
  for (const auto& [u, w] : wiring) {
    if (!f1_outs.count(u)) throw StructuralError("wiring source " + std::to_string(u) + " is not an output of f1");
    if (!f2_ins.count(w)) throw StructuralError("wiring target " + std::to_string(w) + " is not an input of f2");
    if (!targets.insert(w).second) throw StructuralError("wiring is not injective at f2 input " + std::to_string(w));
    if (!f1.corrections.count(u)) {
      throw StructuralError("wired output " + std::to_string(u) + " of f1 has no correction");
    }
  }

  ComposeResult res;
  PatternFragment g = f2;
  const auto used = all_variables(f1);
  const auto theirs = all_variables(f2);
  bool clash = false;
  for (const auto& v : theirs) clash = clash || used.count(v);
  if (clash) {
    for (int n = 1;; ++n) {
      std::string prefix = "c" + std::to_string(n) + ".";
      bool ok = true;
      for (const auto& v : theirs) ok = ok && !used.count(prefix + v);
      if (ok) {
        res.f2_prefix = prefix;
        break;
      }
    }
    g = prefix_variables(f2, res.f2_prefix);
  }

  // Vertex map for f2.
  std::map<int, int> wired_in;  // f2 input -> f1 output
  for (const auto& [u, w] : wiring) wired_in[w] = u;
  PatternFragment& out = res.fragment;
  out.pattern.graph = f1.graph();
  PGraph& graph = out.pattern.graph;
  res.f2_vertices.assign(static_cast<size_t>(g.graph().vertex_count()), -1);
  for (int v = 0; v < g.graph().vertex_count(); ++v) {
    auto it = wired_in.find(v);
    res.f2_vertices[static_cast<size_t>(v)] = it != wired_in.end() ? it->second : graph.add_vertex();
  }
  const auto& vmap = res.f2_vertices;
  for (const auto& [e, k] : g.graph().edges()) {
    graph.connect(vmap[static_cast<size_t>(e.first)], vmap[static_cast<size_t>(e.second)], k);
  }

  // Error variables of wired f2 inputs become f1's frame on that wire.
  std::map<std::string, BoolFn> subst;
  for (const auto& [w, u] : wired_in) {
    const ErrorVars& ev = g.input_errors.at(w);
    const Correction& c = f1.corrections.at(u);
    subst[ev.z] = c.zeta;
    subst[ev.x] = c.xi;
  }

  out.pattern.measurements = f1.pattern.measurements;
  for (const auto& [v, m] : g.pattern.measurements) {
    out.pattern.measurements[vmap[static_cast<size_t>(v)]] = Measurement{m.var, m.choice.substitute(subst)};
  }

  out.inputs = f1.inputs;
  out.input_errors = f1.input_errors;
  for (int w : g.inputs) {
    if (wired_in.count(w)) continue;
    int nv = vmap[static_cast<size_t>(w)];
    out.inputs.push_back(nv);
    out.input_errors[nv] = g.input_errors.at(w);
  }
  for (int u : f1.outputs) {
    if (wiring.count(u)) continue;
    out.outputs.push_back(u);
    auto it = f1.corrections.find(u);
    if (it != f1.corrections.end()) out.corrections[u] = it->second;
  }
  for (int w : g.outputs) {
    int nv = vmap[static_cast<size_t>(w)];
    out.outputs.push_back(nv);
    auto it = g.corrections.find(w);
    if (it != g.corrections.end()) {
      out.corrections[nv] = Correction{it->second.zeta.substitute(subst), it->second.xi.substitute(subst)};
    }
  }

  out.layout = f1.layout;
  for (const auto& [v, s] : g.layout) {
    if (wired_in.count(v) && f1.layout.count(wired_in.at(v))) continue;
    out.layout[vmap[static_cast<size_t>(v)]] = Site{s.col + offset.col, s.row + offset.row};
  }
  out.name = f1.name.empty() ? g.name : (g.name.empty() ? f1.name : f1.name + "; " + g.name);
  out.validate(false);
  return res;
}

PatternFragment compose(const PatternFragment& f1, const PatternFragment& f2, const std::map<int, int>& wiring) {
  return compose_detailed(f1, f2, wiring).fragment;
}

PatternFragment sequence(const PatternFragment& f1, const PatternFragment& f2) {
  if (f1.outputs.size() != f2.inputs.size()) {
    throw StructuralError("sequence: f1 has " + std::to_string(f1.outputs.size()) + " outputs but f2 has " +
                          std::to_string(f2.inputs.size()) + " inputs");
  }
  std::map<int, int> wiring;
  for (size_t i = 0; i < f1.outputs.size(); ++i) wiring[f1.outputs[i]] = f2.inputs[i];
  return compose(f1, f2, wiring);
}

}  // namespace ppm
