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

#include "ppm/pattern.hpp"

#include <algorithm>

#include "ppm/errors.hpp"

namespace ppm {

namespace {

std::string vname(int v) { return "vertex " + std::to_string(v); }

}  // namespace

void MeasurementPattern::validate(const std::set<std::string>& extra_vars) const {
  const int n = graph.vertex_count();
  std::set<std::string> outs;
  for (const auto& [v, m] : measurements) {
    if (v < 0 || v >= n) throw StructuralError("measurement on out-of-range " + vname(v));
    if (m.var.empty()) throw StructuralError(vname(v) + " has an empty output variable");
    if (!outs.insert(m.var).second) {
      throw StructuralError("output variable '" + m.var + "' is produced by more than one vertex");
    }
    if (extra_vars.count(m.var)) {
      throw StructuralError("output variable '" + m.var + "' clashes with an input-error variable");
    }
  }
  for (const auto& [v, m] : measurements) {
    for (const auto& name : m.choice.variables()) {
      if (!outs.count(name) && !extra_vars.count(name)) {
        throw StructuralError("choice function of " + vname(v) + " reads unknown variable '" + name + "'");
      }
    }
  }
}

std::map<std::string, int> MeasurementPattern::var_owners() const {
  std::map<std::string, int> owners;
  for (const auto& [v, m] : measurements) owners[m.var] = v;
  return owners;
}

std::vector<int> MeasurementPattern::unmeasured() const {
  std::vector<int> out;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!measurements.count(v)) out.push_back(v);
  }
  return out;
}

std::set<std::string> PatternFragment::error_variables() const {
  std::set<std::string> vs;
  for (const auto& [v, e] : input_errors) {
    vs.insert(e.z);
    vs.insert(e.x);
  }
  return vs;
}

std::set<std::string> PatternFragment::measurement_variables() const {
  std::set<std::string> vs;
  for (const auto& [v, m] : pattern.measurements) vs.insert(m.var);
  return vs;
}

std::vector<std::string> PatternFragment::ordered_error_variables() const {
  std::vector<std::string> out;
  for (int v : inputs) {
    auto it = input_errors.find(v);
    if (it == input_errors.end()) throw StructuralError("input " + vname(v) + " has no error variables");
    out.push_back(it->second.z);
    out.push_back(it->second.x);
  }
  return out;
}

void PatternFragment::validate(bool require_corrections) const {
  const int n = graph().vertex_count();
  auto check_list = [&](const std::vector<int>& vs, const char* what) {
    std::set<int> seen;
    for (int v : vs) {
      if (v < 0 || v >= n) throw StructuralError(std::string(what) + " " + vname(v) + " out of range");
      if (!seen.insert(v).second) throw StructuralError(std::string(what) + " " + vname(v) + " listed twice");
    }
  };
  check_list(inputs, "input");
  check_list(outputs, "output");

  std::set<int> outset(outputs.begin(), outputs.end());
  for (int v = 0; v < n; ++v) {
    bool measured = pattern.measurements.count(v) > 0;
    if (outset.count(v) && measured) throw StructuralError("output " + vname(v) + " carries a measurement");
    if (!outset.count(v) && !measured) throw StructuralError(vname(v) + " is neither measured nor an output");
  }

  std::set<std::string> errs;
  for (const auto& [v, e] : input_errors) {
    if (std::find(inputs.begin(), inputs.end(), v) == inputs.end()) {
      throw StructuralError("input errors declared on non-input " + vname(v));
    }
    if (e.z.empty() || e.x.empty() || e.z == e.x) {
      throw StructuralError("input " + vname(v) + " needs two distinct error variables");
    }
    if (!errs.insert(e.z).second || !errs.insert(e.x).second) {
      throw StructuralError("input-error variable reused at " + vname(v));
    }
  }
  for (int v : inputs) {
    if (!input_errors.count(v)) throw StructuralError("input " + vname(v) + " has no error variables");
  }
  pattern.validate(errs);

  std::set<std::string> known = errs;
  for (const auto& [v, m] : pattern.measurements) known.insert(m.var);
  for (const auto& [v, c] : corrections) {
    if (!outset.count(v)) throw StructuralError("correction attached to non-output " + vname(v));
    for (const BoolFn* f : {&c.zeta, &c.xi}) {
      for (const auto& name : f->variables()) {
        if (!known.count(name)) {
          throw StructuralError("correction of " + vname(v) + " reads unknown variable '" + name + "'");
        }
      }
    }
  }
  if (require_corrections) {
    for (int v : outputs) {
      if (!corrections.count(v)) throw StructuralError("output " + vname(v) + " has no correction");
    }
  }
  for (const auto& [v, s] : layout) {
    if (v < 0 || v >= n) throw StructuralError("layout site for out-of-range " + vname(v));
  }
}

int PatternFragment::input_wire(int vertex) const {
  auto it = std::find(inputs.begin(), inputs.end(), vertex);
  if (it == inputs.end()) throw StructuralError(vname(vertex) + " is not an input");
  return static_cast<int>(it - inputs.begin());
}

int PatternFragment::output_wire(int vertex) const {
  auto it = std::find(outputs.begin(), outputs.end(), vertex);
  if (it == outputs.end()) throw StructuralError(vname(vertex) + " is not an output");
  return static_cast<int>(it - outputs.begin());
}

std::vector<std::pair<int, int>> layout_collisions(const PatternFragment& f) {
  std::map<Site, int> owner;
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, s] : f.layout) {
    auto [it, fresh] = owner.emplace(s, v);
    if (!fresh) out.emplace_back(it->second, v);
  }
  return out;
}

}  // namespace ppm
