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

#include "ppm/schedule.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ppm/errors.hpp"

namespace ppm {

std::vector<std::vector<int>> measurement_dependencies(const MeasurementPattern& p,
                                                       const std::set<std::string>& free_vars) {
  const auto owners = p.var_owners();
  std::vector<std::vector<int>> deps(static_cast<size_t>(p.graph.vertex_count()));
  for (const auto& [v, m] : p.measurements) {
    std::set<int> ds;
    for (const auto& name : m.choice.variables()) {
      auto it = owners.find(name);
      if (it != owners.end()) {
        ds.insert(it->second);
      } else if (!free_vars.count(name)) {
        throw StructuralError("choice function of vertex " + std::to_string(v) + " reads unknown variable '" +
                              name + "'");
      }
    }
    deps[static_cast<size_t>(v)].assign(ds.begin(), ds.end());
  }
  return deps;
}

Schedule dependency_schedule(const MeasurementPattern& p, const std::set<std::string>& free_vars) {
  const auto deps = measurement_dependencies(p, free_vars);
  const int n = p.graph.vertex_count();
  std::vector<int> round(static_cast<size_t>(n), -1);
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<int> state(static_cast<size_t>(n), 0);
  std::vector<int> stack;

  std::function<int(int)> visit = [&](int v) -> int {
    auto& st = state[static_cast<size_t>(v)];
    if (st == 2) return round[static_cast<size_t>(v)];
    if (st == 1) {
      auto it = std::find(stack.begin(), stack.end(), v);
      std::vector<int> cycle(it, stack.end());
      std::ostringstream os;
      os << "cyclic measurement dependency:";
      for (int c : cycle) os << ' ' << c << " ->";
      os << ' ' << v;
      throw WellFoundednessError(os.str(), cycle);
    }
    st = 1;
    stack.push_back(v);
    int r = 0;
    for (int d : deps[static_cast<size_t>(v)]) r = std::max(r, visit(d) + 1);
    stack.pop_back();
    st = 2;
    return round[static_cast<size_t>(v)] = r;
  };

  Schedule rounds;
  for (const auto& [v, m] : p.measurements) {
    int r = visit(v);
    if (static_cast<int>(rounds.size()) <= r) rounds.resize(static_cast<size_t>(r) + 1);
  }
  for (const auto& [v, m] : p.measurements) rounds[static_cast<size_t>(round[static_cast<size_t>(v)])].push_back(v);
  return rounds;
}

Schedule dependency_schedule(const PatternFragment& f) {
  return dependency_schedule(f.pattern, f.error_variables());
}

int feed_forward_depth(const MeasurementPattern& p, const std::set<std::string>& free_vars) {
  return static_cast<int>(dependency_schedule(p, free_vars).size());
}

int feed_forward_depth(const PatternFragment& f) { return feed_forward_depth(f.pattern, f.error_variables()); }

}  // namespace ppm
