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

#include "ppm/pgraph.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "ppm/errors.hpp"

namespace ppm {

PGraph::PGraph(int vertex_count, int base_exponent) : n_(vertex_count), m_(base_exponent) {
  if (vertex_count < 0) throw StructuralError("negative vertex count");
  if (base_exponent < 1 || base_exponent > 29) {
    throw StructuralError("base exponent must lie in [1, 29], got " + std::to_string(base_exponent));
  }
}

double PGraph::angle(int k) const { return k * std::numbers::pi / static_cast<double>(1 << m_); }

int PGraph::add_vertex() { return n_++; }

void PGraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw StructuralError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") out of range for " + std::to_string(n_) + " vertices");
  }
  if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
}

void PGraph::connect(int u, int v, int k) {
  check_pair(u, v);
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  const int mod = modulus();
  int r = (((multiplicity(u, v) + k) % mod) + mod) % mod;
  if (r == 0) {
    edges_.erase(e);
  } else {
    edges_[e] = r;
  }
}

int PGraph::multiplicity(int u, int v) const {
  check_pair(u, v);
  auto it = edges_.find(u < v ? Edge{u, v} : Edge{v, u});
  return it == edges_.end() ? 0 : it->second;
}

std::vector<std::pair<int, int>> PGraph::neighbours(int v) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, k] : edges_) {
    if (e.first == v) out.emplace_back(e.second, k);
    if (e.second == v) out.emplace_back(e.first, k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PGraph::total_edge_count() const {
  int total = 0;
  for (const auto& [e, k] : edges_) total += k;
  return total;
}

PGraph add_edges(const PGraph& g, int u, int v, int k) {
  PGraph out = g;
  out.connect(u, v, k);
  return out;
}

}  // namespace ppm
