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
#include <utility>
#include <vector>

namespace ppm {

// Undirected multigraph. An edge of multiplicity k between u and v stands for
// the parity-phase gate P(k * pi / 2^m) on the two qubits; multiplicities
// live in Z / 2^(m+1) since P(2 pi) is a global phase.
class PGraph {
 public:
  using Edge = std::pair<int, int>;

  explicit PGraph(int vertex_count = 0, int base_exponent = 2);

  int vertex_count() const { return n_; }
  int base_exponent() const { return m_; }
  int modulus() const { return 1 << (m_ + 1); }
  // Rotation angle of a bundle of k parallel edges.
  double angle(int k) const;

  int add_vertex();
  // Adds k parallel edges in place; k may be negative.
  void connect(int u, int v, int k);
  int multiplicity(int u, int v) const;
  // Nonzero multiplicities keyed by (min, max).
  const std::map<Edge, int>& edges() const { return edges_; }
  // (neighbour, multiplicity) pairs in ascending neighbour order.
  std::vector<std::pair<int, int>> neighbours(int v) const;
  int total_edge_count() const;

  bool operator==(const PGraph& other) const = default;

 private:
  void check_pair(int u, int v) const;

  int n_;
  int m_;
  std::map<Edge, int> edges_;
};

// Value-returning form of PGraph::connect.
PGraph add_edges(const PGraph& g, int u, int v, int k);

}  // namespace ppm
