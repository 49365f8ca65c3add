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

#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "ppm/compiler.hpp"

namespace ppm::testing {

// Random Clifford+T circuit text over nearest-neighbour qubits.
inline std::string random_circuit_text(int qubits, int gates, std::mt19937_64& rng) {
  static const char* one[] = {"H", "S", "Sdg", "T", "Tdg"};
  std::ostringstream os;
  os << "qubits " << qubits << "\n";
  std::uniform_int_distribution<int> kind(0, qubits > 1 ? 6 : 4);
  std::uniform_int_distribution<int> q(0, qubits - 1);
  for (int i = 0; i < gates; ++i) {
    const int k = kind(rng);
    if (k < 5) {
      os << one[k] << " " << q(rng) << "\n";
    } else {
      const int a = std::uniform_int_distribution<int>(0, qubits - 2)(rng);
      const bool flip = rng() & 1;
      os << (k == 5 ? "CZ" : "CNOT") << " " << (flip ? a + 1 : a) << " " << (flip ? a : a + 1) << "\n";
    }
  }
  return os.str();
}

// Dense unitary of a circuit, built gate by gate from the test oracle's own
// matrices.
inline oracle::Mat reference_unitary(const Circuit& c, int lanes) {
  namespace o = oracle;
  o::Mat u = o::eye(lanes);
  for (const auto& g : c.gates) {
    const int q = g.qubits[0];
    o::Mat step;
    switch (g.kind) {
      case GateKind::H: step = o::on(o::hadamard(), q, lanes); break;
      case GateKind::S: step = o::on(o::phase(o::kPi / 2), q, lanes); break;
      case GateKind::Sdg: step = o::on(o::phase(-o::kPi / 2), q, lanes); break;
      case GateKind::T: step = o::on(o::phase(o::kPi / 4), q, lanes); break;
      case GateKind::Tdg: step = o::on(o::phase(-o::kPi / 4), q, lanes); break;
      case GateKind::CZ:
      case GateKind::CNOT: {
        const int t = g.qubits[1];
        o::Mat p1 = o::on(oracle::m2(0, 0, 0, 1), q, lanes);
        o::Mat p0 = o::eye(lanes) - p1;
        o::Mat target = g.kind == GateKind::CZ ? o::on(o::pauli_z(), t, lanes) : o::on(o::pauli_x(), t, lanes);
        step = p0 + p1 * target;
        break;
      }
    }
    u = step * u;
  }
  return u;
}

inline double overlap(const oracle::Mat& a, const oracle::Mat& b) {
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

}  // namespace ppm::testing
