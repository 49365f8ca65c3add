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

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ppm/basis.hpp"
#include "ppm/pgraph.hpp"

namespace ppm {

using cplx = std::complex<double>;
// Row-major 2x2 matrix.
using Mat2 = std::array<cplx, 4>;

inline constexpr double kImpossibleProbability = 1e-12;

// Single-qubit gates. Z(t) = diag(1, e^{it}) and X(t) = H Z(t) H.
struct LocalGate {
  enum class Kind { H, X, Z, S, Sdg, T, Tdg, Zrot, Xrot };

  Kind kind = Kind::H;
  double theta = 0.0;

  static LocalGate zrot(double t) { return {Kind::Zrot, t}; }
  static LocalGate xrot(double t) { return {Kind::Xrot, t}; }
  Mat2 matrix() const;
  std::string label() const;
};

// Dense state over n qubits. Qubit 0 is the most significant bit of the
// basis index, so qubit q is bit (n - 1 - q).
class Statevector {
 public:
  Statevector() : n_(0), amp_{cplx{1.0, 0.0}} {}
  // |0...0> on n qubits.
  explicit Statevector(int n);

  static Statevector from_amplitudes(std::vector<cplx> amplitudes);
  static Statevector basis_state(int n, uint64_t index);
  static Statevector plus(int n);
  // Haar-distributed pure state.
  static Statevector random(int n, std::mt19937_64& rng);

  int qubit_count() const { return n_; }
  size_t dimension() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }
  cplx operator[](size_t i) const { return amp_[i]; }

  double norm_squared() const;
  void normalize();

  void apply_parity_phase(int q1, int q2, double alpha);
  void apply_matrix(int q, const Mat2& u);
  void apply_local(int q, const LocalGate& g) { apply_matrix(q, g.matrix()); }
  void apply_x(int q);
  void apply_z(int q);
  void apply_h(int q);
  void apply_cz(int q1, int q2);
  void apply_cnot(int control, int target);

  // Tensor product with |+> as a new last qubit.
  void append_plus();
  // Tensor product with other, whose qubits follow this state's.
  void append(const Statevector& other);

  // Projects qubit q onto the eigenstate for outcome (|0>,|1> for Z and
  // |+>,|-> for X) and drops it. Qubits after q shift down by one. The
  // result is left unnormalized; the return value is its squared norm.
  double project_out(int q, Basis basis, int outcome);

  // Qubit i of the result is qubit order[i] of this state.
  Statevector permuted(const std::vector<int>& order) const;

  // List of [re, im] pairs.
  std::string to_json() const;

 private:
  void check_qubit(int q) const;

  int n_;
  std::vector<cplx> amp_;
};

struct MeasureResult {
  double probability = 0.0;
  // Normalized post-measurement state without the measured qubit. Empty
  // amplitudes are not produced; an impossible branch keeps the projected,
  // unnormalized vector.
  Statevector state;
  // Old qubit index -> new index, -1 for the measured qubit.
  std::vector<int> index_map;
  bool impossible = false;
};

Statevector apply_parity_phase(const Statevector& s, int q1, int q2, double alpha);
Statevector apply_local(const Statevector& s, int q, const LocalGate& g);
MeasureResult measure(const Statevector& s, int q, Basis basis, int outcome);
// |+>^V with P(k pi / 2^m) on every edge of multiplicity k.
Statevector prepare_resource(const PGraph& g);
double fidelity_up_to_phase(const Statevector& a, const Statevector& b);

}  // namespace ppm
