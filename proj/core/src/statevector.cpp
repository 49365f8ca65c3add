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

#include "ppm/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ppm/errors.hpp"

namespace ppm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Mat2 LocalGate::matrix() const {
  const cplx i{0.0, 1.0};
  const double h = kInvSqrt2;
  switch (kind) {
    case Kind::H:
      return {h, h, h, -h};
    case Kind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case Kind::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case Kind::S:
      return {1.0, 0.0, 0.0, i};
    case Kind::Sdg:
      return {1.0, 0.0, 0.0, -i};
    case Kind::T:
      return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case Kind::Tdg:
      return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    case Kind::Zrot:
      return {1.0, 0.0, 0.0, std::polar(1.0, theta)};
    case Kind::Xrot: {
      // H diag(1, e^{it}) H
      const cplx e = std::polar(1.0, theta);
      return {(1.0 + e) / 2.0, (1.0 - e) / 2.0, (1.0 - e) / 2.0, (1.0 + e) / 2.0};
    }
  }
  return {1.0, 0.0, 0.0, 1.0};
}

std::string LocalGate::label() const {
  switch (kind) {
    case Kind::H: return "H";
    case Kind::X: return "X";
    case Kind::Z: return "Z";
    case Kind::S: return "S";
    case Kind::Sdg: return "Sdg";
    case Kind::T: return "T";
    case Kind::Tdg: return "Tdg";
    case Kind::Zrot: return "Z(" + std::to_string(theta) + ")";
    case Kind::Xrot: return "X(" + std::to_string(theta) + ")";
  }
  return "?";
}

Statevector::Statevector(int n) : n_(n) {
  if (n < 0 || n > 30) throw CapacityError("qubit count " + std::to_string(n) + " outside [0, 30]");
  amp_.assign(size_t{1} << n, cplx{0.0, 0.0});
  amp_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
  size_t d = amplitudes.size();
  if (d == 0 || (d & (d - 1)) != 0) throw DimensionError("amplitude count must be a power of two");
  Statevector s;
  s.n_ = std::countr_zero(d);
  s.amp_ = std::move(amplitudes);
  return s;
}

Statevector Statevector::basis_state(int n, uint64_t index) {
  Statevector s(n);
  if (index >= s.dimension()) throw DimensionError("basis index out of range");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

Statevector Statevector::plus(int n) {
  Statevector s(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  for (auto& x : s.amp_) x = a;
  return s;
}

Statevector Statevector::random(int n, std::mt19937_64& rng) {
  Statevector s(n);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& x : s.amp_) x = cplx{g(rng), g(rng)};
  s.normalize();
  return s;
}

double Statevector::norm_squared() const {
  double t = 0.0;
  for (const auto& x : amp_) t += std::norm(x);
  return t;
}

void Statevector::normalize() {
  double t = norm_squared();
  if (t <= 0.0) throw DimensionError("cannot normalize the zero vector");
  const double s = 1.0 / std::sqrt(t);
  for (auto& x : amp_) x *= s;
}

void Statevector::check_qubit(int q) const {
  if (q < 0 || q >= n_) throw DimensionError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_));
}

void Statevector::apply_parity_phase(int q1, int q2, double alpha) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) throw DimensionError("parity phase needs two distinct qubits");
  const cplx even = std::polar(1.0, -alpha / 2);
  const cplx odd = std::polar(1.0, alpha / 2);
  const int b1 = n_ - 1 - q1;
  const int b2 = n_ - 1 - q2;
  for (size_t i = 0; i < amp_.size(); ++i) {
    amp_[i] *= ((i >> b1) ^ (i >> b2)) & 1 ? odd : even;
  }
}

void Statevector::apply_matrix(int q, const Mat2& u) {
  check_qubit(q);
  const size_t stride = size_t{1} << (n_ - 1 - q);
  for (size_t base = 0; base < amp_.size(); base += 2 * stride) {
    for (size_t i = base; i < base + stride; ++i) {
      const cplx a0 = amp_[i];
      const cplx a1 = amp_[i + stride];
      amp_[i] = u[0] * a0 + u[1] * a1;
      amp_[i + stride] = u[2] * a0 + u[3] * a1;
    }
  }
}

void Statevector::apply_x(int q) {
  check_qubit(q);
  const size_t stride = size_t{1} << (n_ - 1 - q);
  for (size_t base = 0; base < amp_.size(); base += 2 * stride) {
    for (size_t i = base; i < base + stride; ++i) std::swap(amp_[i], amp_[i + stride]);
  }
}

void Statevector::apply_z(int q) {
  check_qubit(q);
  const size_t mask = size_t{1} << (n_ - 1 - q);
  for (size_t i = 0; i < amp_.size(); ++i) {
    if (i & mask) amp_[i] = -amp_[i];
  }
}

void Statevector::apply_h(int q) { apply_local(q, LocalGate{LocalGate::Kind::H}); }

void Statevector::apply_cz(int q1, int q2) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) throw DimensionError("CZ needs two distinct qubits");
  const size_t m = (size_t{1} << (n_ - 1 - q1)) | (size_t{1} << (n_ - 1 - q2));
  for (size_t i = 0; i < amp_.size(); ++i) {
    if ((i & m) == m) amp_[i] = -amp_[i];
  }
}

void Statevector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw DimensionError("CNOT needs two distinct qubits");
  const size_t c = size_t{1} << (n_ - 1 - control);
  const size_t t = size_t{1} << (n_ - 1 - target);
  for (size_t i = 0; i < amp_.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amp_[i], amp_[i | t]);
  }
}

void Statevector::append_plus() {
  if (n_ >= 30) throw CapacityError("statevector would exceed 30 qubits");
  std::vector<cplx> out(amp_.size() * 2);
  for (size_t i = 0; i < amp_.size(); ++i) {
    const cplx a = amp_[i] * kInvSqrt2;
    out[2 * i] = a;
    out[2 * i + 1] = a;
  }
  amp_ = std::move(out);
  ++n_;
}

void Statevector::append(const Statevector& other) {
  if (n_ + other.n_ > 30) throw CapacityError("statevector would exceed 30 qubits");
  std::vector<cplx> out(amp_.size() * other.amp_.size());
  for (size_t i = 0; i < amp_.size(); ++i) {
    for (size_t j = 0; j < other.amp_.size(); ++j) out[i * other.amp_.size() + j] = amp_[i] * other.amp_[j];
  }
  amp_ = std::move(out);
  n_ += other.n_;
}

double Statevector::project_out(int q, Basis basis, int outcome) {
  check_qubit(q);
  const size_t stride = size_t{1} << (n_ - 1 - q);
  std::vector<cplx> out(amp_.size() / 2);
  double total = 0.0;
  size_t k = 0;
  const double sign = outcome ? -1.0 : 1.0;
  for (size_t base = 0; base < amp_.size(); base += 2 * stride) {
    for (size_t i = base; i < base + stride; ++i, ++k) {
      cplx v;
      if (basis == Basis::Z) {
        v = outcome ? amp_[i + stride] : amp_[i];
      } else {
        v = (amp_[i] + sign * amp_[i + stride]) * kInvSqrt2;
      }
      out[k] = v;
      total += std::norm(v);
    }
  }
  amp_ = std::move(out);
  --n_;
  return total;
}

Statevector Statevector::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != n_) throw DimensionError("permutation size mismatch");
  std::vector<int> seen(static_cast<size_t>(n_), 0);
  for (int q : order) {
    check_qubit(q);
    if (seen[static_cast<size_t>(q)]++) throw DimensionError("permutation repeats a qubit");
  }
  Statevector out(n_);
  // Bit position of new qubit i is taken from old qubit order[i].
  for (size_t idx = 0; idx < amp_.size(); ++idx) {
    size_t nidx = 0;
    for (int i = 0; i < n_; ++i) {
      size_t bit = (idx >> (n_ - 1 - order[static_cast<size_t>(i)])) & 1;
      nidx |= bit << (n_ - 1 - i);
    }
    out.amp_[nidx] = amp_[idx];
  }
  return out;
}

std::string Statevector::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (size_t i = 0; i < amp_.size(); ++i) {
    os << (i ? ", " : "") << '[' << amp_[i].real() << ", " << amp_[i].imag() << ']';
  }
  os << ']';
  return os.str();
}

Statevector apply_parity_phase(const Statevector& s, int q1, int q2, double alpha) {
  Statevector out = s;
  out.apply_parity_phase(q1, q2, alpha);
  return out;
}

Statevector apply_local(const Statevector& s, int q, const LocalGate& g) {
  Statevector out = s;
  out.apply_local(q, g);
  return out;
}

MeasureResult measure(const Statevector& s, int q, Basis basis, int outcome) {
  MeasureResult r;
  r.state = s;
  const double total = s.norm_squared();
  r.probability = r.state.project_out(q, basis, outcome) / total;
  r.impossible = r.probability < kImpossibleProbability;
  if (!r.impossible) r.state.normalize();
  for (int i = 0; i < s.qubit_count(); ++i) r.index_map.push_back(i < q ? i : (i == q ? -1 : i - 1));
  return r;
}

Statevector prepare_resource(const PGraph& g) {
  Statevector s = Statevector::plus(g.vertex_count());
  for (const auto& [e, k] : g.edges()) s.apply_parity_phase(e.first, e.second, g.angle(k));
  return s;
}

double fidelity_up_to_phase(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("fidelity of states with different qubit counts");
  cplx ip{0.0, 0.0};
  for (size_t i = 0; i < a.dimension(); ++i) ip += std::conj(a[i]) * b[i];
  return std::min(1.0, std::norm(ip));
}

}  // namespace ppm
