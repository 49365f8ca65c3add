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

// Brute-force reference models used by the tests. They avoid the library's
// simulation kernels: every operator is a full dense matrix and every
// measurement is a projector on the whole register.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "ppm/pattern.hpp"

namespace ppm::oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline const double kPi = std::acos(-1.0);

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Mat eye(int n) { return Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n); }

inline Mat m2(C a, C b, C c, C d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Mat pauli_x() { return m2(0, 1, 1, 0); }
inline Mat pauli_z() { return m2(1, 0, 0, -1); }
inline Mat hadamard() { return m2(1, 1, 1, -1) / std::sqrt(2.0); }
inline Mat phase(double t) { return m2(1, 0, 0, std::polar(1.0, t)); }

// Single-qubit operator on qubit q of n (qubit 0 most significant).
inline Mat on(const Mat& u, int q, int n) { return kron(kron(eye(q), u), eye(n - q - 1)); }

// exp(-i a/2 Z_p Z_q), written out entry by entry.
inline Mat zz_phase(int p, int q, int n, double a) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat m = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const int bp = static_cast<int>(i >> (n - 1 - p) & 1), bq = static_cast<int>(i >> (n - 1 - q) & 1);
    m(i, i) = std::polar(1.0, (bp == bq ? -a : a) / 2.0);
  }
  return m;
}

inline Vec random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(Eigen::Index{1} << n);
  for (auto& c : v) c = C(g(rng), g(rng));
  return v.normalized();
}

inline Mat random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = C(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ();
}

inline double fidelity(const Vec& a, const Vec& b) {
  return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

struct Branch {
  std::map<int, int> outcomes;  // vertex -> bit
  double probability = 0.0;
  Vec output;                   // outputs in wire order
  std::vector<std::pair<int, int>> frame;
};

// Prepares the whole resource state with the input placed on the input
// vertices, applies input errors X^x Z^z, then measures vertices in
// ascending order, each once its choice function can be evaluated. Every
// outcome sequence is enumerated. The input may carry extra qubits after
// the fragment inputs; they stay untouched and come out after the outputs.
inline std::vector<Branch> enumerate(const PatternFragment& f, const Vec& input,
                                     const std::vector<std::pair<int, int>>& errors, int extra = 0) {
  const int nv = f.graph().vertex_count();
  const int k = static_cast<int>(f.inputs.size());
  const int n = nv + extra;
  // Register: vertices 0..nv-1, then extras. Start from inputs+extras in a
  // small register, embed into the full one.
  const Eigen::Index dfull = Eigen::Index{1} << n;
  Vec psi = Vec::Zero(dfull);
  std::vector<int> wire_for_vertex(static_cast<size_t>(nv), -1);
  for (int w = 0; w < k; ++w) wire_for_vertex[static_cast<size_t>(f.inputs[static_cast<size_t>(w)])] = w;
  const double plus_amp = 1.0 / std::sqrt(2.0);
  for (Eigen::Index small = 0; small < input.size(); ++small) {
    if (input(small) == C(0)) continue;
    const int small_n = k + extra;
    // Free vertices: all non-inputs.
    std::vector<int> free;
    for (int v = 0; v < nv; ++v) {
      if (wire_for_vertex[static_cast<size_t>(v)] < 0) free.push_back(v);
    }
    for (Eigen::Index fb = 0; fb < (Eigen::Index{1} << free.size()); ++fb) {
      Eigen::Index idx = 0;
      for (int v = 0; v < nv; ++v) {
        int bit;
        const int w = wire_for_vertex[static_cast<size_t>(v)];
        if (w >= 0) {
          bit = static_cast<int>(small >> (small_n - 1 - w) & 1);
        } else {
          auto pos = std::find(free.begin(), free.end(), v) - free.begin();
          bit = static_cast<int>(fb >> pos & 1);
        }
        idx = (idx << 1) | bit;
      }
      for (int e = 0; e < extra; ++e) idx = (idx << 1) | (small >> (extra - 1 - e) & 1);
      psi(idx) += input(small) * std::pow(plus_amp, static_cast<double>(free.size()));
    }
  }
  for (int w = 0; w < k; ++w) {
    const int v = f.inputs[static_cast<size_t>(w)];
    if (errors[static_cast<size_t>(w)].first) psi = on(pauli_z(), v, n) * psi;
    if (errors[static_cast<size_t>(w)].second) psi = on(pauli_x(), v, n) * psi;
  }
  for (const auto& [e, mult] : f.graph().edges()) psi = zz_phase(e.first, e.second, n, f.graph().angle(mult)) * psi;

  std::map<std::string, int> env;
  for (int w = 0; w < k; ++w) {
    const auto& ev = f.input_errors.at(f.inputs[static_cast<size_t>(w)]);
    env[ev.z] = errors[static_cast<size_t>(w)].first;
    env[ev.x] = errors[static_cast<size_t>(w)].second;
  }

  std::vector<Branch> out;
  const double s = 1.0 / std::sqrt(2.0);
  std::function<void(Vec, std::map<std::string, int>, std::map<int, int>, std::map<int, Vec>)> go =
      [&](Vec state, std::map<std::string, int> vals, std::map<int, int> outs, std::map<int, Vec> bras) {
        // Next measurable vertex.
        for (const auto& [v, m] : f.pattern.measurements) {
          if (outs.count(v)) continue;
          bool ready = true;
          for (const auto& name : m.choice.variables()) ready = ready && vals.count(name);
          if (!ready) continue;
          const int basis = m.choice.eval(vals);
          for (int o = 0; o < 2; ++o) {
            Vec bra(2);
            if (basis == 0) {
              bra << s, (o ? -s : s);
            } else {
              bra << (o ? 0 : 1), (o ? 1 : 0);
            }
            Mat proj = on(bra * bra.adjoint(), v, n);
            Vec next = proj * state;
            auto v2 = vals;
            v2[m.var] = o;
            auto o2 = outs;
            o2[v] = o;
            auto b2 = bras;
            b2[v] = bra;
            go(next, v2, o2, b2);
          }
          return;
        }
        Branch b;
        b.outcomes = outs;
        b.probability = state.squaredNorm();
        if (b.probability < 1e-14) return;
        // Contract measured qubits with their bras; outputs in wire order.
        const int no = static_cast<int>(f.outputs.size());
        Vec red = Vec::Zero(Eigen::Index{1} << (no + extra));
        for (Eigen::Index i = 0; i < dfull; ++i) {
          if (state(i) == C(0)) continue;
          C amp = state(i);
          for (const auto& [v, bra] : bras) amp *= std::conj(bra(static_cast<Eigen::Index>(i >> (n - 1 - v) & 1)));
          Eigen::Index r = 0;
          for (int w = 0; w < no; ++w) r = (r << 1) | (i >> (n - 1 - f.outputs[static_cast<size_t>(w)]) & 1);
          for (int e = 0; e < extra; ++e) r = (r << 1) | (i >> (extra - 1 - e) & 1);
          red(r) += amp;
        }
        b.output = red.normalized();
        for (int w = 0; w < no; ++w) {
          auto it = f.corrections.find(f.outputs[static_cast<size_t>(w)]);
          if (it == f.corrections.end()) {
            b.frame.emplace_back(0, 0);
          } else {
            b.frame.emplace_back(it->second.zeta.eval(vals), it->second.xi.eval(vals));
          }
        }
        out.push_back(std::move(b));
      };
  go(psi, env, {}, {});
  return out;
}

// X^xi Z^zeta per wire, wire 0 most significant, on `wires` wires plus
// `extra` untouched qubits.
inline Mat frame_operator(const std::vector<std::pair<int, int>>& frame, int extra = 0) {
  const int w = static_cast<int>(frame.size());
  Mat m = eye(w + extra);
  for (int j = 0; j < w; ++j) {
    Mat p = Mat::Identity(2, 2);
    if (frame[static_cast<size_t>(j)].first) p = pauli_z() * p;
    if (frame[static_cast<size_t>(j)].second) p = pauli_x() * p;
    m = on(p, j, w + extra) * m;
  }
  return m;
}

}  // namespace ppm::oracle
