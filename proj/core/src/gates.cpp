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

#include "ppm/gates.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>

#include "ppm/errors.hpp"

namespace ppm {

using cplx = std::complex<double>;

namespace gates {

Matrix identity(int qubits) { return Matrix::Identity(1 << qubits, 1 << qubits); }

Matrix X() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix Y() {
  Matrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Matrix Z() { return zrot(std::numbers::pi); }

Matrix H() {
  Matrix m(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  m << h, h, h, -h;
  return m;
}

Matrix S() { return zrot(std::numbers::pi / 2); }
Matrix Sdg() { return zrot(-std::numbers::pi / 2); }
Matrix T() { return zrot(std::numbers::pi / 4); }
Matrix Tdg() { return zrot(-std::numbers::pi / 4); }

Matrix zrot(double t) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, t);
  // Exact values at multiples of pi keep Paulis real.
  if (std::abs(std::remainder(t, std::numbers::pi)) < 1e-15) m(1, 1) = std::real(m(1, 1)) > 0 ? 1.0 : -1.0;
  return m;
}

Matrix xrot(double t) { return H() * zrot(t) * H(); }

Matrix parity_phase(double t) {
  Matrix m = Matrix::Zero(4, 4);
  const cplx even = std::polar(1.0, -t / 2);
  const cplx odd = std::polar(1.0, t / 2);
  m(0, 0) = even;
  m(1, 1) = odd;
  m(2, 2) = odd;
  m(3, 3) = even;
  return m;
}

Matrix CZ() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

Matrix CNOT() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Matrix SWAP() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

}  // namespace gates

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix pauli_frame(const std::vector<int>& z, const std::vector<int>& x) {
  if (z.size() != x.size()) throw DimensionError("pauli_frame: z and x lengths differ");
  Matrix out = Matrix::Identity(1, 1);
  for (size_t i = 0; i < z.size(); ++i) {
    Matrix p = Matrix::Identity(2, 2);
    if (z[i] & 1) p = gates::Z() * p;
    if (x[i] & 1) p = gates::X() * p;
    out = kron(out, p);
  }
  return out;
}

double trace_overlap(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw DimensionError("trace_overlap: shape mismatch");
  return std::abs(v.conjugate().cwiseProduct(u).sum()) / static_cast<double>(u.rows());
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

int qubits_of(const Matrix& u) {
  const auto d = static_cast<uint64_t>(u.rows());
  if (u.rows() != u.cols() || d == 0 || !std::has_single_bit(d)) {
    throw DimensionError("matrix dimension is not a power of two");
  }
  return std::countr_zero(d);
}

namespace {

class LabelParser {
 public:
  explicit LabelParser(const std::string& s) : s_(s) {}

  Matrix parse() {
    Matrix m = product();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("gate label '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Matrix product() {
    Matrix m = tensor();
    while (accept("*") || accept("\xC2\xB7")) {
      Matrix r = tensor();
      if (r.rows() != m.rows()) fail("product of gates with different widths");
      m = m * r;
    }
    return m;
  }

  Matrix tensor() {
    Matrix m = postfix();
    while (accept("@") || accept("\xE2\x8A\x97")) m = kron(m, postfix());
    return m;
  }

  Matrix postfix() {
    Matrix m = factor();
    while (accept("\xE2\x80\xA0")) m = m.adjoint().eval();
    return m;
  }

  Matrix factor() {
    skip();
    if (accept("(")) {
      Matrix m = product();
      if (!accept(")")) fail("expected ')'");
      if (accept("dg")) m = m.adjoint().eval();
      return m;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a gate");
    if (s_.compare(pos_, 1, "(") == 0 && (word == "Z" || word == "X" || word == "P" || word == "Zrot" || word == "Xrot")) {
      ++pos_;
      double t = angle_sum();
      if (!accept(")")) fail("expected ')' after angle");
      if (word == "P") return gates::parity_phase(t);
      return (word == "X" || word == "Xrot") ? gates::xrot(t) : gates::zrot(t);
    }
    if (word == "CZ") return gates::CZ();
    if (word == "CNOT" || word == "CX") return gates::CNOT();
    if (word == "SWAP") return gates::SWAP();
    return letters(word);
  }

  Matrix letters(const std::string& word) {
    Matrix m = Matrix::Identity(2, 2);
    size_t i = 0;
    while (i < word.size()) {
      auto take = [&](const char* tok) {
        size_t n = std::char_traits<char>::length(tok);
        if (word.compare(i, n, tok) == 0) {
          i += n;
          return true;
        }
        return false;
      };
      if (take("Sdg")) m = m * gates::Sdg();
      else if (take("Tdg")) m = m * gates::Tdg();
      else if (take("H")) m = m * gates::H();
      else if (take("S")) m = m * gates::S();
      else if (take("T")) m = m * gates::T();
      else if (take("X")) m = m * gates::X();
      else if (take("Y")) m = m * gates::Y();
      else if (take("Z")) m = m * gates::Z();
      else if (take("I")) continue;
      else fail("unknown gate '" + word + "'");
    }
    return m;
  }

  double angle_sum() {
    double v = angle_term();
    for (;;) {
      if (accept("+")) v += angle_term();
      else if (accept("-")) v -= angle_term();
      else return v;
    }
  }
  double angle_term() {
    double v = angle_power();
    for (;;) {
      if (accept("*")) v *= angle_power();
      else if (accept("/")) v /= angle_power();
      else return v;
    }
  }
  double angle_power() {
    double base = angle_unary();
    if (accept("^")) return std::pow(base, angle_power());
    return base;
  }
  double angle_unary() {
    if (accept("-")) return -angle_unary();
    if (accept("+")) return angle_unary();
    if (accept("(")) {
      double v = angle_sum();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (accept("pi") || accept("\xCF\x80")) return std::numbers::pi;
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                 s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number or pi");
    try {
      size_t used = 0;
      double v = std::stod(s_.substr(start, pos_ - start), &used);
      if (used != pos_ - start) fail("malformed number");
      return v;
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Matrix parse_unitary(const std::string& label) { return LabelParser(label).parse(); }

}  // namespace ppm
