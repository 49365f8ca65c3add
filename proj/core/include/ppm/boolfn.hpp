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

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ppm {

// A product of distinct variables; the empty monomial is the constant 1.
using Monomial = std::vector<std::string>;
using Env = std::map<std::string, int>;

// Boolean function in algebraic normal form: XOR of AND-monomials over GF(2).
//
// Monomials are kept sorted by (degree, lexicographic) and duplicate-free,
// so two BoolFns are equal iff they denote the same function.
class BoolFn {
 public:
  BoolFn() = default;

  static BoolFn zero() { return BoolFn(); }
  static BoolFn one();
  static BoolFn constant(bool value) { return value ? one() : zero(); }
  static BoolFn var(const std::string& name);
  // Canonicalizes: repeated variables inside a monomial collapse (x*x = x),
  // repeated monomials cancel in pairs.
  static BoolFn from_monomials(const std::vector<Monomial>& monomials);
  // Grammar: sum := prod ('^' prod)*; prod := atom ('*' atom)*;
  // atom := '0' | '1' | name | '(' sum ')'. '+' and '&' are accepted as
  // synonyms for '^' and '*'.
  static BoolFn parse(const std::string& text);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::set<std::string> variables() const;
  bool is_zero() const { return monomials_.empty(); }
  bool is_constant() const;
  // Value of a constant function; throws EvaluationError otherwise.
  bool constant_value() const;
  int degree() const;

  bool eval(const Env& env) const;
  bool eval(const std::function<int(const std::string&)>& lookup) const;

  BoolFn operator^(const BoolFn& other) const;
  BoolFn operator*(const BoolFn& other) const;
  BoolFn& operator^=(const BoolFn& other) { return *this = *this ^ other; }
  BoolFn& operator*=(const BoolFn& other) { return *this = *this * other; }
  BoolFn complement() const { return *this ^ one(); }

  // Replace each mapped variable by a function; unmapped variables stay.
  BoolFn substitute(const std::map<std::string, BoolFn>& replacements) const;
  BoolFn rename(const std::function<std::string(const std::string&)>& f) const;

  // "0", "1", or monomials joined by " ^ " with factors joined by "*".
  std::string to_string() const;

  bool operator==(const BoolFn& other) const = default;

 private:
  std::vector<Monomial> monomials_;
};

// Exact ANF of a truth table by Moebius transform. Row index bit i holds the
// value of vars[i]. truth.size() must be 2^vars.size().
BoolFn fit_anf(const std::vector<std::string>& vars, const std::vector<uint8_t>& truth);

// Truth table of f over the given variable order (row bit i = vars[i]).
std::vector<uint8_t> truth_table(const BoolFn& f, const std::vector<std::string>& vars);

// Index-based evaluator for hot loops. Variables are resolved once against a
// slot table; slots hold 0, 1, or -1 for unknown.
class CompiledBoolFn {
 public:
  CompiledBoolFn() = default;
  CompiledBoolFn(const BoolFn& f, const std::map<std::string, int>& slots);

  // Throws EvaluationError when a referenced slot is unknown.
  int eval(const std::vector<int8_t>& values) const;
  const std::vector<int>& slots() const { return used_; }

 private:
  std::vector<std::vector<int>> monomials_;
  std::vector<int> used_;
  std::vector<std::string> names_;
};

}  // namespace ppm
