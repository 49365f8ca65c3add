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

#include "ppm/boolfn.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ppm/errors.hpp"

namespace ppm {

namespace {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Monomial> canonical(std::vector<Monomial> ms) {
  for (auto& m : ms) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  std::sort(ms.begin(), ms.end(), monomial_less);
  std::vector<Monomial> out;
  for (size_t i = 0; i < ms.size();) {
    size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ms[i]);
    i = j;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BoolFn parse() {
    BoolFn f = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("boolean expression '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  BoolFn sum() {
    BoolFn f = prod();
    while (accept('^') || accept('+')) f ^= prod();
    return f;
  }
  BoolFn prod() {
    BoolFn f = atom();
    while (accept('*') || accept('&')) f *= atom();
    return f;
  }
  BoolFn atom() {
    skip();
    if (accept('(')) {
      BoolFn f = sum();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected variable or constant");
    std::string tok = s_.substr(start, pos_ - start);
    if (tok == "0") return BoolFn::zero();
    if (tok == "1") return BoolFn::one();
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) fail("bad constant '" + tok + "'");
    return BoolFn::var(tok);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

BoolFn BoolFn::one() {
  BoolFn f;
  f.monomials_.push_back({});
  return f;
}

BoolFn BoolFn::var(const std::string& name) {
  if (name.empty()) throw StructuralError("empty variable name");
  BoolFn f;
  f.monomials_.push_back({name});
  return f;
}

BoolFn BoolFn::from_monomials(const std::vector<Monomial>& monomials) {
  BoolFn f;
  f.monomials_ = canonical(monomials);
  return f;
}

BoolFn BoolFn::parse(const std::string& text) { return Parser(text).parse(); }

std::set<std::string> BoolFn::variables() const {
  std::set<std::string> vs;
  for (const auto& m : monomials_) vs.insert(m.begin(), m.end());
  return vs;
}

bool BoolFn::is_constant() const {
  return monomials_.empty() || (monomials_.size() == 1 && monomials_[0].empty());
}

bool BoolFn::constant_value() const {
  if (!is_constant()) throw EvaluationError("function " + to_string() + " is not constant");
  return !monomials_.empty();
}

int BoolFn::degree() const {
  return monomials_.empty() ? -1 : static_cast<int>(monomials_.back().size());
}

bool BoolFn::eval(const Env& env) const {
  return eval([&](const std::string& v) {
    auto it = env.find(v);
    if (it == env.end()) throw EvaluationError("unbound variable '" + v + "'");
    return it->second;
  });
}

bool BoolFn::eval(const std::function<int(const std::string&)>& lookup) const {
  bool acc = false;
  for (const auto& m : monomials_) {
    bool term = true;
    for (const auto& v : m) term = term && (lookup(v) & 1);
    acc ^= term;
  }
  return acc;
}

BoolFn BoolFn::operator^(const BoolFn& other) const {
  std::vector<Monomial> out;
  std::set_symmetric_difference(monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                other.monomials_.end(), std::back_inserter(out), monomial_less);
  BoolFn f;
  f.monomials_ = std::move(out);
  return f;
}

BoolFn BoolFn::operator*(const BoolFn& other) const {
  std::vector<Monomial> prod;
  prod.reserve(monomials_.size() * other.monomials_.size());
  for (const auto& a : monomials_) {
    for (const auto& b : other.monomials_) {
      Monomial m;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
      prod.push_back(std::move(m));
    }
  }
  return from_monomials(prod);
}

BoolFn BoolFn::substitute(const std::map<std::string, BoolFn>& replacements) const {
  BoolFn acc;
  for (const auto& m : monomials_) {
    BoolFn term = one();
    Monomial kept;
    for (const auto& v : m) {
      auto it = replacements.find(v);
      if (it == replacements.end()) {
        kept.push_back(v);
      } else {
        term *= it->second;
      }
    }
    if (!kept.empty()) term *= from_monomials({kept});
    acc ^= term;
  }
  return acc;
}

BoolFn BoolFn::rename(const std::function<std::string(const std::string&)>& f) const {
  std::vector<Monomial> ms = monomials_;
  for (auto& m : ms) {
    for (auto& v : m) v = f(v);
  }
  return from_monomials(ms);
}

std::string BoolFn::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  // Constant term last reads more naturally: a ^ b*c ^ 1.
  bool first = true;
  auto emit = [&](const Monomial& m) {
    if (!first) os << " ^ ";
    first = false;
    if (m.empty()) {
      os << "1";
      return;
    }
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << m[i];
  };
  for (const auto& m : monomials_) {
    if (!m.empty()) emit(m);
  }
  if (monomials_.front().empty()) emit({});
  return os.str();
}

BoolFn fit_anf(const std::vector<std::string>& vars, const std::vector<uint8_t>& truth) {
  const size_t n = vars.size();
  if (n > 30 || truth.size() != (size_t{1} << n)) {
    throw DimensionError("truth table size does not match 2^" + std::to_string(n));
  }
  std::vector<uint8_t> a(truth.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = truth[i] & 1;
  for (size_t bit = 0; bit < n; ++bit) {
    const size_t step = size_t{1} << bit;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i & step) a[i] ^= a[i ^ step];
    }
  }
  std::vector<Monomial> ms;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    Monomial m;
    for (size_t bit = 0; bit < n; ++bit) {
      if (i >> bit & 1) m.push_back(vars[bit]);
    }
    ms.push_back(std::move(m));
  }
  return BoolFn::from_monomials(ms);
}

std::vector<uint8_t> truth_table(const BoolFn& f, const std::vector<std::string>& vars) {
  std::map<std::string, int> slots;
  for (size_t i = 0; i < vars.size(); ++i) slots[vars[i]] = static_cast<int>(i);
  CompiledBoolFn cf(f, slots);
  std::vector<uint8_t> out(size_t{1} << vars.size());
  std::vector<int8_t> vals(vars.size());
  for (size_t row = 0; row < out.size(); ++row) {
    for (size_t i = 0; i < vars.size(); ++i) vals[i] = static_cast<int8_t>(row >> i & 1);
    out[row] = static_cast<uint8_t>(cf.eval(vals));
  }
  return out;
}

CompiledBoolFn::CompiledBoolFn(const BoolFn& f, const std::map<std::string, int>& slots) {
  std::set<int> used;
  for (const auto& m : f.monomials()) {
    std::vector<int> idx;
    for (const auto& v : m) {
      auto it = slots.find(v);
      if (it == slots.end()) throw EvaluationError("unbound variable '" + v + "'");
      idx.push_back(it->second);
      used.insert(it->second);
    }
    monomials_.push_back(std::move(idx));
  }
  used_.assign(used.begin(), used.end());
  names_.resize(used_.empty() ? 0 : static_cast<size_t>(used_.back()) + 1);
  for (const auto& [name, slot] : slots) {
    if (used.count(slot)) names_[static_cast<size_t>(slot)] = name;
  }
}

int CompiledBoolFn::eval(const std::vector<int8_t>& values) const {
  for (int s : used_) {
    if (values[static_cast<size_t>(s)] < 0) {
      throw EvaluationError("unbound variable '" + names_[static_cast<size_t>(s)] + "'");
    }
  }
  int acc = 0;
  for (const auto& m : monomials_) {
    int term = 1;
    for (int s : m) term &= values[static_cast<size_t>(s)];
    acc ^= term;
  }
  return acc;
}

}  // namespace ppm
