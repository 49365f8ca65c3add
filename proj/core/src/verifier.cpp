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

#include "ppm/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ppm/errors.hpp"
#include "ppm/schedule.hpp"

namespace ppm {

namespace {

Statevector choi_state(int k) {
  const size_t d = size_t{1} << k;
  std::vector<cplx> amp(d * d, cplx{0.0, 0.0});
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (size_t i = 0; i < d; ++i) amp[(i << k) | i] = a;
  return Statevector::from_amplitudes(std::move(amp));
}

// Overlap of a leaf over (outputs, refs) with the Choi state of V.
double choi_fidelity(const Statevector& st, const Matrix& v, int k) {
  const size_t d = size_t{1} << k;
  cplx ov{0.0, 0.0};
  for (size_t o = 0; o < d; ++o) {
    for (size_t r = 0; r < d; ++r) {
      ov += std::conj(v(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(r))) * st[(o << k) | r];
    }
  }
  return std::min(1.0, std::norm(ov) / static_cast<double>(d));
}

std::vector<std::pair<int, int>> error_pairs(size_t combo, int k) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < k; ++j) out.emplace_back(static_cast<int>(combo >> (2 * j) & 1), static_cast<int>(combo >> (2 * j + 1) & 1));
  return out;
}

// X^xi Z^zeta G for every frame index (bit 2j = zeta_j, bit 2j+1 = xi_j).
std::vector<Matrix> framed_targets(const Matrix& g, int k) {
  std::vector<Matrix> out;
  for (size_t f = 0; f < (size_t{1} << (2 * k)); ++f) {
    std::vector<int> z, x;
    for (int j = 0; j < k; ++j) {
      z.push_back(static_cast<int>(f >> (2 * j) & 1));
      x.push_back(static_cast<int>(f >> (2 * j + 1) & 1));
    }
    out.push_back(pauli_frame(z, x) * g);
  }
  return out;
}

void check_arity(const PatternFragment& f, const Matrix& target) {
  if (f.inputs.size() != f.outputs.size()) {
    throw DimensionError("fragment has " + std::to_string(f.inputs.size()) + " inputs but " +
                         std::to_string(f.outputs.size()) + " outputs");
  }
  const auto d = static_cast<Eigen::Index>(size_t{1} << f.inputs.size());
  if (target.rows() != d || target.cols() != d) {
    throw DimensionError("target is " + std::to_string(target.rows()) + "x" + std::to_string(target.cols()) +
                         " but the fragment acts on " + std::to_string(f.inputs.size()) + " wires");
  }
}

Engine make_engine(const PatternFragment& f, const VerifyOptions& opts) {
  Engine::Options eo;
  eo.max_qubits = opts.max_qubits;
  return Engine(f, static_cast<int>(f.inputs.size()), eo);
}

struct BestFrame {
  size_t index = 0;
  double fidelity = 0.0;
};

BestFrame best_frame(const Statevector& st, const std::vector<Matrix>& framed, int k) {
  BestFrame b;
  for (size_t i = 0; i < framed.size(); ++i) {
    double fid = choi_fidelity(st, framed[i], k);
    if (fid > b.fidelity) b = {i, fid};
  }
  return b;
}

size_t row_of(const std::vector<int8_t>& values, int skip_slot = -1) {
  size_t row = 0;
  int bit = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (static_cast<int>(i) == skip_slot) continue;
    if (values[i] > 0) row |= size_t{1} << bit;
    ++bit;
  }
  return row;
}

// Calls fn(errors, leaf) for every exhaustive leaf over every error combo,
// or for opts.samples Born-sampled leaves.
template <typename Fn>
void sweep(const Engine& engine, const Statevector& init, int k, const VerifyOptions& opts, Fn&& fn) {
  const size_t combos = size_t{1} << (2 * k);
  if (opts.branches == VerifyOptions::Branches::All) {
    for (size_t c = 0; c < combos; ++c) {
      auto errs = error_pairs(c, k);
      OutcomeSource src = OutcomeSource::exhaustive();
      engine.explore(init, errs, src, [&](const Engine::Leaf& leaf) { fn(c, errs, leaf); });
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    for (size_t s = 0; s < opts.samples; ++s) {
      const size_t c = static_cast<size_t>(rng() % combos);
      auto errs = error_pairs(c, k);
      OutcomeSource src = OutcomeSource::seeded(rng());
      engine.explore(init, errs, src, [&](const Engine::Leaf& leaf) { fn(c, errs, leaf); });
    }
  }
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json(bool include_branches) const {
  nlohmann::ordered_json j;
  j["target"] = target;
  j["fragment"] = fragment;
  j["pass"] = pass;
  j["exhaustive"] = exhaustive;
  j["error_combinations"] = error_combinations;
  j["branch_count"] = branch_count;
  j["impossible_count"] = impossible_count;
  j["worst_infidelity"] = worst_infidelity;
  j["probability_total"] = probability_total;
  j["probability_deviation"] = probability_deviation;
  if (include_branches) {
    j["outcome_vars"] = outcome_vars;
    nlohmann::ordered_json bs = nlohmann::ordered_json::array();
    for (const auto& b : branches) {
      std::vector<int> outs(b.outcomes.begin(), b.outcomes.end());
      bs.push_back({{"errors", b.errors},
                    {"outcomes", outs},
                    {"probability", b.probability},
                    {"frame", b.frame},
                    {"infidelity", b.infidelity},
                    {"impossible", b.impossible}});
    }
    j["branches"] = bs;
  }
  return j;
}

VerificationReport verify_fragment(const PatternFragment& f, const Matrix& target, const VerifyOptions& opts,
                                   const std::string& target_label) {
  f.validate(true);
  check_arity(f, target);
  const int k = static_cast<int>(f.inputs.size());
  Engine engine = make_engine(f, opts);
  const Statevector init = choi_state(k);

  VerificationReport rep;
  rep.target = target_label;
  rep.fragment = f.name;
  rep.exhaustive = opts.branches == VerifyOptions::Branches::All;
  rep.outcome_vars.assign(engine.slot_names().begin(), engine.slot_names().begin() + engine.measured_count());
  const size_t combos = size_t{1} << (2 * k);
  rep.error_combinations = rep.exhaustive ? combos : opts.samples;
  std::vector<double> mass(combos, 0.0);
  const auto framed = framed_targets(target, k);

  sweep(engine, init, k, opts, [&](size_t c, const std::vector<std::pair<int, int>>& errs, const Engine::Leaf& leaf) {
    BranchRecord rec;
    if (opts.keep_branches) {
      for (const auto& [z, x] : errs) {
        rec.errors.push_back(z);
        rec.errors.push_back(x);
      }
      rec.outcomes.assign(leaf.values.begin(), leaf.values.begin() + engine.measured_count());
    }
    rec.probability = leaf.probability;
    rec.impossible = leaf.impossible;
    if (leaf.impossible) {
      rep.impossible_count += leaf.leaf_weight;
    } else {
      ++rep.branch_count;
      mass[c] += leaf.probability;
      const auto fr = engine.frame(leaf.values);
      size_t fi = 0;
      for (size_t j = 0; j < fr.size(); ++j) {
        fi |= static_cast<size_t>(fr[j].first) << (2 * j);
        fi |= static_cast<size_t>(fr[j].second) << (2 * j + 1);
        if (opts.keep_branches) {
          rec.frame.push_back(fr[j].first);
          rec.frame.push_back(fr[j].second);
        }
      }
      rec.infidelity = 1.0 - choi_fidelity(leaf.state, framed[fi], k);
      rep.worst_infidelity = std::max(rep.worst_infidelity, rec.infidelity);
    }
    if (opts.keep_branches) rep.branches.push_back(std::move(rec));
  });

  if (rep.exhaustive) {
    double total = 0.0;
    for (double m : mass) {
      total += m;
      rep.probability_deviation = std::max(rep.probability_deviation, std::abs(m - 1.0));
    }
    rep.probability_total = total / static_cast<double>(combos);
  } else {
    rep.probability_total = std::nan("");
    rep.probability_deviation = 0.0;
  }
  rep.pass = rep.branch_count > 0 && rep.worst_infidelity < opts.tol && rep.probability_deviation <= 1e-9;
  return rep;
}

std::map<int, Correction> infer_corrections(const PatternFragment& f, const Matrix& target, const VerifyOptions& opts) {
  PatternFragment g = f;
  g.corrections.clear();
  g.validate(false);
  check_arity(g, target);
  const int k = static_cast<int>(g.inputs.size());
  Engine engine = make_engine(g, opts);
  const auto& vars = engine.slot_names();
  if (vars.size() > 26) throw CapacityError("too many variables for a truth table: " + std::to_string(vars.size()));
  const size_t rows = size_t{1} << vars.size();
  // One table per frame bit: zeta_j, xi_j.
  std::vector<std::vector<uint8_t>> tables(static_cast<size_t>(2 * k), std::vector<uint8_t>(rows, 0));
  const auto framed = framed_targets(target, k);
  const Statevector init = choi_state(k);
  VerifyOptions all = opts;
  all.branches = VerifyOptions::Branches::All;

  sweep(engine, init, k, all, [&](size_t, const std::vector<std::pair<int, int>>&, const Engine::Leaf& leaf) {
    if (leaf.impossible) return;
    BestFrame b = best_frame(leaf.state, framed, k);
    if (1.0 - b.fidelity >= opts.tol) {
      std::string where;
      for (size_t i = 0; i < leaf.values.size(); ++i) {
        where += (i ? " " : "") + vars[i] + "=" + std::to_string(leaf.values[i]);
      }
      throw InferenceError("no Pauli frame explains branch [" + where + "], best infidelity " +
                           std::to_string(1.0 - b.fidelity));
    }
    const size_t row = row_of(leaf.values);
    for (size_t bit = 0; bit < tables.size(); ++bit) tables[bit][row] = static_cast<uint8_t>(b.index >> bit & 1);
  });

  std::map<int, Correction> out;
  for (int j = 0; j < k; ++j) {
    out[g.outputs[static_cast<size_t>(j)]] =
        Correction{fit_anf(vars, tables[static_cast<size_t>(2 * j)]), fit_anf(vars, tables[static_cast<size_t>(2 * j + 1)])};
  }
  return out;
}

PatternFragment with_inferred_corrections(const PatternFragment& f, const Matrix& target, const VerifyOptions& opts) {
  PatternFragment g = f;
  g.corrections = infer_corrections(f, target, opts);
  return g;
}

BoolFn infer_adaptive_rule(const PatternFragment& f, int vertex, const Matrix& target, const VerifyOptions& opts) {
  if (!f.pattern.measurements.count(vertex)) {
    throw StructuralError("vertex " + std::to_string(vertex) + " is not measured");
  }
  PatternFragment g = f;
  g.corrections.clear();
  check_arity(g, target);
  const int k = static_cast<int>(g.inputs.size());
  const auto framed = framed_targets(target, k);
  const Statevector init = choi_state(k);
  VerifyOptions all = opts;
  all.branches = VerifyOptions::Branches::All;

  std::vector<std::string> vars;
  std::vector<std::vector<uint8_t>> good(2);
  std::vector<uint8_t> seen;
  for (int basis = 0; basis < 2; ++basis) {
    g.pattern.measurements[vertex].choice = BoolFn::constant(basis);
    Engine engine = make_engine(g, opts);
    const int skip = static_cast<int>(std::find(engine.slot_names().begin(), engine.slot_names().end(),
                                                g.pattern.measurements.at(vertex).var) -
                                      engine.slot_names().begin());
    if (vars.empty()) {
      for (size_t i = 0; i < engine.slot_names().size(); ++i) {
        if (static_cast<int>(i) != skip) vars.push_back(engine.slot_names()[i]);
      }
      if (vars.size() > 26) throw CapacityError("too many variables for a truth table");
      good[0].assign(size_t{1} << vars.size(), 1);
      good[1].assign(size_t{1} << vars.size(), 1);
      seen.assign(size_t{1} << vars.size(), 0);
    }
    auto& table = good[static_cast<size_t>(basis)];
    sweep(engine, init, k, all, [&](size_t, const std::vector<std::pair<int, int>>&, const Engine::Leaf& leaf) {
      if (leaf.impossible) return;
      const size_t row = row_of(leaf.values, skip);
      seen[row] = 1;
      if (1.0 - best_frame(leaf.state, framed, k).fidelity >= opts.tol) table[row] = 0;
    });
  }
  std::vector<uint8_t> rule(seen.size(), 0);
  for (size_t row = 0; row < seen.size(); ++row) {
    if (!seen[row] || good[0][row]) continue;
    if (!good[1][row]) {
      std::string where;
      for (size_t i = 0; i < vars.size(); ++i) where += (i ? " " : "") + vars[i] + "=" + std::to_string(row >> i & 1);
      throw InferenceError("neither basis of vertex " + std::to_string(vertex) + " works for [" + where + "]");
    }
    rule[row] = 1;
  }
  return fit_anf(vars, rule);
}

std::vector<BoolFn> search_choice_functions(const PatternFragment& f, int vertex, const std::vector<std::string>& vars,
                                            const Matrix& target, const VerifyOptions& opts) {
  if (vars.size() > 4) throw CapacityError("choice-function search is limited to 4 variables");
  const size_t rows = size_t{1} << vars.size();
  std::vector<BoolFn> found;
  for (uint64_t t = 0; t < (uint64_t{1} << rows); ++t) {
    std::vector<uint8_t> table(rows);
    for (size_t r = 0; r < rows; ++r) table[r] = static_cast<uint8_t>(t >> r & 1);
    BoolFn fn = fit_anf(vars, table);
    PatternFragment g = f;
    g.pattern.measurements.at(vertex).choice = fn;
    try {
      g.corrections = infer_corrections(g, target, opts);
      if (verify_fragment(g, target, opts).pass) found.push_back(fn);
    } catch (const InferenceError&) {
    } catch (const WellFoundednessError&) {
    }
  }
  return found;
}

Dictionary make_dictionary(const std::vector<std::string>& labels) {
  Dictionary d;
  for (const auto& l : labels) d.push_back({l, parse_unitary(l)});
  return d;
}

std::optional<std::string> classify_unitary(const Matrix& u, const Dictionary& dictionary) {
  if (!is_unitary(u, 1e-9)) throw DimensionError("classify_unitary: input is not unitary");
  double best = 0.0;
  std::optional<std::string> label;
  for (const auto& e : dictionary) {
    if (e.unitary.rows() != u.rows()) continue;
    double ov = trace_overlap(u, e.unitary);
    if (ov > best) {
      best = ov;
      label = e.label;
    }
  }
  if (best > 1.0 - 1e-9) return label;
  return std::nullopt;
}

std::optional<PauliClass> classify_up_to_pauli(const Matrix& u, const Dictionary& dictionary) {
  if (!is_unitary(u, 1e-9)) throw DimensionError("classify_up_to_pauli: input is not unitary");
  const int k = qubits_of(u);
  const size_t frames = size_t{1} << (2 * k);
  std::vector<Matrix> paulis;
  std::vector<std::vector<int>> zs, xs;
  for (size_t f = 0; f < frames; ++f) {
    std::vector<int> z, x;
    for (int j = 0; j < k; ++j) {
      z.push_back(static_cast<int>(f >> (2 * j) & 1));
      x.push_back(static_cast<int>(f >> (2 * j + 1) & 1));
    }
    paulis.push_back(pauli_frame(z, x));
    zs.push_back(std::move(z));
    xs.push_back(std::move(x));
  }
  for (const auto& e : dictionary) {
    if (e.unitary.rows() != u.rows()) continue;
    // U = P V up to phase iff U V^dag is proportional to P.
    const Matrix w = u * e.unitary.adjoint();
    for (size_t f = 0; f < frames; ++f) {
      if (trace_overlap(w, paulis[f]) > 1.0 - 1e-9) return PauliClass{e.label, zs[f], xs[f]};
    }
  }
  return std::nullopt;
}

int operator_schmidt_rank(const Matrix& u, int left, double tol) {
  const int n = qubits_of(u);
  if (left < 0 || left > n) throw DimensionError("operator_schmidt_rank: split out of range");
  const Eigen::Index da = Eigen::Index{1} << left;
  const Eigen::Index db = Eigen::Index{1} << (n - left);
  // R[(i1 j1), (i2 j2)] = U[(i1 i2), (j1 j2)]
  Matrix r(da * da, db * db);
  for (Eigen::Index i1 = 0; i1 < da; ++i1) {
    for (Eigen::Index i2 = 0; i2 < db; ++i2) {
      for (Eigen::Index j1 = 0; j1 < da; ++j1) {
        for (Eigen::Index j2 = 0; j2 < db; ++j2) r(i1 * da + j1, i2 * db + j2) = u(i1 * db + i2, j1 * db + j2);
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(r);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > tol * std::max(1.0, s(0));
  return rank;
}

namespace {

Matrix unitary_from_leaf(const Statevector& st, int k) {
  const Eigen::Index d = Eigen::Index{1} << k;
  Matrix u(d, d);
  const double scale = std::sqrt(static_cast<double>(d));
  for (Eigen::Index o = 0; o < d; ++o) {
    for (Eigen::Index r = 0; r < d; ++r) u(o, r) = scale * st[static_cast<size_t>((o << k) | r)];
  }
  return u;
}

}  // namespace

std::vector<BranchUnitary> branch_unitaries(const PatternFragment& f, const VerifyOptions& opts) {
  PatternFragment g = f;
  g.validate(false);
  if (g.inputs.size() != g.outputs.size()) throw DimensionError("branch_unitaries needs equal input and output arity");
  const int k = static_cast<int>(g.inputs.size());
  Engine engine = make_engine(g, opts);
  std::vector<BranchUnitary> out;
  OutcomeSource src = OutcomeSource::exhaustive();
  engine.explore(choi_state(k), error_pairs(0, k), src, [&](const Engine::Leaf& leaf) {
    if (leaf.impossible) return;
    BranchUnitary b;
    b.outcomes.assign(leaf.values.begin(), leaf.values.begin() + engine.measured_count());
    b.probability = leaf.probability;
    b.unitary = unitary_from_leaf(leaf.state, k);
    out.push_back(std::move(b));
  });
  return out;
}

Matrix provisional_unitary(const PatternFragment& f, const VerifyOptions& opts) {
  PatternFragment g = f;
  g.validate(false);
  if (g.inputs.size() != g.outputs.size()) throw DimensionError("provisional_unitary needs equal arity");
  const int k = static_cast<int>(g.inputs.size());
  Engine engine = make_engine(g, opts);
  Matrix u;
  OutcomeSource src = OutcomeSource::tape(std::vector<int>(static_cast<size_t>(engine.measured_count()), 0));
  engine.explore(choi_state(k), error_pairs(0, k), src,
                 [&](const Engine::Leaf& leaf) { u = unitary_from_leaf(leaf.state, k); });
  return u;
}

CrossCheck cross_check_product_inputs(const PatternFragment& f, const Matrix& target, const VerifyOptions& opts) {
  f.validate(true);
  check_arity(f, target);
  const int k = static_cast<int>(f.inputs.size());
  Engine::Options eo;
  eo.max_qubits = opts.max_qubits;
  Engine engine(f, 0, eo);
  const double h = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  const std::vector<std::vector<cplx>> singles = {{1.0, 0.0}, {0.0, 1.0}, {h, h}, {h, -h}, {h, h * i}, {h, -h * i}};
  CrossCheck cc;
  size_t inputs = 1;
  for (int j = 0; j < k; ++j) inputs *= singles.size();
  std::mt19937_64 rng(opts.seed);
  for (size_t idx = 0; idx < inputs; ++idx) {
    Statevector psi;
    size_t rest = idx;
    for (int j = 0; j < k; ++j) {
      psi.append(Statevector::from_amplitudes(singles[rest % singles.size()]));
      rest /= singles.size();
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dimension()));
    for (size_t a = 0; a < psi.dimension(); ++a) v(static_cast<Eigen::Index>(a)) = psi[a];
    auto check = [&](const std::vector<std::pair<int, int>>&, const Engine::Leaf& leaf) {
      if (leaf.impossible) return;
      const auto fr = engine.frame(leaf.values);
      std::vector<int> z, x;
      for (const auto& [zeta, xi] : fr) {
        z.push_back(zeta);
        x.push_back(xi);
      }
      Eigen::VectorXcd expect = pauli_frame(z, x) * target * v;
      Statevector e = Statevector::from_amplitudes(std::vector<cplx>(expect.data(), expect.data() + expect.size()));
      cc.worst_infidelity = std::max(cc.worst_infidelity, 1.0 - fidelity_up_to_phase(e, leaf.state));
      ++cc.runs;
    };
    const size_t combos = size_t{1} << (2 * k);
    if (opts.branches == VerifyOptions::Branches::All) {
      for (size_t c = 0; c < combos; ++c) {
        auto errs = error_pairs(c, k);
        OutcomeSource src = OutcomeSource::exhaustive();
        engine.explore(psi, errs, src, [&](const Engine::Leaf& leaf) { check(errs, leaf); });
      }
    } else {
      for (size_t s = 0; s < opts.samples; ++s) {
        auto errs = error_pairs(static_cast<size_t>(rng() % combos), k);
        OutcomeSource src = OutcomeSource::seeded(rng());
        engine.explore(psi, errs, src, [&](const Engine::Leaf& leaf) { check(errs, leaf); });
      }
    }
  }
  return cc;
}

}  // namespace ppm
