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

#include "ppm/executor.hpp"

#include <algorithm>
#include <set>

#include "ppm/errors.hpp"
#include "ppm/schedule.hpp"

namespace ppm {

OutcomeSource OutcomeSource::seeded(uint64_t seed) {
  OutcomeSource s;
  s.mode_ = Mode::Seeded;
  s.rng_.seed(seed);
  return s;
}

OutcomeSource OutcomeSource::tape(std::vector<int> bits) {
  OutcomeSource s;
  s.mode_ = Mode::Tape;
  for (int b : bits) {
    if (b != 0 && b != 1) throw StructuralError("tape bits must be 0 or 1");
  }
  s.tape_ = std::move(bits);
  return s;
}

OutcomeSource OutcomeSource::exhaustive() {
  OutcomeSource s;
  s.mode_ = Mode::Exhaustive;
  return s;
}

int OutcomeSource::draw(double p0) {
  // 53 random bits, so the draw does not depend on the standard library's
  // distribution implementation.
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return u < p0 ? 0 : 1;
}

nlohmann::ordered_json ExecutionTrace::to_json(bool amplitudes) const {
  nlohmann::ordered_json j;
  j["probability"] = probability;
  j["impossible"] = impossible;
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  for (const auto& m : measurements) {
    ms.push_back({{"vertex", m.vertex},
                  {"var", m.var},
                  {"basis", std::string(1, basis_char(m.basis))},
                  {"outcome", m.outcome},
                  {"probability", m.probability}});
  }
  j["measurements"] = ms;
  nlohmann::ordered_json outs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : outcomes) outs[k] = v;
  j["outcomes"] = outs;
  j["output_vertices"] = output_vertices;
  nlohmann::ordered_json fr = nlohmann::ordered_json::array();
  for (size_t i = 0; i < frame.size(); ++i) {
    fr.push_back({{"vertex", output_vertices.at(i)}, {"zeta", frame[i].first}, {"xi", frame[i].second}});
  }
  j["frame"] = fr;
  nlohmann::ordered_json errs = nlohmann::ordered_json::array();
  for (const auto& [z, x] : input_errors) errs.push_back({z, x});
  j["input_errors"] = errs;
  if (amplitudes) j["amplitudes"] = nlohmann::ordered_json::parse(output.to_json());
  return j;
}

Engine::Engine(const PatternFragment& f, int extra_qubits) : Engine(f, extra_qubits, Options{}) {}

Engine::Engine(const PatternFragment& f, int extra_qubits, Options opts)
    : fragment_(f), extra_(extra_qubits), opts_(opts) {
  if (extra_qubits < 0) throw DimensionError("negative extra qubit count");
  build_plan();
}

void Engine::build_plan() {
  const PatternFragment& f = fragment_;
  f.validate(false);
  const auto free_vars = f.error_variables();
  // Throws WellFoundednessError naming a cycle.
  dependency_schedule(f.pattern, free_vars);
  const auto deps = measurement_dependencies(f.pattern, free_vars);

  for (const auto& [v, m] : f.pattern.measurements) measured_.push_back(v);
  for (int v : measured_) {
    slot_of_[f.pattern.measurements.at(v).var] = static_cast<int>(slot_names_.size());
    slot_names_.push_back(f.pattern.measurements.at(v).var);
  }
  for (const auto& name : f.ordered_error_variables()) {
    slot_of_[name] = static_cast<int>(slot_names_.size());
    slot_names_.push_back(name);
  }

  const PGraph& g = f.graph();
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (const auto& [e, k] : g.edges()) {
    adj[static_cast<size_t>(e.first)].emplace_back(e.second, k);
    adj[static_cast<size_t>(e.second)].emplace_back(e.first, k);
  }

  std::vector<int> reg;
  std::vector<char> live(static_cast<size_t>(n), 0);
  for (int v : f.inputs) {
    reg.push_back(v);
    live[static_cast<size_t>(v)] = 1;
  }
  for (int j = 0; j < extra_; ++j) reg.push_back(-(j + 1));
  auto pos = [&](int id) { return static_cast<int>(std::find(reg.begin(), reg.end(), id) - reg.begin()); };
  peak_ = static_cast<int>(reg.size());

  for (const auto& [e, k] : g.edges()) {
    if (live[static_cast<size_t>(e.first)] && live[static_cast<size_t>(e.second)]) {
      ops_.push_back({Op::Kind::Phase, pos(e.first), pos(e.second), g.angle(k), -1});
    }
  }
  auto activate = [&](int v) {
    if (live[static_cast<size_t>(v)]) return;
    ops_.push_back({Op::Kind::AppendPlus, 0, 0, 0.0, -1});
    reg.push_back(v);
    live[static_cast<size_t>(v)] = 1;
    peak_ = std::max(peak_, static_cast<int>(reg.size()));
    for (const auto& [w, k] : adj[static_cast<size_t>(v)]) {
      if (live[static_cast<size_t>(w)]) ops_.push_back({Op::Kind::Phase, pos(v), pos(w), g.angle(k), -1});
    }
  };

  std::vector<char> done(static_cast<size_t>(n), 0);
  std::map<int, int> tape_pos;
  for (size_t i = 0; i < measured_.size(); ++i) tape_pos[measured_[i]] = static_cast<int>(i);
  for (size_t count = 0; count < measured_.size(); ++count) {
    int next = -1;
    for (int v : measured_) {
      if (done[static_cast<size_t>(v)]) continue;
      bool ready = true;
      for (int d : deps[static_cast<size_t>(v)]) ready = ready && done[static_cast<size_t>(d)];
      if (ready) {
        next = v;
        break;
      }
    }
    if (next < 0) throw WellFoundednessError("no measurable vertex remains", {});
    activate(next);
    for (const auto& [w, k] : adj[static_cast<size_t>(next)]) activate(w);
    const auto& m = f.pattern.measurements.at(next);
    const int step = static_cast<int>(steps_.size());
    steps_.push_back({next, slot_of_.at(m.var), CompiledBoolFn(m.choice, slot_of_)});
    tape_index_.push_back(tape_pos.at(next));
    ops_.push_back({Op::Kind::Measure, pos(next), 0, 0.0, step});
    reg.erase(reg.begin() + pos(next));
    done[static_cast<size_t>(next)] = 1;
  }
  for (int v : f.outputs) activate(v);
  if (static_cast<int>(reg.size()) != static_cast<int>(f.outputs.size()) + extra_) {
    throw StructuralError("vertices left unmeasured outside the output set");
  }
  for (int v : f.outputs) final_order_.push_back(pos(v));
  for (int j = 0; j < extra_; ++j) final_order_.push_back(pos(-(j + 1)));
  if (peak_ > opts_.max_qubits) {
    throw CapacityError("fragment needs " + std::to_string(peak_) + " live qubits, cap is " +
                        std::to_string(opts_.max_qubits));
  }

  has_corrections_ = !f.outputs.empty();
  for (int v : f.outputs) has_corrections_ = has_corrections_ && f.corrections.count(v);
  if (has_corrections_) {
    for (int v : f.outputs) {
      const auto& c = f.corrections.at(v);
      corrections_.emplace_back(CompiledBoolFn(c.zeta, slot_of_), CompiledBoolFn(c.xi, slot_of_));
    }
  }
}

std::vector<std::pair<int, int>> Engine::frame(const std::vector<int8_t>& values) const {
  std::vector<std::pair<int, int>> out;
  if (!has_corrections_) return out;
  for (const auto& [z, x] : corrections_) out.emplace_back(z.eval(values), x.eval(values));
  return out;
}

void Engine::explore(const Statevector& initial, const std::vector<std::pair<int, int>>& errors, OutcomeSource& src,
                     const LeafFn& on_leaf) const {
  const int k = static_cast<int>(fragment_.inputs.size());
  if (initial.qubit_count() != k + extra_) {
    throw DimensionError("initial state has " + std::to_string(initial.qubit_count()) + " qubits, expected " +
                         std::to_string(k + extra_));
  }
  if (static_cast<int>(errors.size()) != k) throw DimensionError("need one (z, x) error pair per input wire");
  if (src.mode() == OutcomeSource::Mode::Tape && src.tape_bits().size() < measured_.size()) {
    throw StructuralError("tape holds " + std::to_string(src.tape_bits().size()) + " bits but " +
                          std::to_string(measured_.size()) + " vertices are measured");
  }
  Statevector state = initial;
  state.normalize();
  std::vector<int8_t> values(slot_names_.size(), -1);
  for (int i = 0; i < k; ++i) {
    const auto [z, x] = errors[static_cast<size_t>(i)];
    if (z & 1) state.apply_z(i);
    if (x & 1) state.apply_x(i);
    values[measured_.size() + 2 * static_cast<size_t>(i)] = static_cast<int8_t>(z & 1);
    values[measured_.size() + 2 * static_cast<size_t>(i) + 1] = static_cast<int8_t>(x & 1);
  }
  std::vector<int8_t> bases(steps_.size(), -1);
  std::vector<int8_t> outs(steps_.size(), -1);
  std::vector<double> probs(steps_.size(), 0.0);
  descend(0, std::move(state), 1.0, values, bases, outs, probs, src, on_leaf);
}

void Engine::descend(size_t op_index, Statevector state, double prob, std::vector<int8_t>& values,
                     std::vector<int8_t>& bases, std::vector<int8_t>& outs, std::vector<double>& probs,
                     OutcomeSource& src, const LeafFn& on_leaf) const {
  for (; op_index < ops_.size(); ++op_index) {
    const Op& op = ops_[op_index];
    if (op.kind == Op::Kind::AppendPlus) {
      state.append_plus();
    } else if (op.kind == Op::Kind::Phase) {
      state.apply_parity_phase(op.a, op.b, op.angle);
    } else {
      break;
    }
  }
  if (op_index == ops_.size()) {
    Statevector final_state = state.permuted(final_order_);
    on_leaf(Leaf{values, bases, outs, probs, prob, false, 1, final_state});
    return;
  }

  const Op& op = ops_[op_index];
  const Step& step = steps_[static_cast<size_t>(op.step)];
  const int choice = step.choice.eval(values);
  const Basis basis = basis_from_choice(choice);
  const auto s = static_cast<size_t>(op.step);
  bases[s] = static_cast<int8_t>(choice);
  const int remaining = static_cast<int>(steps_.size()) - op.step - 1;

  auto follow = [&](int outcome, Statevector next, double p) {
    values[static_cast<size_t>(step.slot)] = static_cast<int8_t>(outcome);
    outs[s] = static_cast<int8_t>(outcome);
    probs[s] = p;
    if (p < kImpossibleProbability) {
      if (src.mode() == OutcomeSource::Mode::Tape) {
        throw ImpossibleBranchError("tape forces outcome " + std::to_string(outcome) + " at vertex " +
                                    std::to_string(step.vertex) + " with probability " + std::to_string(p));
      }
      static const Statevector empty;
      on_leaf(Leaf{values, bases, outs, probs, 0.0, true, uint64_t{1} << std::min(remaining, 63), empty});
    } else {
      next.normalize();
      descend(op_index + 1, std::move(next), prob * p, values, bases, outs, probs, src, on_leaf);
    }
    values[static_cast<size_t>(step.slot)] = -1;
    outs[s] = -1;
  };

  switch (src.mode()) {
    case OutcomeSource::Mode::Exhaustive: {
      Statevector zero = state;
      const double p0 = zero.project_out(op.a, basis, 0);
      follow(0, std::move(zero), p0);
      const double p1 = state.project_out(op.a, basis, 1);
      follow(1, std::move(state), p1);
      break;
    }
    case OutcomeSource::Mode::Seeded: {
      Statevector zero = state;
      const double p0 = zero.project_out(op.a, basis, 0);
      const int o = p0 >= 1.0 - kImpossibleProbability ? 0 : (p0 < kImpossibleProbability ? 1 : src.draw(p0));
      if (o == 0) {
        follow(0, std::move(zero), p0);
      } else {
        const double p1 = state.project_out(op.a, basis, 1);
        follow(1, std::move(state), p1);
      }
      break;
    }
    case OutcomeSource::Mode::Tape: {
      const int o = src.tape_bits()[static_cast<size_t>(tape_index_[s])];
      const double p = state.project_out(op.a, basis, o);
      follow(o, std::move(state), p);
      break;
    }
  }
  bases[s] = -1;
}

ExecutionTrace Engine::trace_from_leaf(const Leaf& leaf, const std::vector<std::pair<int, int>>& errors) const {
  ExecutionTrace t;
  for (size_t s = 0; s < steps_.size(); ++s) {
    if (leaf.outcomes[s] < 0) continue;
    const auto& m = fragment_.pattern.measurements.at(steps_[s].vertex);
    t.measurements.push_back({steps_[s].vertex, m.var, basis_from_choice(leaf.bases[s]), leaf.outcomes[s],
                              leaf.step_probabilities[s]});
    t.outcomes[m.var] = leaf.outcomes[s];
  }
  t.probability = leaf.probability;
  t.impossible = leaf.impossible;
  t.output = leaf.state;
  t.output_vertices = fragment_.outputs;
  t.input_errors = errors;
  if (!leaf.impossible) t.frame = frame(leaf.values);
  return t;
}

namespace {

PatternFragment as_fragment(const MeasurementPattern& p) {
  PatternFragment f;
  f.pattern = p;
  f.outputs = p.unmeasured();
  return f;
}

}  // namespace

ExecutionTrace run_fragment(const PatternFragment& f, const Statevector& input_state,
                            const std::vector<std::pair<int, int>>& input_errors, OutcomeSource& src) {
  if (src.mode() == OutcomeSource::Mode::Exhaustive) {
    throw StructuralError("exhaustive sources need enumerate_fragment");
  }
  Engine engine(f);
  ExecutionTrace out;
  engine.explore(input_state, input_errors, src,
                 [&](const Engine::Leaf& leaf) { out = engine.trace_from_leaf(leaf, input_errors); });
  return out;
}

ExecutionTrace run_pattern(const MeasurementPattern& p, OutcomeSource& src) {
  return run_fragment(as_fragment(p), Statevector(), {}, src);
}

std::vector<ExecutionTrace> enumerate_fragment(const PatternFragment& f, const Statevector& input_state,
                                               const std::vector<std::pair<int, int>>& input_errors) {
  Engine engine(f);
  std::vector<ExecutionTrace> out;
  OutcomeSource src = OutcomeSource::exhaustive();
  engine.explore(input_state, input_errors, src,
                 [&](const Engine::Leaf& leaf) { out.push_back(engine.trace_from_leaf(leaf, input_errors)); });
  return out;
}

std::vector<ExecutionTrace> enumerate_pattern(const MeasurementPattern& p) {
  return enumerate_fragment(as_fragment(p), Statevector(), {});
}

}  // namespace ppm
