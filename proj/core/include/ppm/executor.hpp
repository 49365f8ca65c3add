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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ppm/boolfn.hpp"
#include "ppm/pattern.hpp"
#include "ppm/statevector.hpp"

namespace ppm {

// Where measurement outcomes come from. A tape lists outcomes for the
// measured vertices in ascending vertex order, independent of the order in
// which they are physically measured.
class OutcomeSource {
 public:
  enum class Mode { Seeded, Tape, Exhaustive };

  static OutcomeSource seeded(uint64_t seed);
  static OutcomeSource tape(std::vector<int> bits);
  static OutcomeSource exhaustive();

  Mode mode() const { return mode_; }
  const std::vector<int>& tape_bits() const { return tape_; }
  // Born sample given the probability of outcome 0.
  int draw(double p0);

 private:
  Mode mode_ = Mode::Seeded;
  std::mt19937_64 rng_;
  std::vector<int> tape_;
};

struct MeasurementRecord {
  int vertex = -1;
  std::string var;
  Basis basis = Basis::X;
  int outcome = 0;
  // Conditional probability of this outcome given the earlier ones.
  double probability = 1.0;
};

struct ExecutionTrace {
  // In physical measurement order.
  std::vector<MeasurementRecord> measurements;
  std::map<std::string, int> outcomes;
  double probability = 1.0;
  bool impossible = false;
  // Fragment outputs in wire order (patterns: unmeasured vertices ascending),
  // followed by any extra qubits carried alongside.
  Statevector output;
  std::vector<int> output_vertices;
  // (zeta, xi) per output wire; empty when the fragment has no corrections.
  std::vector<std::pair<int, int>> frame;
  // (z, x) per input wire as applied.
  std::vector<std::pair<int, int>> input_errors;

  nlohmann::ordered_json to_json(bool amplitudes = false) const;
};

// Streaming simulator for one fragment. Vertices enter the register as |+>
// only when first needed and leave it when measured, so the live register
// stays near the width of the pattern rather than its size. The physical
// order is fixed: repeatedly measure the smallest-index vertex whose choice
// function inputs are all known, after activating its neighbours. Because
// all entangling gates are diagonal and commute, this order yields the same
// branch probabilities and post-states as preparing the full resource first.
class Engine {
 public:
  struct Options {
    int max_qubits = 26;
  };

  // extra_qubits are carried after the inputs in the initial register and
  // never touched (reference halves of Choi states).
  explicit Engine(const PatternFragment& f, int extra_qubits = 0);
  Engine(const PatternFragment& f, int extra_qubits, Options opts);

  // Slot layout: outcomes of measured vertices in ascending vertex order,
  // then the input-error variables wire by wire (z0, x0, z1, x1, ...).
  const std::vector<std::string>& slot_names() const { return slot_names_; }
  const std::vector<int>& measured_vertices() const { return measured_; }
  int measured_count() const { return static_cast<int>(measured_.size()); }
  int error_slot_count() const { return static_cast<int>(2 * fragment_.inputs.size()); }
  int peak_qubits() const { return peak_; }
  const PatternFragment& fragment() const { return fragment_; }

  struct Leaf {
    // Indexed by slot; -1 for variables never assigned.
    const std::vector<int8_t>& values;
    // Basis used at each measurement step, in physical order.
    const std::vector<int8_t>& bases;
    // Outcome of each step in physical order.
    const std::vector<int8_t>& outcomes;
    const std::vector<double>& step_probabilities;
    double probability;
    bool impossible;
    // Leaves cut off below an impossible node (1 for a full leaf).
    uint64_t leaf_weight;
    // Normalized final register, outputs in wire order then extras. Empty
    // for impossible leaves.
    const Statevector& state;
  };
  using LeafFn = std::function<void(const Leaf&)>;

  // initial holds the inputs in wire order followed by the extras. errors
  // holds (z, x) bits per input wire.
  void explore(const Statevector& initial, const std::vector<std::pair<int, int>>& errors, OutcomeSource& src,
               const LeafFn& on_leaf) const;

  ExecutionTrace trace_from_leaf(const Leaf& leaf, const std::vector<std::pair<int, int>>& errors) const;
  // Evaluated (zeta, xi) per output wire from slot values.
  std::vector<std::pair<int, int>> frame(const std::vector<int8_t>& values) const;

 private:
  struct Op {
    enum class Kind { AppendPlus, Phase, Measure } kind;
    int a = 0;
    int b = 0;
    double angle = 0.0;
    int step = -1;
  };
  struct Step {
    int vertex;
    int slot;
    CompiledBoolFn choice;
  };

  void build_plan();
  void descend(size_t op_index, Statevector state, double prob, std::vector<int8_t>& values,
               std::vector<int8_t>& bases, std::vector<int8_t>& outs, std::vector<double>& probs, OutcomeSource& src,
               const LeafFn& on_leaf) const;

  PatternFragment fragment_;
  int extra_ = 0;
  Options opts_;
  std::vector<std::string> slot_names_;
  std::map<std::string, int> slot_of_;
  std::vector<int> measured_;
  std::vector<int> tape_index_;  // step -> index into a tape
  std::vector<Step> steps_;
  std::vector<Op> ops_;
  std::vector<int> final_order_;
  std::vector<std::pair<CompiledBoolFn, CompiledBoolFn>> corrections_;
  bool has_corrections_ = false;
  int peak_ = 0;
};

ExecutionTrace run_pattern(const MeasurementPattern& p, OutcomeSource& src);
ExecutionTrace run_fragment(const PatternFragment& f, const Statevector& input_state,
                            const std::vector<std::pair<int, int>>& input_errors, OutcomeSource& src);

std::vector<ExecutionTrace> enumerate_pattern(const MeasurementPattern& p);
std::vector<ExecutionTrace> enumerate_fragment(const PatternFragment& f, const Statevector& input_state,
                                               const std::vector<std::pair<int, int>>& input_errors);

}  // namespace ppm
