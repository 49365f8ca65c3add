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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ppm/executor.hpp"
#include "ppm/gates.hpp"
#include "ppm/pattern.hpp"

namespace ppm {

struct VerifyOptions {
  enum class Branches { All, Sample };

  double tol = 1e-9;
  Branches branches = Branches::All;
  // Sample mode: number of (input-error combination, Born-sampled branch)
  // pairs, drawn from seed.
  size_t samples = 64;
  uint64_t seed = 0xC0FFEE;
  // Cap on the live register, reference qubits included.
  int max_qubits = 22;
  // Keep one record per branch in the report.
  bool keep_branches = true;
};

struct BranchRecord {
  // z0, x0, z1, x1, ... as applied to the inputs.
  std::vector<int> errors;
  // Outcome per measured vertex, ascending vertex order; -1 if cut off.
  std::vector<int8_t> outcomes;
  double probability = 0.0;
  // zeta0, xi0, zeta1, xi1, ...
  std::vector<int> frame;
  double infidelity = 1.0;
  bool impossible = false;
};

struct VerificationReport {
  std::string target;
  std::string fragment;
  std::vector<std::string> outcome_vars;
  bool exhaustive = true;
  size_t error_combinations = 0;
  // Possible branches summed over all input-error combinations.
  size_t branch_count = 0;
  // Leaves below impossible nodes, summed the same way.
  size_t impossible_count = 0;
  std::vector<BranchRecord> branches;
  double worst_infidelity = 0.0;
  // Mean over error combinations of the total branch probability.
  double probability_total = 0.0;
  // Largest deviation from 1 over error combinations.
  double probability_deviation = 0.0;
  bool pass = false;

  nlohmann::ordered_json to_json(bool include_branches = false) const;
};

// Checks the frame contract X^xi Z^zeta G on every branch and every input
// Pauli error, with each input maximally entangled with a reference qubit.
VerificationReport verify_fragment(const PatternFragment& f, const Matrix& target, const VerifyOptions& opts = {},
                                   const std::string& target_label = "");

// Frame functions fitted from the unique Pauli that explains each branch.
// Rows of the truth table that no branch reaches are taken as 0.
std::map<int, Correction> infer_corrections(const PatternFragment& f, const Matrix& target,
                                            const VerifyOptions& opts = {});
PatternFragment with_inferred_corrections(const PatternFragment& f, const Matrix& target,
                                          const VerifyOptions& opts = {});

// Rule for the basis of one vertex: for every assignment of the other
// outcome and error variables, X if measuring in X keeps every outcome of
// the vertex correctable up to a Pauli frame, else Z if that does.
BoolFn infer_adaptive_rule(const PatternFragment& f, int vertex, const Matrix& target,
                           const VerifyOptions& opts = {});

// All choice functions over vars (enumerated by truth table, row bit i =
// vars[i]) for which the vertex makes f implement target, with corrections
// inferred per candidate.
std::vector<BoolFn> search_choice_functions(const PatternFragment& f, int vertex,
                                            const std::vector<std::string>& vars, const Matrix& target,
                                            const VerifyOptions& opts = {});

struct LabelledUnitary {
  std::string label;
  Matrix unitary;
};
using Dictionary = std::vector<LabelledUnitary>;

Dictionary make_dictionary(const std::vector<std::string>& labels);
// Best label when |tr(V^dag U)|/dim > 1 - 1e-9.
std::optional<std::string> classify_unitary(const Matrix& u, const Dictionary& dictionary);

struct PauliClass {
  std::string label;
  std::vector<int> z;
  std::vector<int> x;
};
// Like classify_unitary, matching U against X^x Z^z V for every Pauli.
std::optional<PauliClass> classify_up_to_pauli(const Matrix& u, const Dictionary& dictionary);

// Rank of U across the split after the first `left` qubits.
int operator_schmidt_rank(const Matrix& u, int left = 1, double tol = 1e-8);

struct BranchUnitary {
  std::vector<int8_t> outcomes;
  double probability = 0.0;
  Matrix unitary;
};
// Operator applied on each branch without input errors, recovered from the
// Choi state. Requires input and output arity to match.
std::vector<BranchUnitary> branch_unitaries(const PatternFragment& f, const VerifyOptions& opts = {});
// The branch with every outcome 0 and no input errors.
Matrix provisional_unitary(const PatternFragment& f, const VerifyOptions& opts = {});

struct CrossCheck {
  size_t runs = 0;
  double worst_infidelity = 0.0;
};
// Runs every product of {|0>,|1>,|+>,|->,|+i>,|-i>} through the fragment
// and compares against X^xi Z^zeta G|psi>. Honors opts.branches.
CrossCheck cross_check_product_inputs(const PatternFragment& f, const Matrix& target, const VerifyOptions& opts = {});

}  // namespace ppm
