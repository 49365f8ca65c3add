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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ppm/brick_table.hpp"
#include "ppm/compose.hpp"
#include "ppm/errors.hpp"
#include "ppm/executor.hpp"
#include "ppm/fragments.hpp"
#include "ppm/gates.hpp"
#include "ppm/schedule.hpp"
#include "ppm/verifier.hpp"

using namespace ppm;

namespace {

BoolFn fn(const char* s) { return BoolFn::parse(s); }

VerifyOptions quiet() {
  VerifyOptions o;
  o.keep_branches = false;
  return o;
}

}  // namespace

TEST(XHalf, Certifies) {
  VerificationReport r = verify_fragment(xhalf_fragment(), parse_unitary("X(pi/2)"));
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.worst_infidelity, 1e-9);
  EXPECT_EQ(r.error_combinations, 4u);
  EXPECT_EQ(r.branch_count, 8u);
  EXPECT_NEAR(r.probability_deviation, 0.0, 1e-9);
}

TEST(XHalf, ForcedOneFrame) {
  OutcomeSource src = OutcomeSource::tape({1});
  ExecutionTrace t = run_fragment(xhalf_fragment(), Statevector::plus(1), {{0, 0}}, src);
  EXPECT_EQ(t.frame[0], std::make_pair(1, 0));
}

TEST(XHalf, InferredCorrections) {
  PatternFragment f = xhalf_fragment();
  auto c = infer_corrections(f, parse_unitary("X(pi/2)"));
  EXPECT_EQ(c.at(1).zeta, fn("z ^ a"));
  EXPECT_EQ(c.at(1).xi, fn("z ^ a ^ x ^ 1"));
}

TEST(XHalf, WrongTargetFails) {
  VerificationReport r = verify_fragment(xhalf_fragment(), parse_unitary("T"));
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.worst_infidelity, 0.1);
}

TEST(XHalf, ProductInputCrossCheck) {
  CrossCheck c = cross_check_product_inputs(xhalf_fragment(), parse_unitary("X(pi/2)"));
  EXPECT_EQ(c.runs, 6u * 4u * 2u);
  EXPECT_LT(c.worst_infidelity, 1e-9);
}

TEST(EFragment, AllModesCertify) {
  const std::pair<EMode, const char*> modes[] = {
      {EMode::T, "Z(pi/4)"}, {EMode::Tdg, "Z(-pi/4)"}, {EMode::H, "H"}, {EMode::S, "S"}};
  for (const auto& [mode, label] : modes) {
    VerificationReport r = verify_fragment(e_fragment(mode), parse_unitary(label), quiet());
    EXPECT_TRUE(r.pass) << to_string(mode) << " " << r.worst_infidelity;
    EXPECT_EQ(r.branch_count, 32u * 4u) << to_string(mode);
  }
}

TEST(EFragment, TCorrectionsAreRecoveredExactly) {
  PatternFragment f = e_fragment(EMode::T);
  auto c = infer_corrections(f, gates::T());
  const int out = f.outputs[0];
  EXPECT_EQ(c.at(out).zeta, fn("a ^ c ^ d ^ e ^ z ^ (b ^ x)*(c ^ d ^ x ^ 1)"));
  EXPECT_EQ(c.at(out).xi, fn("c ^ d ^ x ^ 1"));
  EXPECT_EQ(f.corrections.at(out), c.at(out));
}

// With errors applied as X^x Z^z, controlling e and the frame by z instead
// of x does not implement T on every input error.
TEST(EFragment, ZControlledVariantFails) {
  PatternFragment f = e_fragment(EMode::T);
  const int out = f.outputs[0];
  f.pattern.measurements.at(5).choice = fn("b ^ z");
  f.corrections[out] = {fn("a ^ c ^ d ^ e ^ x ^ (b ^ z)*(c ^ d ^ z ^ 1)"), fn("c ^ d ^ z ^ 1")};
  EXPECT_FALSE(verify_fragment(f, gates::T(), quiet()).pass);
}

TEST(EFragment, AdaptiveRuleInference) {
  PatternFragment f = e_fragment(EMode::T);
  EXPECT_EQ(infer_adaptive_rule(f, 5, gates::T()), fn("b ^ x"));
  auto found = search_choice_functions(f, 5, {"b", "x"}, gates::T());
  EXPECT_NE(std::find(found.begin(), found.end(), fn("b ^ x")), found.end());
}

TEST(EFragment, HModeInferredCorrectionsCertify) {
  PatternFragment f = e_fragment(EMode::H);
  f.corrections.clear();
  PatternFragment g = with_inferred_corrections(f, gates::H());
  EXPECT_TRUE(verify_fragment(g, gates::H(), quiet()).pass);
}

TEST(EFragment, WithoutMiddleHair) {
  EXPECT_TRUE(verify_fragment(e_fragment_without_middle_hair(), gates::T(), quiet()).pass);
}

TEST(EFragment, ScheduleDepth) { EXPECT_EQ(feed_forward_depth(e_fragment(EMode::T)), 2); }

TEST(CZFragment, OnCertifies) {
  VerificationReport r = verify_fragment(cz_fragment(true), gates::CZ(), quiet());
  EXPECT_TRUE(r.pass) << r.worst_infidelity;
  EXPECT_EQ(r.error_combinations, 16u);
}

TEST(CZFragment, OffIsLocalOnEveryBranch) {
  auto branches = branch_unitaries(cz_fragment(false));
  ASSERT_FALSE(branches.empty());
  for (const auto& b : branches) EXPECT_EQ(operator_schmidt_rank(b.unitary), 1);
  EXPECT_TRUE(verify_fragment(cz_fragment(false), parse_unitary(cz_off_label()), quiet()).pass);
}

TEST(CZFragment, HadamardConjugationIsCNOT) {
  PatternFragment h1 = e_fragment(EMode::H);
  PatternFragment cz = cz_fragment(true);
  ComposeResult a = compose_detailed(h1, cz, {{h1.outputs[0], cz.inputs[1]}});
  PatternFragment mid = a.fragment;
  // Wire order: control first.
  mid.inputs = {a.f2_vertices[static_cast<size_t>(cz.inputs[0])], h1.inputs[0]};
  PatternFragment h2 = e_fragment(EMode::H);
  PatternFragment full = compose(mid, h2, {{mid.outputs[1], h2.inputs[0]}});
  VerificationReport r = verify_fragment(full, gates::CNOT(), quiet());
  EXPECT_TRUE(r.pass) << r.worst_infidelity;
}

TEST(Brick, DefaultLanes) {
  VerificationReport r = verify_fragment(brick({LaneGate::T, LaneGate::HTH, false}),
                                         kron(gates::T(), gates::H() * gates::T() * gates::H()), quiet());
  EXPECT_TRUE(r.pass) << r.worst_infidelity;
}

TEST(Brick, HadamardsWithCZ) {
  VerificationReport r =
      verify_fragment(brick({LaneGate::H, LaneGate::H, true}), gates::CZ() * kron(gates::H(), gates::H()), quiet());
  EXPECT_TRUE(r.pass) << r.worst_infidelity;
}

TEST(Brick, AdvertisedLaneGatesCovered) {
  const BrickTable& t = shipped_brick_table();
  for (LaneGate g : {LaneGate::H, LaneGate::S, LaneGate::HSH, LaneGate::HSHS, LaneGate::HTH, LaneGate::T}) {
    bool any = false;
    for (const auto* side : {&t.left_gates, &t.right_gates}) any = any || std::count(side->begin(), side->end(), g);
    EXPECT_TRUE(any) << to_string(g);
  }
  EXPECT_EQ(t.entries.size(), 2 * t.left_gates.size() * t.right_gates.size());
}

TEST(Brick, ShippedEntriesAreCertified) {
  for (const auto& e : shipped_brick_table().entries) {
    EXPECT_LT(e.worst_infidelity, 1e-9) << e.label;
    EXPECT_EQ(e.branch_count, 16u * 16384u) << e.label;
    EXPECT_EQ(e.label, e.settings.label());
  }
}

TEST(Brick, SampledSpotChecks) {
  VerifyOptions o = quiet();
  o.branches = VerifyOptions::Branches::Sample;
  o.samples = 32;
  for (const auto& e : shipped_brick_table().entries) {
    VerificationReport r = verify_fragment(brick_from_entry(e), e.settings.unitary(), o, e.label);
    EXPECT_TRUE(r.pass) << e.label;
  }
}

TEST(Brick, CzOffEntriesAreLocal) {
  for (const auto& e : shipped_brick_table().entries) {
    if (e.settings.cz) continue;
    EXPECT_EQ(operator_schmidt_rank(provisional_unitary(brick_from_entry(e))), 1) << e.label;
  }
}

// With the cz-off hub every lane picks up an S; Z-measuring the top S-hair
// adds another, and the two cancel up to a Pauli frame.
TEST(Brick, SHairCancelsHubPhase) {
  const BrickTableEntry* e = shipped_brick_table().find({LaneGate::S, LaneGate::S, false});
  ASSERT_NE(e, nullptr);
  PatternFragment f = brick_from_entry(*e);
  auto& c = f.pattern.measurements.at(brick_vertex("sT")).choice;
  c = c.complement();
  Dictionary d = make_dictionary({"S@I"});
  for (const auto& b : branch_unitaries(f)) ASSERT_TRUE(classify_up_to_pauli(b.unitary, d).has_value());
}

TEST(Brick, UnknownSettingsRejected) {
  EXPECT_THROW(brick({LaneGate::HTH, LaneGate::T, false}), StructuralError);
}

TEST(Hierarchy, CertifiesEachLevel) {
  for (int m = 1; m <= 4; ++m) {
    PatternFragment f = hierarchy_fragment(m);
    VerificationReport r = verify_fragment(f, gates::zrot(M_PI / std::ldexp(1.0, m)), quiet());
    EXPECT_TRUE(r.pass) << m << " " << r.worst_infidelity;
    EXPECT_EQ(hierarchy_stage_vertices(m).size(), static_cast<size_t>(m - 1));
  }
}

TEST(Hierarchy, MatchesEFragmentAtTwo) {
  PatternFragment h = hierarchy_fragment(2);
  PatternFragment e = e_fragment(EMode::T);
  EXPECT_EQ(h.pattern.graph.edges(), e.pattern.graph.edges());
  EXPECT_EQ(h.corrections, e.corrections);
}

TEST(Hierarchy, CapEnforced) {
  EXPECT_THROW(hierarchy_fragment(0), StructuralError);
  EXPECT_THROW(hierarchy_fragment(5, 4), CapacityError);
}

TEST(Builtins, EveryNameResolves) {
  for (const auto& name : builtin_names()) {
    Builtin b = builtin(name);
    EXPECT_NO_THROW(b.fragment.validate()) << name;
    EXPECT_NO_THROW(parse_unitary(b.target)) << name;
  }
  EXPECT_THROW(builtin("nope"), ParseError);
}
