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

#include <random>

#include "circuits.hpp"
#include "ppm/compiler.hpp"
#include "ppm/errors.hpp"
#include "ppm/fragments.hpp"
#include "ppm/schedule.hpp"
#include "ppm/serialize.hpp"
#include "ppm/verifier.hpp"

using namespace ppm;
using ppm::testing::overlap;
using ppm::testing::random_circuit_text;
using ppm::testing::reference_unitary;

namespace {

VerifyOptions sampled(size_t k) {
  VerifyOptions o;
  o.branches = VerifyOptions::Branches::Sample;
  o.samples = k;
  o.keep_branches = false;
  return o;
}

}  // namespace

TEST(CircuitParser, Basic) {
  Circuit c = parse_circuit("qubits 2\nH 0\nT 1\nCZ 0 1");
  EXPECT_EQ(c.qubit_count, 2);
  ASSERT_EQ(c.gates.size(), 3u);
  EXPECT_EQ(c.gates[2].kind, GateKind::CZ);
  EXPECT_EQ(c.gates[2].qubits, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.t_count(), 1);
}

TEST(CircuitParser, UnknownGateNamesLine) {
  try {
    parse_circuit("FOO 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_NE(std::string(e.what()).find("FOO"), std::string::npos);
  }
}

TEST(CircuitParser, OperandErrors) {
  EXPECT_THROW(parse_circuit("qubits 2\nCZ 0 0"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nH 2"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nH"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nCZ 0"), ParseError);
  EXPECT_THROW(parse_circuit("H 0"), ParseError);
  EXPECT_THROW(parse_circuit(""), ParseError);
  try {
    parse_circuit("qubits 2\n# comment\n\nH 0\nT x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
}

TEST(CircuitParser, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Circuit c = parse_circuit(random_circuit_text(3, 8, rng));
    Circuit d = parse_circuit(to_text(c));
    EXPECT_EQ(to_text(c), to_text(d));
  }
}

TEST(CircuitUnitary, MatchesReference) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Circuit c = parse_circuit(random_circuit_text(3, 10, rng));
    EXPECT_LT(1 - overlap(circuit_unitary(c), reference_unitary(c, 3)), 1e-12);
  }
}

TEST(Compiler, SingleT) {
  CompiledCircuit cc = compile_to_bricks(parse_circuit("qubits 2\nT 0"));
  ASSERT_EQ(cc.layers.size(), 1u);
  ASSERT_EQ(cc.layers[0].bricks.size(), 1u);
  const BrickSettings& s = cc.layers[0].bricks[0].settings;
  EXPECT_EQ(s.left, LaneGate::T);
  EXPECT_EQ(s.right, LaneGate::Pad);
  EXPECT_FALSE(s.cz);
}

TEST(Compiler, CnotIsConjugatedCZ) {
  CompiledCircuit cc = compile_to_bricks(parse_circuit("qubits 2\nCNOT 0 1"));
  ASSERT_EQ(cc.layers.size(), 2u);
  const BrickSettings& a = cc.layers[0].bricks[0].settings;
  const BrickSettings& b = cc.layers[1].bricks[0].settings;
  EXPECT_EQ(a, (BrickSettings{LaneGate::Pad, LaneGate::H, true}));
  EXPECT_EQ(b, (BrickSettings{LaneGate::Pad, LaneGate::H, false}));
  EXPECT_LT(1 - trace_overlap(compiled_unitary(cc), gates::CNOT()), 1e-12);
}

TEST(Compiler, RightLaneTIsConjugated) {
  CompiledCircuit cc = compile_to_bricks(parse_circuit("qubits 2\nT 1"));
  ASSERT_EQ(cc.layers.size(), 3u);
  EXPECT_EQ(cc.layers[1].bricks[0].settings.right, LaneGate::HTH);
}

TEST(Compiler, SingleQubitCircuitUsesTwoLanes) {
  Circuit c = parse_circuit("qubits 1\nH 0\nT 0\nSdg 0");
  CompiledCircuit cc = compile_to_bricks(c);
  EXPECT_EQ(cc.lanes, 2);
  EXPECT_LT(1 - trace_overlap(compiled_unitary(cc), circuit_unitary(c, 2)), 1e-12);
}

TEST(Compiler, BrickProductMatchesCircuit) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Circuit c = parse_circuit(random_circuit_text(2, 8, rng));
    CompiledCircuit cc = compile_to_bricks(c);
    EXPECT_LT(1 - overlap(compiled_unitary(cc), reference_unitary(c, 2)), 1e-12) << to_text(c);
  }
}

TEST(Compiler, EmptyCircuitIsOnePadLayer) {
  CompiledCircuit cc = compile_to_bricks(parse_circuit("qubits 2\n"));
  ASSERT_EQ(cc.layers.size(), 1u);
  EXPECT_EQ(cc.layers[0].bricks[0].settings, BrickSettings{});
}

TEST(Compiler, NonAdjacentCZRejected) {
  EXPECT_THROW(compile_to_bricks(parse_circuit("qubits 3\nCZ 0 2")), StructuralError);
}

TEST(Layout, OneLayerIsTheBrick) {
  CompiledCircuit cc = compile_to_bricks(parse_circuit("qubits 2\nH 0"));
  PatternFragment f = layout_brickwork(cc);
  PatternFragment b = brick(cc.layers[0].bricks[0].settings);
  EXPECT_EQ(f.pattern.graph, b.pattern.graph);
  EXPECT_EQ(f.inputs, b.inputs);
  EXPECT_EQ(f.outputs, b.outputs);
  EXPECT_EQ(f.layout, b.layout);
  for (const auto& [v, m] : b.pattern.measurements) {
    EXPECT_EQ(f.pattern.measurements.at(v).var, "L0P0." + m.var);
  }
}

TEST(Layout, StackedLayersTileWithoutCollisions) {
  CompiledCircuit cc = compile_to_bricks(parse_circuit("qubits 2\nH 0\nCZ 0 1\nH 1\nT 0"));
  ASSERT_GE(cc.layers.size(), 2u);
  PatternFragment f = layout_brickwork(cc);
  EXPECT_TRUE(layout_collisions(f).empty());
  EXPECT_EQ(f.layout.size(), static_cast<size_t>(f.pattern.graph.vertex_count()));
}

TEST(Layout, CompiledPatternCertifies) {
  Circuit c = parse_circuit("qubits 2\nH 0\nT 0\nCZ 0 1");
  PatternFragment f = layout_brickwork(compile_to_bricks(c));
  VerificationReport r = verify_fragment(f, circuit_unitary(c), sampled(256));
  EXPECT_TRUE(r.pass) << r.worst_infidelity;
  EXPECT_LE(feed_forward_depth(f), 1 + c.t_count());
}

TEST(Layout, ExportIsDeterministic) {
  Circuit c = parse_circuit("qubits 2\nT 0\nCNOT 1 0\nS 1");
  PatternFragment f = layout_brickwork(compile_to_bricks(c));
  PatternFragment g = layout_brickwork(compile_to_bricks(c));
  EXPECT_EQ(to_json_text(f), to_json_text(g));
  EXPECT_EQ(from_json_text(to_json_text(f)), f);
  EXPECT_EQ(to_dot(f), to_dot(g));
}

TEST(Banded, FourQubitsCompileAndCertify) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    Circuit c = parse_circuit(random_circuit_text(4, 6, rng));
    CompiledCircuit cc = compile_to_bricks(c);
    EXPECT_EQ(cc.lanes, 4);
    EXPECT_LT(1 - overlap(compiled_unitary(cc), reference_unitary(c, 4)), 1e-12) << to_text(c);
    PatternFragment f = layout_brickwork(cc);
    VerificationReport r = verify_fragment(f, circuit_unitary(c, 4), sampled(32));
    EXPECT_TRUE(r.pass) << to_text(c) << r.worst_infidelity;
  }
}

TEST(Banded, OddQubitCountIsPadded) {
  Circuit c = parse_circuit("qubits 3\nH 2\nCZ 1 2\nT 2");
  CompiledCircuit cc = compile_to_bricks(c);
  EXPECT_EQ(cc.lanes, 4);
  EXPECT_LT(1 - trace_overlap(compiled_unitary(cc), circuit_unitary(c, 4)), 1e-12);
}
