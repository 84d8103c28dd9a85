// Copyright 2026 The qcmap Authors
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

#include <cmath>
#include <set>
#include <utility>

#include "qcmap/benchgen.hpp"

namespace qcmap {
namespace {

using K = GateKind;

std::size_t count_kind(const Circuit &c, K kind) {
  std::size_t n = 0;
  for (const Gate &g : c.gates()) n += g.kind == kind;
  return n;
}

void expect_well_formed(const Circuit &c) {
  for (const Gate &g : c.gates()) {
    for (Qubit x : g.operands()) EXPECT_LT(x, c.num_qubits());
    if (g.is_two_qubit()) EXPECT_NE(g.qubits[0], g.qubits[1]);
    EXPECT_EQ(g.param.has_value(), gate_takes_param(g.kind));
  }
}

TEST(QgfTest, ZeroGatesIsEmpty) { EXPECT_TRUE(random_qgf(4, 0, 0.5, 1).empty()); }

TEST(QgfTest, TwoQubitsAllCxOnOnePair) {
  const Circuit c = random_qgf(2, 100, 1.0, 7);
  ASSERT_EQ(c.size(), 100u);
  for (const Gate &g : c.gates()) EXPECT_EQ(g, Gate::pair(K::CX, 0, 1));
}

TEST(QgfTest, FractionConcentratesOverTwentySeeds) {
  std::size_t two = 0;
  for (Seed s = 1; s <= 20; ++s) {
    const Circuit c = random_qgf(120, 2000, 0.5, s);
    ASSERT_EQ(c.size(), 2000u);
    two += c.two_qubit_gate_count();
  }
  EXPECT_NEAR(static_cast<double>(two) / 40000.0, 0.5, 0.03);
}

TEST(QgfTest, MeanWithinThreeBinomialDeviations) {
  const std::size_t g = 400;
  for (double f : {0.1, 0.5, 0.9}) {
    std::size_t total = 0;
    for (Seed s = 1; s <= 50; ++s) total += random_qgf(30, g, f, s).two_qubit_gate_count();
    const double n = 50.0 * g;
    const double sd = std::sqrt(n * f * (1 - f));
    EXPECT_LE(std::abs(static_cast<double>(total) - n * f), 3 * sd) << f;
  }
}

TEST(QgfTest, OnlyHAndCx) {
  const Circuit c = random_qgf(10, 500, 0.3, 2);
  expect_well_formed(c);
  EXPECT_EQ(count_kind(c, K::H) + count_kind(c, K::CX), 500u);
  // Pairs are uniform over unordered pairs, so every pair shows up eventually.
  std::set<std::pair<Qubit, Qubit>> pairs;
  const Circuit full = random_qgf(5, 2000, 1.0, 3);
  for (const Gate &g : full.gates()) pairs.emplace(g.qubits[0], g.qubits[1]);
  EXPECT_EQ(pairs.size(), 10u);
}

TEST(QgfTest, Errors) {
  EXPECT_THROW(random_qgf(1, 10, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(random_qgf(4, 10, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(random_qgf(4, 10, -0.1, 1), std::invalid_argument);
  EXPECT_NO_THROW(random_qgf(1, 10, 0.0, 1));
}

TEST(DepthTest, SliceCountEqualsDepth) {
  for (Seed s = 1; s <= 10; ++s) {
    EXPECT_EQ(slice_circuit(random_by_depth(6, 12, s)).num_slices(), 12u);
    EXPECT_EQ(slice_circuit(random_by_depth(7, 5, s, 0.2)).num_slices(), 5u);
  }
  EXPECT_TRUE(random_by_depth(4, 0, 1).empty());
}

TEST(DepthTest, ForcedPairing) {
  const Circuit c = random_by_depth(2, 3, 9, 1.0);
  ASSERT_EQ(c.size(), 3u);
  for (const Gate &g : c.gates()) EXPECT_EQ(g.kind, K::CX);
}

TEST(DepthTest, EveryQubitActsOncePerLayer) {
  const Circuit c = random_by_depth(9, 4, 5, 0.5);
  const TimeslicedCircuit tsc = slice_circuit(c);
  for (const Timeslice &s : tsc.slices) {
    std::size_t touched = 0;
    for (const Gate &g : s.gates) touched += g.operands().size();
    EXPECT_EQ(touched, 9u);
  }
}

TEST(QftTest, SingleQubit) {
  const Circuit c = qft(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::single(K::H, 0));
}

TEST(QftTest, ControlledPhaseCount) {
  for (std::size_t q = 1; q <= 12; ++q) {
    const Circuit c = qft(q);
    EXPECT_EQ(count_kind(c, K::CP), q * (q - 1) / 2);
    EXPECT_EQ(count_kind(c, K::H), q);
  }
}

TEST(QftTest, InteractionPairs) {
  std::set<std::pair<Qubit, Qubit>> pairs;
  const Circuit c = qft(3);
  for (const Gate &g : c.gates()) {
    if (g.is_two_qubit()) pairs.emplace(std::min(g.qubits[0], g.qubits[1]), std::max(g.qubits[0], g.qubits[1]));
  }
  EXPECT_EQ(pairs, (std::set<std::pair<Qubit, Qubit>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(QftTest, Angles) {
  const Circuit c = qft(3);
  // H0 CP(pi/2)(1,0) CP(pi/4)(2,0) H1 CP(pi/2)(2,1) H2
  ASSERT_EQ(c.size(), 6u);
  EXPECT_DOUBLE_EQ(*c.gates()[1].param, std::acos(-1.0) / 2);
  EXPECT_DOUBLE_EQ(*c.gates()[2].param, std::acos(-1.0) / 4);
}

TEST(AdderTest, CuccaroShape) {
  EXPECT_EQ(cuccaro_adder(1).num_qubits(), 4u);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Circuit c = cuccaro_adder(n);
    EXPECT_EQ(c.num_qubits(), 2 * n + 2);
    expect_well_formed(c);
    for (const Gate &g : c.gates()) EXPECT_LE(g.arity(), 2);
  }
}

TEST(AdderTest, DraperShape) {
  const Circuit c = draper_adder(2);
  EXPECT_EQ(c.num_qubits(), 4u);
  EXPECT_EQ(count_kind(c, K::CP), 5u);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Circuit d = draper_adder(n);
    EXPECT_EQ(d.num_qubits(), 2 * n);
    expect_well_formed(d);
  }
}

TEST(AdderTest, Errors) {
  EXPECT_THROW(cuccaro_adder(0), std::invalid_argument);
  EXPECT_THROW(draper_adder(0), std::invalid_argument);
}

TEST(QvTest, Shape) {
  EXPECT_EQ(count_kind(quantum_volume(2, 1), K::CX), 2u * 1 * 3);
  EXPECT_EQ(count_kind(quantum_volume(5, 1), K::CX), 5u * 2 * 3);
  for (Seed s = 1; s <= 5; ++s) EXPECT_EQ(count_kind(quantum_volume(8, s), K::CX), 96u);
  expect_well_formed(quantum_volume(7, 3));
}

TEST(QvTest, BlocksPerLayerLeaveOneIdleQubit) {
  // Each layer pairs floor(q/2) distinct pairs; in 5 qubits one is idle.
  const Circuit c = quantum_volume(5, 4);
  std::vector<Gate> cx;
  for (const Gate &g : c.gates()) {
    if (g.kind == K::CX) cx.push_back(g);
  }
  ASSERT_EQ(cx.size(), 30u);
  for (std::size_t layer = 0; layer < 5; ++layer) {
    std::set<Qubit> used;
    for (std::size_t i = 0; i < 6; ++i) {
      used.insert(cx[layer * 6 + i].qubits[0]);
      used.insert(cx[layer * 6 + i].qubits[1]);
    }
    EXPECT_EQ(used.size(), 4u);
  }
}

TEST(GeneratorTest, Deterministic) {
  EXPECT_EQ(random_qgf(20, 300, 0.5, 42), random_qgf(20, 300, 0.5, 42));
  EXPECT_NE(random_qgf(20, 300, 0.5, 42), random_qgf(20, 300, 0.5, 43));
  EXPECT_EQ(random_by_depth(10, 20, 8), random_by_depth(10, 20, 8));
  EXPECT_EQ(quantum_volume(9, 8), quantum_volume(9, 8));
}

TEST(GeneratorTest, MakeBenchmarkWidth) {
  for (auto kind : {BenchmarkKind::Qft, BenchmarkKind::Draper, BenchmarkKind::Cuccaro,
                    BenchmarkKind::Random, BenchmarkKind::QuantumVolume, BenchmarkKind::RandomQgf}) {
    for (std::size_t q : {5u, 8u, 13u}) {
      const Circuit c = make_benchmark(kind, q, 3, BenchmarkParams{50, 0.5, 2});
      EXPECT_EQ(c.num_qubits(), q) << benchmark_name(kind);
      expect_well_formed(c);
    }
    EXPECT_EQ(benchmark_from_name(benchmark_name(kind)), kind);
  }
  EXPECT_FALSE(benchmark_from_name("nope").has_value());
}

TEST(GeneratorTest, OutputsSliceCleanly) {
  for (Seed s = 1; s <= 5; ++s) {
    for (const Circuit &c : {random_qgf(12, 200, 0.6, s), random_by_depth(12, 24, s), quantum_volume(6, s),
                             qft(7), draper_adder(3), cuccaro_adder(3)}) {
      const TimeslicedCircuit tsc = slice_circuit(c);
      EXPECT_EQ(tsc.num_gates(), c.size());
    }
  }
}

}  // namespace
}  // namespace qcmap
