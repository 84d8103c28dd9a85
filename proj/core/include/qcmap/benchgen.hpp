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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcmap/circuit.hpp"

namespace qcmap {

using Seed = std::uint64_t;

/// `g` gates on `q` qubits; each is a CX on a uniformly random distinct pair
/// with probability `f`, otherwise an H on a uniformly random qubit.
Circuit random_qgf(std::size_t q, std::size_t g, double f, Seed seed);

/// `depth` layers; each layer pairs a random permutation of the qubits and
/// keeps each pair as a CX with probability `f` (H on both otherwise, H on an
/// unpaired qubit). Every layer touches every qubit, so the circuit slices
/// into exactly `depth` timeslices.
Circuit random_by_depth(std::size_t q, std::size_t depth, Seed seed, double f = 0.5);

/// QFT without the final qubit-reversal swaps.
Circuit qft(std::size_t q);

/// Ripple-carry adder on 2n+2 qubits: carry-in at 0, a at [1, n], b at
/// [n+1, 2n], carry-out at 2n+1. Toffolis are expanded.
Circuit cuccaro_adder(std::size_t n);

/// QFT adder on 2n qubits: a at [0, n), b at [n, 2n).
Circuit draper_adder(std::size_t n);

/// `q` layers of random-permutation pairings; each SU(4) block is three CX
/// interleaved with random one-qubit rotations.
Circuit quantum_volume(std::size_t q, Seed seed);

enum class BenchmarkKind { Qft, Draper, Cuccaro, Random, QuantumVolume, RandomQgf };

std::string_view benchmark_name(BenchmarkKind kind);
std::optional<BenchmarkKind> benchmark_from_name(std::string_view name);

struct BenchmarkParams {
  std::size_t gates = 0;       // RandomQgf: g
  double two_qubit_fraction = 0.5;  // RandomQgf: f; Random: pairing density
  std::size_t depth_factor = 2;  // Random: depth = depth_factor * q
};

/// Builds a benchmark whose register has exactly `q` qubits. Adders use the
/// largest operand width that fits and leave the remaining qubits idle.
Circuit make_benchmark(BenchmarkKind kind, std::size_t q, Seed seed,
                       const BenchmarkParams &params = {});

}  // namespace qcmap
