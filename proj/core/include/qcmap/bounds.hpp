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

namespace qcmap {

/// Closed-form non-local communication estimates for mapping a (q, g, f)
/// random circuit onto N cores of q/N qubits each.
///
/// All functions throw std::invalid_argument unless q >= 2, N >= 1,
/// q % N == 0 and 0 <= f <= 1.

/// Naive-mapping upper bound: 2(N-1)gfq / (N(q-1)).
double comm_upper_bound(std::size_t q, std::size_t g, double f, std::size_t n_cores);

/// Lower bound without look-ahead: (N-1)gfq / (N(q-1)).
double comm_lower_bound(std::size_t q, std::size_t g, double f, std::size_t n_cores);

/// Expected qubits in unfeasible operations per slice when the circuit has
/// `slices` timeslices: 2(N-1)gfq / (N(q-1)t). Requires `slices` >= 1.
double expected_unfeasible_qubits_per_slice(std::size_t q, std::size_t g, double f,
                                            std::size_t n_cores, std::size_t slices);

struct BoundsReport {
  std::size_t q = 0;
  std::size_t g = 0;
  double f = 0.0;
  std::size_t n_cores = 1;
  double lower = 0.0;
  double upper = 0.0;
  double expected_unfeasible_per_slice = 0.0;
};

BoundsReport bounds_report(std::size_t q, std::size_t g, double f, std::size_t n_cores,
                           std::size_t slices);

}  // namespace qcmap
