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

#include "qcmap/bounds.hpp"

#include <stdexcept>
#include <string>

namespace qcmap {

namespace {

void check(std::size_t q, double f, std::size_t n_cores) {
  if (q < 2) throw std::invalid_argument("bounds need at least 2 qubits");
  if (n_cores < 1) throw std::invalid_argument("bounds need at least one core");
  if (q % n_cores != 0) {
    throw std::invalid_argument("qubit count " + std::to_string(q) + " is not divisible by " +
                                std::to_string(n_cores) + " cores");
  }
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("two-qubit fraction must lie in [0, 1]");
}

// (N-1)gfq / (N(q-1)): the expected number of unfeasible two-qubit gates.
double unfeasible_gates(std::size_t q, std::size_t g, double f, std::size_t n_cores) {
  const double qd = static_cast<double>(q);
  const double nd = static_cast<double>(n_cores);
  return (nd - 1.0) * static_cast<double>(g) * f * qd / (nd * (qd - 1.0));
}

}  // namespace

double comm_upper_bound(std::size_t q, std::size_t g, double f, std::size_t n_cores) {
  check(q, f, n_cores);
  return 2.0 * unfeasible_gates(q, g, f, n_cores);
}

double comm_lower_bound(std::size_t q, std::size_t g, double f, std::size_t n_cores) {
  check(q, f, n_cores);
  return unfeasible_gates(q, g, f, n_cores);
}

double expected_unfeasible_qubits_per_slice(std::size_t q, std::size_t g, double f,
                                            std::size_t n_cores, std::size_t slices) {
  check(q, f, n_cores);
  if (slices < 1) throw std::invalid_argument("slice count must be at least 1");
  return 2.0 * unfeasible_gates(q, g, f, n_cores) / static_cast<double>(slices);
}

BoundsReport bounds_report(std::size_t q, std::size_t g, double f, std::size_t n_cores,
                           std::size_t slices) {
  BoundsReport r;
  r.q = q;
  r.g = g;
  r.f = f;
  r.n_cores = n_cores;
  r.upper = comm_upper_bound(q, g, f, n_cores);
  r.lower = comm_lower_bound(q, g, f, n_cores);
  r.expected_unfeasible_per_slice = expected_unfeasible_qubits_per_slice(q, g, f, n_cores, slices);
  return r;
}

}  // namespace qcmap
