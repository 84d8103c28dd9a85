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
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcmap/circuit.hpp"

namespace qcmap {

using Core = std::size_t;

/// A modular architecture of `n_cores` cores holding `capacity` qubits each.
/// Cores are all-to-all connected internally and with one another.
struct Architecture {
  std::size_t n_cores = 1;
  std::size_t capacity = 1;

  std::size_t total_slots() const { return n_cores * capacity; }
  bool fits(std::size_t num_qubits) const { return num_qubits <= total_slots(); }

  /// Throws std::invalid_argument when either dimension is zero.
  void validate() const {
    if (n_cores == 0) throw std::invalid_argument("architecture needs at least one core");
    if (capacity == 0) throw std::invalid_argument("core capacity must be positive");
  }

  friend bool operator==(const Architecture &, const Architecture &) = default;
};

/// Qubit-to-core map for one timeslice.
struct Assignment {
  std::vector<Core> core_of;

  std::size_t num_qubits() const { return core_of.size(); }
  Core operator[](Qubit q) const { return core_of[q]; }
  Core &operator[](Qubit q) { return core_of[q]; }

  /// Number of qubits resident in each core; cores beyond `n_cores` are
  /// ignored.
  std::vector<std::size_t> occupancy(std::size_t n_cores) const {
    std::vector<std::size_t> count(n_cores, 0);
    for (Core c : core_of) {
      if (c < n_cores) ++count[c];
    }
    return count;
  }

  friend bool operator==(const Assignment &, const Assignment &) = default;
};

/// One assignment per timeslice, aligned with a TimeslicedCircuit, plus the
/// placement the mapper started from. Moves out of `initial` into slice 0
/// are communications like any other.
struct AssignmentSequence {
  std::optional<Assignment> initial;
  std::vector<Assignment> per_slice;

  std::size_t size() const { return per_slice.size(); }
  bool empty() const { return per_slice.empty(); }
  const Assignment &operator[](std::size_t t) const { return per_slice[t]; }

  friend bool operator==(const AssignmentSequence &, const AssignmentSequence &) = default;
};

}  // namespace qcmap
