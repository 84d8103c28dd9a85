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

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcmap/architecture.hpp"
#include "qcmap/benchgen.hpp"
#include "qcmap/circuit.hpp"
#include "qcmap/partition.hpp"

namespace qcmap {

class MappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MappingResult {
  AssignmentSequence sequence;
  std::size_t nonlocal_comms = 0;
  double wall_time_s = 0.0;
  std::string algorithm;
  Seed seed = 0;
  /// Slices where the primary strategy failed and a fallback placement was
  /// used (Naive repair for FGP-rOEE, repacking for HQA).
  std::size_t repairs = 0;
};

/// True iff no core exceeds its capacity and every two-qubit gate of the
/// slice has both operands in the same core.
bool is_valid(const Timeslice &slice, const Assignment &a, const Architecture &arch);

/// Number of qubits whose core differs between consecutive assignments.
/// Throws std::invalid_argument if assignment widths differ.
std::size_t count_comms(const AssignmentSequence &seq);

/// Throws MappingError unless the architecture holds every qubit and every
/// slice's interacting pairs fit (at most floor(capacity / 2) per core).
void check_mappable(const TimeslicedCircuit &tsc, const Architecture &arch);

/// Splits every slice holding more interacting pairs than the architecture
/// can co-locate at once into consecutive sub-slices, keeping gate order.
/// Slices are renumbered. Throws MappingError if a core holds fewer than two
/// qubits while the circuit has two-qubit gates.
TimeslicedCircuit fit_to_architecture(const TimeslicedCircuit &tsc, const Architecture &arch);

enum class InitialPlacement { Random, Oee };

/// Initial qubit-to-core map. Random: uniform balanced placement over all
/// physical slots. Oee: OEE refinement of the aggregate interaction graph
/// starting from that random placement. Idle slots behave as qubits without
/// interactions.
Assignment initial_assignment(const TimeslicedCircuit &tsc, const Architecture &arch,
                              InitialPlacement placement, Seed seed);

/// Naive mapper: each unfeasible gate pulls its second operand into the first
/// operand's core, sending a random resident of that core the other way.
MappingResult map_naive(const TimeslicedCircuit &tsc, const Architecture &arch, Seed seed);

struct FgpOptions {
  std::size_t lookahead = kDefaultLookahead;
  std::size_t max_rounds = kDefaultMaxRounds;
  Seed seed = 0;
};

/// Fine-grained partitioning: rOEE over the look-ahead graph of every slice,
/// seeded with the previous slice's partition.
MappingResult map_fgp_roee(const TimeslicedCircuit &tsc, const Architecture &arch,
                           const FgpOptions &options = {});

struct HqaOptions {
  bool use_attraction = true;
  InitialPlacement initial = InitialPlacement::Oee;
  std::size_t lookahead = kDefaultLookahead;
  Seed seed = 0;
};

/// Hungarian Qubit Assignment: assigns unfeasible operations (not qubits) to
/// cores by repeated minimum-cost linear assignment.
MappingResult map_hqa(const TimeslicedCircuit &tsc, const Architecture &arch,
                      const HqaOptions &options = {});

/// Sum of look-ahead weights between `q` and the residents of `core`.
/// Qubits whose entry in `a` is not a valid core are not resident anywhere.
double qubit_attraction(Qubit q, Core core, const InteractionGraph &graph, const Assignment &a);

/// Mean attraction of the two operands of `op` toward `core` (unnormalised).
double hqa_attraction(const std::array<Qubit, 2> &op, Core core, const InteractionGraph &graph,
                      const Assignment &a);

enum class Algorithm { Naive, FgpRoee, Hqa, HqaNoAttraction, HqaRandomInit };

std::string_view algorithm_name(Algorithm algo);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// Dispatches to the mapper with the default options of each variant.
MappingResult run_mapper(Algorithm algo, const TimeslicedCircuit &tsc, const Architecture &arch,
                         Seed seed, std::size_t lookahead = kDefaultLookahead);

}  // namespace qcmap
