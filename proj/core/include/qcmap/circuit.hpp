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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcmap {

using Qubit = std::size_t;

enum class GateKind {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  RX,
  RY,
  RZ,
  U1,
  CX,
  CZ,
  Swap,
  CP,
  CU1,
};

/// Lower-case OpenQASM 2 mnemonic ("h", "cx", "cu1", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
int gate_arity(GateKind kind);
bool gate_takes_param(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  std::array<Qubit, 2> qubits{};
  std::optional<double> param;

  static Gate single(GateKind kind, Qubit q, std::optional<double> param = {});
  static Gate pair(GateKind kind, Qubit a, Qubit b, std::optional<double> param = {});

  int arity() const { return gate_arity(kind); }
  bool is_two_qubit() const { return arity() == 2; }
  std::span<const Qubit> operands() const {
    return {qubits.data(), static_cast<std::size_t>(arity())};
  }
  bool touches(Qubit q) const;

  std::string to_string() const;

  friend bool operator==(const Gate &, const Gate &) = default;
};

/// An ordered gate list over `num_qubits` virtual qubits.
///
/// Barriers are stored as gate positions: a barrier at position p means every
/// gate with index >= p must be scheduled strictly after every gate with index
/// < p. Consecutive duplicate barriers collapse into one.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  const std::vector<std::size_t> &barriers() const { return barriers_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws std::invalid_argument if the gate references qubits out of range,
  /// repeats a qubit, or carries a parameter its kind does not accept.
  void add(const Gate &gate);
  void add_barrier();

  /// Appends the standard 15-gate Toffoli decomposition (6 CX + 9 one-qubit).
  void append_toffoli(Qubit control_a, Qubit control_b, Qubit target);

  std::size_t two_qubit_gate_count() const;

  friend bool operator==(const Circuit &, const Circuit &) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::size_t> barriers_;
};

struct Timeslice {
  std::size_t index = 0;
  std::vector<Gate> gates;
};

struct TimeslicedCircuit {
  std::size_t num_qubits = 0;
  std::vector<Timeslice> slices;

  std::size_t num_slices() const { return slices.size(); }
  std::size_t num_gates() const;
  /// Operand pairs of the two-qubit gates of slice `t`, in gate order.
  std::vector<std::array<Qubit, 2>> interactions(std::size_t t) const;
};

/// Weighted qubit interaction graph with a distinguished must-join matching.
///
/// Weights are stored densely; `must_join` pairs are tracked separately so
/// that no infinity ever enters weight arithmetic.
class InteractionGraph {
 public:
  static constexpr std::size_t kNoPartner = static_cast<std::size_t>(-1);

  InteractionGraph() = default;
  explicit InteractionGraph(std::size_t num_nodes);

  std::size_t num_nodes() const { return n_; }

  double weight(Qubit i, Qubit j) const { return weights_[i * n_ + j]; }
  void add_weight(Qubit i, Qubit j, double w);
  void set_weight(Qubit i, Qubit j, double w);

  /// Throws std::invalid_argument if either endpoint already has a partner.
  void mark_must_join(Qubit i, Qubit j);
  bool must_join(Qubit i, Qubit j) const { return i != j && partner_[i] == j; }
  std::size_t partner(Qubit i) const { return partner_[i]; }
  bool has_must_join() const;

  double max_weight() const;
  /// Returns a copy grown to `num_nodes` with isolated extra nodes.
  InteractionGraph padded(std::size_t num_nodes) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> weights_;
  std::vector<std::size_t> partner_;
};

inline constexpr std::size_t kDefaultLookahead = 20;

/// Greedy as-soon-as-possible layering honouring program order and barriers.
TimeslicedCircuit slice_circuit(const Circuit &circuit);

/// Exponentially decayed future-interaction weights seen from slice `t`;
/// pairs interacting at `t` itself are marked must-join.
InteractionGraph lookahead_weights(const TimeslicedCircuit &tsc, std::size_t t,
                                   std::size_t horizon = kDefaultLookahead);

/// Total pairwise two-qubit interaction counts over the whole circuit.
InteractionGraph aggregate_interactions(const TimeslicedCircuit &tsc);

/// Fraction of gates acting on two qubits. Throws on an empty circuit.
double two_qubit_gate_fraction(const Circuit &circuit);

}  // namespace qcmap
