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

#include "qcmap/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcmap {

namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool param;
};

constexpr std::array<GateInfo, 17> kGateTable = {{
    {GateKind::H, "h", 1, false},
    {GateKind::X, "x", 1, false},
    {GateKind::Y, "y", 1, false},
    {GateKind::Z, "z", 1, false},
    {GateKind::S, "s", 1, false},
    {GateKind::Sdg, "sdg", 1, false},
    {GateKind::T, "t", 1, false},
    {GateKind::Tdg, "tdg", 1, false},
    {GateKind::RX, "rx", 1, true},
    {GateKind::RY, "ry", 1, true},
    {GateKind::RZ, "rz", 1, true},
    {GateKind::U1, "u1", 1, true},
    {GateKind::CX, "cx", 2, false},
    {GateKind::CZ, "cz", 2, false},
    {GateKind::Swap, "swap", 2, false},
    {GateKind::CP, "cp", 2, true},
    {GateKind::CU1, "cu1", 2, true},
}};

const GateInfo &info(GateKind kind) {
  return kGateTable[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto &g : kGateTable) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

int gate_arity(GateKind kind) { return info(kind).arity; }

bool gate_takes_param(GateKind kind) { return info(kind).param; }

Gate Gate::single(GateKind kind, Qubit q, std::optional<double> param) {
  if (gate_arity(kind) != 1) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " is not a one-qubit gate");
  }
  return Gate{kind, {q, 0}, param};
}

Gate Gate::pair(GateKind kind, Qubit a, Qubit b, std::optional<double> param) {
  if (gate_arity(kind) != 2) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " is not a two-qubit gate");
  }
  return Gate{kind, {a, b}, param};
}

bool Gate::touches(Qubit q) const {
  return qubits[0] == q || (is_two_qubit() && qubits[1] == q);
}

std::string Gate::to_string() const {
  std::ostringstream out;
  out << gate_name(kind);
  if (param) out << '(' << *param << ')';
  out << ' ' << qubits[0];
  if (is_two_qubit()) out << ',' << qubits[1];
  return out.str();
}

void Circuit::add(const Gate &gate) {
  for (Qubit q : gate.operands()) {
    if (q >= num_qubits_) {
      throw std::invalid_argument("gate " + gate.to_string() + " references qubit " +
                                  std::to_string(q) + " but circuit has " +
                                  std::to_string(num_qubits_) + " qubits");
    }
  }
  if (gate.is_two_qubit() && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("gate " + gate.to_string() + " repeats a qubit");
  }
  if (gate.param.has_value() != gate_takes_param(gate.kind)) {
    throw std::invalid_argument("gate " + gate.to_string() +
                                (gate.param ? " does not take a parameter" : " requires a parameter"));
  }
  Gate stored = gate;
  if (!stored.is_two_qubit()) stored.qubits[1] = 0;
  gates_.push_back(stored);
}

void Circuit::add_barrier() {
  if (barriers_.empty() || barriers_.back() != gates_.size()) {
    barriers_.push_back(gates_.size());
  }
}

void Circuit::append_toffoli(Qubit a, Qubit b, Qubit c) {
  using K = GateKind;
  add(Gate::single(K::H, c));
  add(Gate::pair(K::CX, b, c));
  add(Gate::single(K::Tdg, c));
  add(Gate::pair(K::CX, a, c));
  add(Gate::single(K::T, c));
  add(Gate::pair(K::CX, b, c));
  add(Gate::single(K::Tdg, c));
  add(Gate::pair(K::CX, a, c));
  add(Gate::single(K::T, b));
  add(Gate::single(K::T, c));
  add(Gate::single(K::H, c));
  add(Gate::pair(K::CX, a, b));
  add(Gate::single(K::T, a));
  add(Gate::single(K::Tdg, b));
  add(Gate::pair(K::CX, a, b));
}

std::size_t Circuit::two_qubit_gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.is_two_qubit(); }));
}

std::size_t TimeslicedCircuit::num_gates() const {
  std::size_t n = 0;
  for (const auto &s : slices) n += s.gates.size();
  return n;
}

std::vector<std::array<Qubit, 2>> TimeslicedCircuit::interactions(std::size_t t) const {
  std::vector<std::array<Qubit, 2>> out;
  for (const auto &g : slices.at(t).gates) {
    if (g.is_two_qubit()) out.push_back(g.qubits);
  }
  return out;
}

InteractionGraph::InteractionGraph(std::size_t num_nodes)
    : n_(num_nodes), weights_(num_nodes * num_nodes, 0.0), partner_(num_nodes, kNoPartner) {}

void InteractionGraph::add_weight(Qubit i, Qubit j, double w) {
  if (i == j) throw std::invalid_argument("interaction graph has no self-edges");
  weights_[i * n_ + j] += w;
  weights_[j * n_ + i] += w;
}

void InteractionGraph::set_weight(Qubit i, Qubit j, double w) {
  if (i == j) throw std::invalid_argument("interaction graph has no self-edges");
  weights_[i * n_ + j] = w;
  weights_[j * n_ + i] = w;
}

void InteractionGraph::mark_must_join(Qubit i, Qubit j) {
  if (i == j) throw std::invalid_argument("interaction graph has no self-edges");
  if (partner_[i] == j) return;
  if (partner_[i] != kNoPartner || partner_[j] != kNoPartner) {
    throw std::invalid_argument("must-join pairs must form a matching");
  }
  partner_[i] = j;
  partner_[j] = i;
}

bool InteractionGraph::has_must_join() const {
  return std::any_of(partner_.begin(), partner_.end(),
                     [](std::size_t p) { return p != kNoPartner; });
}

double InteractionGraph::max_weight() const {
  double m = 0.0;
  for (double w : weights_) m = std::max(m, w);
  return m;
}

InteractionGraph InteractionGraph::padded(std::size_t num_nodes) const {
  if (num_nodes < n_) throw std::invalid_argument("cannot shrink an interaction graph");
  InteractionGraph out(num_nodes);
  for (std::size_t i = 0; i < n_; ++i) {
    std::copy_n(weights_.begin() + static_cast<std::ptrdiff_t>(i * n_), n_,
                out.weights_.begin() + static_cast<std::ptrdiff_t>(i * num_nodes));
    out.partner_[i] = partner_[i];
  }
  return out;
}

TimeslicedCircuit slice_circuit(const Circuit &circuit) {
  TimeslicedCircuit out;
  out.num_qubits = circuit.num_qubits();

  // next_free[q]: earliest slice the next gate on q may occupy.
  std::vector<std::size_t> next_free(circuit.num_qubits(), 0);
  std::size_t floor = 0;
  auto barrier = circuit.barriers().begin();
  const auto &gates = circuit.gates();

  for (std::size_t i = 0; i < gates.size(); ++i) {
    while (barrier != circuit.barriers().end() && *barrier <= i) {
      floor = out.slices.size();
      ++barrier;
    }
    std::size_t slot = floor;
    for (Qubit q : gates[i].operands()) slot = std::max(slot, next_free[q]);
    if (slot == out.slices.size()) out.slices.push_back(Timeslice{slot, {}});
    out.slices[slot].gates.push_back(gates[i]);
    for (Qubit q : gates[i].operands()) next_free[q] = slot + 1;
  }
  return out;
}

InteractionGraph lookahead_weights(const TimeslicedCircuit &tsc, std::size_t t,
                                   std::size_t horizon) {
  if (t >= tsc.num_slices()) {
    throw std::out_of_range("slice index " + std::to_string(t) + " out of range (" +
                            std::to_string(tsc.num_slices()) + " slices)");
  }
  InteractionGraph graph(tsc.num_qubits);
  for (const auto &g : tsc.slices[t].gates) {
    if (g.is_two_qubit()) graph.mark_must_join(g.qubits[0], g.qubits[1]);
  }
  const std::size_t last = std::min(tsc.num_slices() - 1, t + horizon);
  for (std::size_t m = t + 1; m <= last; ++m) {
    const double decay = std::ldexp(1.0, -static_cast<int>(m - t));
    for (const auto &g : tsc.slices[m].gates) {
      if (g.is_two_qubit()) graph.add_weight(g.qubits[0], g.qubits[1], decay);
    }
  }
  return graph;
}

InteractionGraph aggregate_interactions(const TimeslicedCircuit &tsc) {
  InteractionGraph graph(tsc.num_qubits);
  for (const auto &slice : tsc.slices) {
    for (const auto &g : slice.gates) {
      if (g.is_two_qubit()) graph.add_weight(g.qubits[0], g.qubits[1], 1.0);
    }
  }
  return graph;
}

double two_qubit_gate_fraction(const Circuit &circuit) {
  if (circuit.empty()) {
    throw std::invalid_argument("two-qubit gate fraction of an empty circuit is undefined");
  }
  return static_cast<double>(circuit.two_qubit_gate_count()) /
         static_cast<double>(circuit.size());
}

}  // namespace qcmap
