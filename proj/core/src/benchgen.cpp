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

#include "qcmap/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "random.hpp"

namespace qcmap {

namespace {

using K = GateKind;

void check_fraction(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("two-qubit fraction must lie in [0, 1]");
}

std::vector<Qubit> iota_qubits(std::size_t q) {
  std::vector<Qubit> v(q);
  std::iota(v.begin(), v.end(), Qubit{0});
  return v;
}

void append_qft(Circuit &c, const std::vector<Qubit> &reg) {
  const std::size_t n = reg.size();
  for (std::size_t i = 0; i < n; ++i) {
    c.add(Gate::single(K::H, reg[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      c.add(Gate::pair(K::CP, reg[j], reg[i], std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - i))));
    }
  }
}

void append_inverse_qft(Circuit &c, const std::vector<Qubit> &reg) {
  const std::size_t n = reg.size();
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j-- > i + 1;) {
      c.add(Gate::pair(K::CP, reg[j], reg[i], -std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - i))));
    }
    c.add(Gate::single(K::H, reg[i]));
  }
}

// MAJ and UMA blocks of the ripple-carry adder.
void maj(Circuit &c, Qubit carry, Qubit b, Qubit a) {
  c.add(Gate::pair(K::CX, a, b));
  c.add(Gate::pair(K::CX, a, carry));
  c.append_toffoli(carry, b, a);
}

void uma(Circuit &c, Qubit carry, Qubit b, Qubit a) {
  c.append_toffoli(carry, b, a);
  c.add(Gate::pair(K::CX, a, carry));
  c.add(Gate::pair(K::CX, carry, b));
}

Circuit widen(const Circuit &src, std::size_t q) {
  Circuit out(q);
  for (const Gate &g : src.gates()) out.add(g);
  return out;
}

}  // namespace

Circuit random_qgf(std::size_t q, std::size_t g, double f, Seed seed) {
  check_fraction(f);
  if (q < 2 && f > 0.0) throw std::invalid_argument("two-qubit gates need at least 2 qubits");
  if (q == 0 && g > 0) throw std::invalid_argument("cannot place gates on zero qubits");
  detail::Rng rng(seed);
  Circuit c(q);
  for (std::size_t i = 0; i < g; ++i) {
    if (f > 0.0 && rng.chance(f)) {
      const Qubit a = rng.below(q);
      Qubit b = rng.below(q - 1);
      if (b >= a) ++b;
      c.add(Gate::pair(K::CX, std::min(a, b), std::max(a, b)));
    } else {
      c.add(Gate::single(K::H, rng.below(q)));
    }
  }
  return c;
}

Circuit random_by_depth(std::size_t q, std::size_t depth, Seed seed, double f) {
  check_fraction(f);
  if (q < 2) throw std::invalid_argument("random_by_depth needs at least 2 qubits");
  detail::Rng rng(seed);
  Circuit c(q);
  std::vector<Qubit> perm = iota_qubits(q);
  for (std::size_t layer = 0; layer < depth; ++layer) {
    rng.shuffle(std::span<Qubit>(perm));
    for (std::size_t k = 0; k + 1 < q; k += 2) {
      if (rng.chance(f)) {
        c.add(Gate::pair(K::CX, perm[k], perm[k + 1]));
      } else {
        c.add(Gate::single(K::H, perm[k]));
        c.add(Gate::single(K::H, perm[k + 1]));
      }
    }
    if (q % 2 == 1) c.add(Gate::single(K::H, perm[q - 1]));
  }
  return c;
}

Circuit qft(std::size_t q) {
  Circuit c(q);
  append_qft(c, iota_qubits(q));
  return c;
}

Circuit cuccaro_adder(std::size_t n) {
  if (n < 1) throw std::invalid_argument("adder needs at least one operand bit");
  Circuit c(2 * n + 2);
  const Qubit carry_in = 0;
  const Qubit carry_out = 2 * n + 1;
  auto a = [](std::size_t i) { return Qubit{1 + i}; };
  auto b = [n](std::size_t i) { return Qubit{1 + n + i}; };

  maj(c, carry_in, b(0), a(0));
  for (std::size_t i = 1; i < n; ++i) maj(c, a(i - 1), b(i), a(i));
  c.add(Gate::pair(K::CX, a(n - 1), carry_out));
  for (std::size_t i = n - 1; i >= 1; --i) uma(c, a(i - 1), b(i), a(i));
  uma(c, carry_in, b(0), a(0));
  return c;
}

Circuit draper_adder(std::size_t n) {
  if (n < 1) throw std::invalid_argument("adder needs at least one operand bit");
  Circuit c(2 * n);
  std::vector<Qubit> b_reg(n);
  std::iota(b_reg.begin(), b_reg.end(), Qubit{n});

  append_qft(c, b_reg);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; j + k < n; ++k) {
      c.add(Gate::pair(K::CP, Qubit{j}, b_reg[j + k], std::numbers::pi / std::ldexp(1.0, static_cast<int>(k))));
    }
  }
  append_inverse_qft(c, b_reg);
  return c;
}

Circuit quantum_volume(std::size_t q, Seed seed) {
  detail::Rng rng(seed);
  Circuit c(q);
  std::vector<Qubit> perm = iota_qubits(q);
  auto angle = [&rng] { return 2.0 * std::numbers::pi * rng.unit(); };
  for (std::size_t layer = 0; layer < q; ++layer) {
    rng.shuffle(std::span<Qubit>(perm));
    for (std::size_t k = 0; k + 1 < q; k += 2) {
      const Qubit a = perm[k];
      const Qubit b = perm[k + 1];
      c.add(Gate::single(K::RZ, a, angle()));
      c.add(Gate::single(K::RY, b, angle()));
      c.add(Gate::pair(K::CX, a, b));
      c.add(Gate::single(K::RY, a, angle()));
      c.add(Gate::single(K::RZ, b, angle()));
      c.add(Gate::pair(K::CX, b, a));
      c.add(Gate::single(K::RY, a, angle()));
      c.add(Gate::pair(K::CX, a, b));
      c.add(Gate::single(K::RZ, a, angle()));
      c.add(Gate::single(K::RY, b, angle()));
    }
  }
  return c;
}

std::string_view benchmark_name(BenchmarkKind kind) {
  switch (kind) {
    case BenchmarkKind::Qft:
      return "qft";
    case BenchmarkKind::Draper:
      return "draper";
    case BenchmarkKind::Cuccaro:
      return "cuccaro";
    case BenchmarkKind::Random:
      return "random";
    case BenchmarkKind::QuantumVolume:
      return "qv";
    case BenchmarkKind::RandomQgf:
      return "qgf";
  }
  return "?";
}

std::optional<BenchmarkKind> benchmark_from_name(std::string_view name) {
  for (auto kind : {BenchmarkKind::Qft, BenchmarkKind::Draper, BenchmarkKind::Cuccaro,
                    BenchmarkKind::Random, BenchmarkKind::QuantumVolume, BenchmarkKind::RandomQgf}) {
    if (benchmark_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Circuit make_benchmark(BenchmarkKind kind, std::size_t q, Seed seed, const BenchmarkParams &params) {
  switch (kind) {
    case BenchmarkKind::Qft:
      return qft(q);
    case BenchmarkKind::Draper:
      if (q < 2) throw std::invalid_argument("draper adder needs at least 2 qubits");
      return widen(draper_adder(q / 2), q);
    case BenchmarkKind::Cuccaro:
      if (q < 4) throw std::invalid_argument("cuccaro adder needs at least 4 qubits");
      return widen(cuccaro_adder((q - 2) / 2), q);
    case BenchmarkKind::Random:
      return random_by_depth(q, params.depth_factor * q, seed, params.two_qubit_fraction);
    case BenchmarkKind::QuantumVolume:
      return quantum_volume(q, seed);
    case BenchmarkKind::RandomQgf:
      return random_qgf(q, params.gates, params.two_qubit_fraction, seed);
  }
  throw std::invalid_argument("unknown benchmark kind");
}

}  // namespace qcmap
