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

#include "qcmap/mappers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qcmap/assignment.hpp"
#include "random.hpp"

namespace qcmap {

namespace {

constexpr Core kUnplaced = std::numeric_limits<Core>::max();

using Clock = std::chrono::steady_clock;
using Pair = std::array<Qubit, 2>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Copies the first `q` entries of a slot-level map.
Assignment real_part(const std::vector<Core> &core_of, std::size_t q) {
  return Assignment{std::vector<Core>(core_of.begin(), core_of.begin() + static_cast<std::ptrdiff_t>(q))};
}

// Applies the Naive procedure to one slice over all physical slots
// (`core_of` has one entry per slot; entries past the real qubits are idle
// slots). Qubits of already-processed gates are never picked as the qubit
// that makes room, so the slice ends up valid.
void naive_slice(const std::vector<Pair> &pairs, std::vector<Core> &core_of, const Architecture &arch,
                 detail::Rng &rng) {
  const std::size_t slots = core_of.size();
  std::vector<char> locked(slots, 0);
  std::vector<Qubit> pool;

  auto gather = [&](Core c, Qubit exclude) {
    pool.clear();
    for (Qubit x = 0; x < slots; ++x) {
      if (core_of[x] == c && x != exclude && !locked[x]) pool.push_back(x);
    }
  };

  for (const auto &[a, b] : pairs) {
    if (core_of[a] != core_of[b]) {
      gather(core_of[a], a);
      if (!pool.empty()) {
        const Qubit aux = pool[rng.below(pool.size())];
        core_of[aux] = core_of[b];
        core_of[b] = core_of[a];
      } else {
        gather(core_of[b], b);
        if (!pool.empty()) {
          const Qubit aux = pool[rng.below(pool.size())];
          core_of[aux] = core_of[a];
          core_of[a] = core_of[b];
        } else {
          // Both cores are packed with settled pairs (odd capacity): move the
          // pair into the first core with two unsettled residents.
          bool placed = false;
          for (Core c = 0; c < arch.n_cores && !placed; ++c) {
            if (c == core_of[a] || c == core_of[b]) continue;
            gather(c, kUnplaced);
            if (pool.size() < 2) continue;
            const std::size_t i = rng.below(pool.size());
            std::size_t j = rng.below(pool.size() - 1);
            if (j >= i) ++j;
            core_of[pool[i]] = core_of[a];
            core_of[pool[j]] = core_of[b];
            core_of[a] = core_of[b] = c;
            placed = true;
          }
          if (!placed) throw MappingError("naive mapping found no core with room for a pair");
        }
      }
    }
    locked[a] = locked[b] = 1;
  }
}

std::vector<Core> initial_slots(const TimeslicedCircuit &tsc, const Architecture &arch,
                                InitialPlacement placement, Seed seed) {
  const std::size_t slots = arch.total_slots();
  Partition start = Partition::random(slots, arch.n_cores, seed);
  if (placement == InitialPlacement::Oee && arch.n_cores > 1) {
    start = oee_partition(aggregate_interactions(tsc).padded(slots), start);
  }
  return start.block_of;
}

// Per-slice view used by HQA.
struct SliceInfo {
  std::vector<Pair> pairs;
  std::vector<char> touched;      // any gate of the slice acts on the qubit
  std::vector<char> interacting;  // a two-qubit gate of the slice acts on it
};

SliceInfo describe_slice(const Timeslice &slice, std::size_t q) {
  SliceInfo info;
  info.touched.assign(q, 0);
  info.interacting.assign(q, 0);
  for (const Gate &g : slice.gates) {
    for (Qubit x : g.operands()) info.touched[x] = 1;
    if (g.is_two_qubit()) {
      info.pairs.push_back(g.qubits);
      info.interacting[g.qubits[0]] = info.interacting[g.qubits[1]] = 1;
    }
  }
  return info;
}

class HqaSlice {
 public:
  HqaSlice(const SliceInfo &info, std::vector<Core> &core_of, const Architecture &arch,
           const InteractionGraph *graph, std::size_t slice_index)
      : info_(info), core_of_(core_of), arch_(arch), graph_(graph), slice_(slice_index) {}

  // Returns true when the slice needed the repack fallback.
  bool run() {
    for (const Pair &p : info_.pairs) {
      if (core_of_[p[0]] != core_of_[p[1]]) ops_.push_back(p);
    }
    if (ops_.empty()) return false;

    before_ = core_of_;
    for (const Pair &p : ops_) core_of_[p[0]] = core_of_[p[1]] = kUnplaced;
    free_.assign(arch_.n_cores, arch_.capacity);
    for (Core c : core_of_) {
      if (c != kUnplaced) --free_[c];
    }

    fix_parity();
    bool repacked = false;
    while (!ops_.empty()) {
      if (assign_round()) continue;
      if (make_room()) continue;
      repack();
      repacked = true;
    }
    return repacked;
  }

 private:
  // Pairs cores with an odd number of free slots through pseudo-operations
  // on idle residents, until the free slots can hold every operation.
  void fix_parity() {
    std::size_t capacity_in_pairs = 0;
    for (std::size_t f : free_) capacity_in_pairs += f / 2;
    if (capacity_in_pairs >= ops_.size()) return;
    std::size_t deficit = ops_.size() - capacity_in_pairs;

    std::vector<std::pair<Core, Qubit>> odd;
    for (Core c = 0; c < arch_.n_cores; ++c) {
      if (free_[c] % 2 == 0) continue;
      if (auto r = idle_resident(c)) odd.emplace_back(c, *r);
    }
    for (std::size_t i = 0; i + 1 < odd.size() && deficit > 0; i += 2, --deficit) {
      const auto [c1, r1] = odd[i];
      const auto [c2, r2] = odd[i + 1];
      core_of_[r1] = core_of_[r2] = kUnplaced;
      ++free_[c1];
      ++free_[c2];
      ops_.push_back({r1, r2});
    }
  }

  // Lowest-index resident of `c` untouched by the slice; failing that, the
  // lowest-index resident outside any two-qubit gate of the slice.
  std::optional<Qubit> idle_resident(Core c) const {
    std::optional<Qubit> fallback;
    for (Qubit x = 0; x < core_of_.size(); ++x) {
      if (core_of_[x] != c || info_.interacting[x]) continue;
      if (!info_.touched[x]) return x;
      if (!fallback) fallback = x;
    }
    return fallback;
  }

  bool assign_round() {
    std::vector<Core> open;
    for (Core c = 0; c < arch_.n_cores; ++c) {
      if (free_[c] >= 2) open.push_back(c);
    }
    if (open.empty()) return false;

    CostMatrix cost(ops_.size(), open.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const auto [a, b] = ops_[i];
      for (std::size_t j = 0; j < open.size(); ++j) {
        cost.at(i, j) = (before_[a] == open[j] || before_[b] == open[j]) ? 1.0 : 2.0;
      }
    }
    if (graph_ != nullptr) subtract_attraction(cost, open);

    const LinearAssignment solution = solve_assignment(cost);
    std::vector<Pair> remaining;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (!solution.col_of_row[i]) {
        remaining.push_back(ops_[i]);
        continue;
      }
      const Core c = open[*solution.col_of_row[i]];
      core_of_[ops_[i][0]] = core_of_[ops_[i][1]] = c;
      free_[c] -= 2;
    }
    ops_ = std::move(remaining);
    return true;
  }

  // Attraction is rescaled into [0, 0.99) so it can reorder, but never
  // overturn by a full unit, the communication-count base costs.
  void subtract_attraction(CostMatrix &cost, const std::vector<Core> &open) const {
    std::vector<double> pull(arch_.n_cores);
    std::vector<double> attraction(ops_.size() * open.size(), 0.0);
    double max_attraction = 0.0;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      std::fill(pull.begin(), pull.end(), 0.0);
      for (Qubit x : ops_[i]) {
        for (Qubit r = 0; r < core_of_.size(); ++r) {
          if (core_of_[r] != kUnplaced) pull[core_of_[r]] += graph_->weight(x, r);
        }
      }
      for (std::size_t j = 0; j < open.size(); ++j) {
        const double v = pull[open[j]] / 2.0;
        attraction[i * open.size() + j] = v;
        max_attraction = std::max(max_attraction, v);
      }
    }
    if (max_attraction <= 0.0) return;
    const double scale = 0.99 / (max_attraction + 1e-12);
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      for (std::size_t j = 0; j < open.size(); ++j) {
        cost.at(i, j) -= scale * attraction[i * open.size() + j];
      }
    }
  }

  // No core has two free slots: evict an idle resident from a core with one
  // free slot into another core with a free slot.
  bool make_room() {
    for (Core c1 = 0; c1 < arch_.n_cores; ++c1) {
      if (free_[c1] != 1) continue;
      const auto r = idle_resident(c1);
      if (!r) continue;
      for (Core c2 = 0; c2 < arch_.n_cores; ++c2) {
        if (c2 == c1 || free_[c2] == 0) continue;
        core_of_[*r] = c2;
        --free_[c2];
        ++free_[c1];
        return true;
      }
    }
    return false;
  }

  // Last resort for odd capacities, where single free slots can be stranded
  // next to co-located pairs: place every pair of the slice first (keeping
  // co-located pairs where they are), then fill the remaining slots with the
  // other qubits, keeping them in place where room allows.
  void repack() {
    const std::size_t q = core_of_.size();
    std::vector<std::size_t> pair_room(arch_.n_cores, arch_.capacity / 2);
    std::vector<Core> next(q, kUnplaced);

    std::vector<Pair> pending;
    for (const Pair &p : info_.pairs) {
      const Core c = core_of_[p[0]];
      if (c != kUnplaced && c == core_of_[p[1]] && pair_room[c] > 0) {
        next[p[0]] = next[p[1]] = c;
        --pair_room[c];
      } else {
        pending.push_back(p);
      }
    }
    for (const Pair &p : pending) {
      Core target = kUnplaced;
      for (Qubit x : p) {
        const Core home = core_of_[x] != kUnplaced ? core_of_[x] : before_[x];
        if (target == kUnplaced && pair_room[home] > 0) target = home;
      }
      for (Core c = 0; c < arch_.n_cores && target == kUnplaced; ++c) {
        if (pair_room[c] > 0) target = c;
      }
      if (target == kUnplaced) {
        throw MappingError("HQA could not place all operations of slice " + std::to_string(slice_));
      }
      next[p[0]] = next[p[1]] = target;
      --pair_room[target];
    }

    std::vector<std::size_t> room(arch_.n_cores, arch_.capacity);
    for (Qubit x = 0; x < q; ++x) {
      if (next[x] != kUnplaced) --room[next[x]];
    }
    std::vector<Qubit> homeless;
    for (Qubit x = 0; x < q; ++x) {
      if (next[x] != kUnplaced) continue;
      const Core home = core_of_[x] != kUnplaced ? core_of_[x] : before_[x];
      if (room[home] > 0) {
        next[x] = home;
        --room[home];
      } else {
        homeless.push_back(x);
      }
    }
    Core c = 0;
    for (Qubit x : homeless) {
      while (room[c] == 0) ++c;
      next[x] = c;
      --room[c];
    }
    core_of_ = std::move(next);
    ops_.clear();
  }

  const SliceInfo &info_;
  std::vector<Core> &core_of_;
  const Architecture &arch_;
  const InteractionGraph *graph_;
  std::size_t slice_;
  std::vector<Pair> ops_;
  std::vector<Core> before_;
  std::vector<std::size_t> free_;
};

}  // namespace

bool is_valid(const Timeslice &slice, const Assignment &a, const Architecture &arch) {
  std::vector<std::size_t> count(arch.n_cores, 0);
  for (Core c : a.core_of) {
    if (c >= arch.n_cores) return false;
    if (++count[c] > arch.capacity) return false;
  }
  for (const Gate &g : slice.gates) {
    for (Qubit q : g.operands()) {
      if (q >= a.num_qubits()) return false;
    }
    if (g.is_two_qubit() && a[g.qubits[0]] != a[g.qubits[1]]) return false;
  }
  return true;
}

std::size_t count_comms(const AssignmentSequence &seq) {
  std::size_t comms = 0;
  auto diff = [&comms](const Assignment &prev, const Assignment &cur, const std::string &what) {
    if (prev.num_qubits() != cur.num_qubits()) throw std::invalid_argument(what + " differ in width");
    for (Qubit q = 0; q < cur.num_qubits(); ++q) comms += prev[q] != cur[q];
  };
  if (seq.initial && !seq.empty()) diff(*seq.initial, seq[0], "initial assignment and slice 0");
  for (std::size_t t = 1; t < seq.size(); ++t) {
    diff(seq[t - 1], seq[t], "assignments of slices " + std::to_string(t - 1) + " and " + std::to_string(t));
  }
  return comms;
}

void check_mappable(const TimeslicedCircuit &tsc, const Architecture &arch) {
  try {
    arch.validate();
  } catch (const std::invalid_argument &e) {
    throw MappingError(e.what());
  }
  if (!arch.fits(tsc.num_qubits)) {
    throw MappingError("architecture with " + std::to_string(arch.total_slots()) + " slots cannot hold " +
                       std::to_string(tsc.num_qubits) + " qubits");
  }
  const std::size_t max_pairs = arch.n_cores * (arch.capacity / 2);
  for (const auto &slice : tsc.slices) {
    const auto pairs = static_cast<std::size_t>(std::count_if(
        slice.gates.begin(), slice.gates.end(), [](const Gate &g) { return g.is_two_qubit(); }));
    if (pairs > max_pairs) {
      throw MappingError("slice " + std::to_string(slice.index) + " has " + std::to_string(pairs) +
                         " interacting pairs but the architecture fits at most " + std::to_string(max_pairs));
    }
  }
}

TimeslicedCircuit fit_to_architecture(const TimeslicedCircuit &tsc, const Architecture &arch) {
  try {
    arch.validate();
  } catch (const std::invalid_argument &e) {
    throw MappingError(e.what());
  }
  const std::size_t max_pairs = arch.n_cores * (arch.capacity / 2);
  TimeslicedCircuit out;
  out.num_qubits = tsc.num_qubits;
  for (const auto &slice : tsc.slices) {
    Timeslice current{out.slices.size(), {}};
    std::size_t pairs = 0;
    for (const Gate &g : slice.gates) {
      if (g.is_two_qubit()) {
        if (max_pairs == 0) throw MappingError("cores of capacity 1 cannot host two-qubit gates");
        if (pairs == max_pairs) {
          out.slices.push_back(std::move(current));
          current = Timeslice{out.slices.size(), {}};
          pairs = 0;
        }
        ++pairs;
      }
      current.gates.push_back(g);
    }
    out.slices.push_back(std::move(current));
  }
  return out;
}

Assignment initial_assignment(const TimeslicedCircuit &tsc, const Architecture &arch,
                              InitialPlacement placement, Seed seed) {
  check_mappable(tsc, arch);
  return real_part(initial_slots(tsc, arch, placement, seed), tsc.num_qubits);
}

MappingResult map_naive(const TimeslicedCircuit &tsc, const Architecture &arch, Seed seed) {
  check_mappable(tsc, arch);
  const auto start = Clock::now();
  MappingResult result;
  result.algorithm = "naive";
  result.seed = seed;

  detail::Rng rng(seed);
  std::vector<Core> core_of = Partition::random(arch.total_slots(), arch.n_cores, rng.next()).block_of;
  result.sequence.initial = real_part(core_of, tsc.num_qubits);
  for (std::size_t t = 0; t < tsc.num_slices(); ++t) {
    naive_slice(tsc.interactions(t), core_of, arch, rng);
    result.sequence.per_slice.push_back(real_part(core_of, tsc.num_qubits));
  }
  result.nonlocal_comms = count_comms(result.sequence);
  result.wall_time_s = seconds_since(start);
  return result;
}

MappingResult map_fgp_roee(const TimeslicedCircuit &tsc, const Architecture &arch, const FgpOptions &options) {
  check_mappable(tsc, arch);
  const auto start = Clock::now();
  MappingResult result;
  result.algorithm = "fgp-roee";
  result.seed = options.seed;

  const std::size_t slots = arch.total_slots();
  detail::Rng rng(options.seed);
  Partition current;
  current.k = arch.n_cores;
  current.block_size = arch.capacity;
  current.block_of = initial_slots(tsc, arch, InitialPlacement::Oee, rng.next());
  result.sequence.initial = real_part(current.block_of, tsc.num_qubits);

  for (std::size_t t = 0; t < tsc.num_slices(); ++t) {
    const InteractionGraph graph = lookahead_weights(tsc, t, options.lookahead).padded(slots);
    try {
      current = roee_partition(graph, current, options.max_rounds);
    } catch (const PartitionError &) {
      naive_slice(tsc.interactions(t), current.block_of, arch, rng);
      ++result.repairs;
    }
    result.sequence.per_slice.push_back(real_part(current.block_of, tsc.num_qubits));
  }
  result.nonlocal_comms = count_comms(result.sequence);
  result.wall_time_s = seconds_since(start);
  return result;
}

MappingResult map_hqa(const TimeslicedCircuit &tsc, const Architecture &arch, const HqaOptions &options) {
  check_mappable(tsc, arch);
  const auto start = Clock::now();
  MappingResult result;
  result.algorithm = options.use_attraction ? "hqa" : "hqa-noattr";
  if (options.initial == InitialPlacement::Random) result.algorithm += "-random-init";
  result.seed = options.seed;

  std::vector<Core> core_of = real_part(initial_slots(tsc, arch, options.initial, options.seed), tsc.num_qubits).core_of;
  result.sequence.initial = Assignment{core_of};
  for (std::size_t t = 0; t < tsc.num_slices(); ++t) {
    const SliceInfo info = describe_slice(tsc.slices[t], tsc.num_qubits);
    std::optional<InteractionGraph> graph;
    if (options.use_attraction) graph = lookahead_weights(tsc, t, options.lookahead);
    if (HqaSlice(info, core_of, arch, graph ? &*graph : nullptr, t).run()) ++result.repairs;
    result.sequence.per_slice.push_back(Assignment{core_of});
  }
  result.nonlocal_comms = count_comms(result.sequence);
  result.wall_time_s = seconds_since(start);
  return result;
}

double qubit_attraction(Qubit q, Core core, const InteractionGraph &graph, const Assignment &a) {
  double total = 0.0;
  for (Qubit r = 0; r < a.num_qubits(); ++r) {
    if (r != q && a[r] == core) total += graph.weight(q, r);
  }
  return total;
}

double hqa_attraction(const std::array<Qubit, 2> &op, Core core, const InteractionGraph &graph,
                      const Assignment &a) {
  return (qubit_attraction(op[0], core, graph, a) + qubit_attraction(op[1], core, graph, a)) / 2.0;
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Naive:
      return "naive";
    case Algorithm::FgpRoee:
      return "fgp-roee";
    case Algorithm::Hqa:
      return "hqa";
    case Algorithm::HqaNoAttraction:
      return "hqa-noattr";
    case Algorithm::HqaRandomInit:
      return "hqa-random-init";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (auto algo : {Algorithm::Naive, Algorithm::FgpRoee, Algorithm::Hqa, Algorithm::HqaNoAttraction,
                    Algorithm::HqaRandomInit}) {
    if (algorithm_name(algo) == name) return algo;
  }
  return std::nullopt;
}

MappingResult run_mapper(Algorithm algo, const TimeslicedCircuit &tsc, const Architecture &arch, Seed seed,
                         std::size_t lookahead) {
  MappingResult result;
  switch (algo) {
    case Algorithm::Naive:
      result = map_naive(tsc, arch, seed);
      break;
    case Algorithm::FgpRoee:
      result = map_fgp_roee(tsc, arch, FgpOptions{lookahead, kDefaultMaxRounds, seed});
      break;
    case Algorithm::Hqa:
      result = map_hqa(tsc, arch, HqaOptions{true, InitialPlacement::Oee, lookahead, seed});
      break;
    case Algorithm::HqaNoAttraction:
      result = map_hqa(tsc, arch, HqaOptions{false, InitialPlacement::Oee, lookahead, seed});
      break;
    case Algorithm::HqaRandomInit:
      result = map_hqa(tsc, arch, HqaOptions{true, InitialPlacement::Random, lookahead, seed});
      break;
  }
  result.algorithm = std::string(algorithm_name(algo));
  return result;
}

}  // namespace qcmap
