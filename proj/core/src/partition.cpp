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

#include "qcmap/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "random.hpp"

namespace qcmap {

Partition Partition::contiguous(std::size_t num_nodes, std::size_t k) {
  if (k == 0 || num_nodes % k != 0) {
    throw std::invalid_argument("cannot split " + std::to_string(num_nodes) + " nodes into " +
                                std::to_string(k) + " equal blocks");
  }
  Partition p;
  p.k = k;
  p.block_size = num_nodes / k;
  p.block_of.resize(num_nodes);
  for (std::size_t v = 0; v < num_nodes; ++v) p.block_of[v] = v / p.block_size;
  return p;
}

Partition Partition::random(std::size_t num_nodes, std::size_t k, std::uint64_t seed) {
  Partition p = contiguous(num_nodes, k);
  detail::Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(p.block_of));
  return p;
}

void Partition::validate() const {
  if (k == 0 || block_size * k != block_of.size()) {
    throw std::invalid_argument("partition shape inconsistent: " + std::to_string(k) + " blocks of " +
                                std::to_string(block_size) + " for " + std::to_string(block_of.size()) +
                                " nodes");
  }
  std::vector<std::size_t> count(k, 0);
  for (std::size_t b : block_of) {
    if (b >= k) throw std::invalid_argument("block index out of range");
    ++count[b];
  }
  for (std::size_t c : count) {
    if (c != block_size) throw std::invalid_argument("partition is not balanced");
  }
}

double cut_weight(const InteractionGraph &graph, const Partition &p) {
  double cut = 0.0;
  for (std::size_t i = 0; i < p.num_nodes(); ++i) {
    for (std::size_t j = i + 1; j < p.num_nodes(); ++j) {
      if (p.block_of[i] != p.block_of[j]) cut += graph.weight(i, j);
    }
  }
  return cut;
}

std::size_t broken_must_joins(const InteractionGraph &graph, const Partition &p) {
  std::size_t broken = 0;
  for (std::size_t i = 0; i < p.num_nodes(); ++i) {
    const std::size_t j = graph.partner(i);
    if (j != InteractionGraph::kNoPartner && i < j && p.block_of[i] != p.block_of[j]) ++broken;
  }
  return broken;
}

namespace {

// Exchange-based refinement over a dense effective weight matrix.
class Refiner {
 public:
  Refiner(const InteractionGraph &graph, const Partition &initial)
      : graph_(graph), p_(initial), n_(initial.num_nodes()), k_(initial.k) {
    if (graph.num_nodes() != n_) {
      throw std::invalid_argument("partition covers " + std::to_string(n_) + " nodes but graph has " +
                                  std::to_string(graph.num_nodes()));
    }
    p_.validate();

    const double heavy = 1e6 * (1.0 + graph.max_weight());
    w_.assign(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        w_[i * n_ + j] = graph.must_join(i, j) ? heavy : graph.weight(i, j);
      }
    }
    // Gains are compared against a tolerance proportional to the largest
    // weight so rounding in the incremental updates cannot fake progress.
    tol_ = 1e-9 * std::max(1.0, graph.has_must_join() ? heavy : graph.max_weight());

    ext_.assign(n_ * k_, 0.0);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u = 0; u < n_; ++u) ext_[v * k_ + p_.block_of[u]] += w(v, u);
    }
    broken_ = broken_must_joins(graph, p_);
  }

  bool valid() const { return broken_ == 0; }

  // Runs refinement rounds. With `relaxed`, stops as soon as valid().
  void run(std::size_t max_rounds, bool relaxed, PartitionStats &stats) {
    if (relaxed && valid()) return;
    std::vector<char> locked(n_);
    std::vector<std::pair<std::size_t, std::size_t>> log;
    for (std::size_t round = 0; round < max_rounds; ++round) {
      ++stats.rounds;
      std::fill(locked.begin(), locked.end(), 0);
      log.clear();
      double cumulative = 0.0;
      double best = 0.0;
      std::size_t best_len = 0;

      while (true) {
        std::size_t bu = n_, bv = n_;
        double best_gain = -std::numeric_limits<double>::infinity();
        for (std::size_t u = 0; u < n_; ++u) {
          if (locked[u]) continue;
          const std::size_t a = p_.block_of[u];
          const double* eu = &ext_[u * k_];
          for (std::size_t v = u + 1; v < n_; ++v) {
            if (locked[v]) continue;
            const std::size_t b = p_.block_of[v];
            if (a == b) continue;
            const double* ev = &ext_[v * k_];
            const double gain = eu[b] - eu[a] + ev[a] - ev[b] - 2.0 * w(u, v);
            if (gain > best_gain) {
              best_gain = gain;
              bu = u;
              bv = v;
            }
          }
        }
        if (bu == n_) break;

        exchange(bu, bv);
        locked[bu] = locked[bv] = 1;
        log.emplace_back(bu, bv);
        cumulative += best_gain;
        if (relaxed && valid()) {
          stats.exchanges += log.size();
          return;
        }
        if (cumulative > best + tol_) {
          best = cumulative;
          best_len = log.size();
        }
      }

      for (std::size_t i = log.size(); i > best_len; --i) exchange(log[i - 1].first, log[i - 1].second);
      stats.exchanges += best_len;
      if (best_len == 0) return;
      if (relaxed && valid()) return;
    }
  }

  const Partition &partition() const { return p_; }

 private:
  double w(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  bool joined(std::size_t v) const {
    const std::size_t p = graph_.partner(v);
    return p == InteractionGraph::kNoPartner || p_.block_of[p] == p_.block_of[v];
  }

  // Swaps the blocks of u and v and updates external weights and the count
  // of split must-join pairs.
  void exchange(std::size_t u, std::size_t v) {
    const std::size_t a = p_.block_of[u];
    const std::size_t b = p_.block_of[v];
    std::size_t before = 0;
    std::size_t after = 0;
    auto count_split = [&](std::size_t& acc) {
      for (std::size_t x : {u, v}) {
        const std::size_t p = graph_.partner(x);
        if (p == InteractionGraph::kNoPartner) continue;
        // Avoid counting the pair (u, v) twice.
        if ((x == v && p == u)) continue;
        if (p_.block_of[p] != p_.block_of[x]) ++acc;
      }
    };
    count_split(before);

    for (std::size_t x = 0; x < n_; ++x) {
      const double delta = w(x, v) - w(x, u);
      ext_[x * k_ + a] += delta;
      ext_[x * k_ + b] -= delta;
    }
    p_.block_of[u] = b;
    p_.block_of[v] = a;

    count_split(after);
    broken_ = broken_ + after - before;
  }

  const InteractionGraph &graph_;
  Partition p_;
  std::size_t n_;
  std::size_t k_;
  std::vector<double> w_;
  std::vector<double> ext_;  // ext_[v * k + b] = sum of w(v, u) for u in block b
  double tol_ = 0.0;
  std::size_t broken_ = 0;
};

}  // namespace

Partition oee_partition(const InteractionGraph &graph, const Partition &initial, std::size_t max_rounds,
                        PartitionStats *stats) {
  PartitionStats local;
  Refiner refiner(graph, initial);
  refiner.run(max_rounds, /*relaxed=*/false, local);
  if (stats) *stats = local;
  return refiner.partition();
}

Partition roee_partition(const InteractionGraph &graph, const Partition &initial, std::size_t max_rounds,
                         PartitionStats *stats) {
  PartitionStats local;
  Refiner refiner(graph, initial);
  refiner.run(max_rounds, /*relaxed=*/true, local);
  if (stats) *stats = local;
  if (!refiner.valid()) {
    throw PartitionError("rOEE could not co-locate all must-join pairs within " +
                         std::to_string(max_rounds) + " rounds");
  }
  return refiner.partition();
}

}  // namespace qcmap
