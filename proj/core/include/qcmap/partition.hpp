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
#include <stdexcept>
#include <vector>

#include "qcmap/circuit.hpp"

namespace qcmap {

/// Balanced k-way partition: every block holds exactly `block_size` nodes.
struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t k = 1;
  std::size_t block_size = 0;

  std::size_t num_nodes() const { return block_of.size(); }

  /// Nodes [0, block_size) in block 0, the next block_size in block 1, ...
  static Partition contiguous(std::size_t num_nodes, std::size_t k);
  /// Uniformly random balanced partition.
  static Partition random(std::size_t num_nodes, std::size_t k, std::uint64_t seed);

  /// Throws std::invalid_argument unless balanced and consistent.
  void validate() const;

  friend bool operator==(const Partition &, const Partition &) = default;
};

class PartitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxRounds = 20;

struct PartitionStats {
  std::size_t rounds = 0;
  std::size_t exchanges = 0;  // exchanges kept in the returned partition
};

/// Sum of finite edge weights between blocks (must-join markers ignored).
double cut_weight(const InteractionGraph &graph, const Partition &p);
/// Number of must-join pairs split across blocks.
std::size_t broken_must_joins(const InteractionGraph &graph, const Partition &p);

/// Overall Extreme Exchange refinement. Each round greedily applies the best
/// cross-block vertex exchange among unlocked vertices until none remain and
/// then keeps the prefix with the largest cumulative gain. Stops after a round
/// with no positive gain or after `max_rounds`. Must-join pairs weigh
/// 1e6 * (1 + max finite weight).
Partition oee_partition(const InteractionGraph &graph, const Partition &initial,
                        std::size_t max_rounds = kDefaultMaxRounds, PartitionStats *stats = nullptr);

/// Relaxed OEE: identical exchanges, but returns as soon as every must-join
/// pair is co-located. Throws PartitionError if that never happens.
Partition roee_partition(const InteractionGraph &graph, const Partition &initial,
                         std::size_t max_rounds = kDefaultMaxRounds, PartitionStats *stats = nullptr);

}  // namespace qcmap
