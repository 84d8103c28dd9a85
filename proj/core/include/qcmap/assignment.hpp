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
#include <string>
#include <vector>

namespace qcmap {

/// Dense rows x cols matrix of non-negative costs; individual entries may be
/// marked forbidden.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), cost_(rows * cols, fill), forbidden_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double &at(std::size_t r, std::size_t c) { return cost_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return cost_[r * cols_ + c]; }

  void forbid(std::size_t r, std::size_t c) { forbidden_[r * cols_ + c] = 1; }
  bool forbidden(std::size_t r, std::size_t c) const { return forbidden_[r * cols_ + c] != 0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cost_;
  std::vector<char> forbidden_;
};

struct LinearAssignment {
  /// Column chosen for each row. When rows > cols exactly `cols` rows are
  /// assigned (one per column) and the rest are empty.
  std::vector<std::optional<std::size_t>> col_of_row;
  double total_cost = 0.0;
};

class InfeasibleAssignment : public std::runtime_error {
 public:
  InfeasibleAssignment(std::size_t row, const std::string &message)
      : std::runtime_error(message), row_(row) {}
  std::size_t blocking_row() const { return row_; }

 private:
  std::size_t row_;
};

/// Minimum-cost assignment (Hungarian method with potentials, O(n^2 m)).
///
/// With rows <= cols every row receives a distinct column; otherwise every
/// column receives a distinct row, which is equivalent to padding with
/// zero-cost dummy columns. Forbidden entries carry the finite sentinel
/// (rows + cols) * (1 + max finite cost); an optimum that selects one raises
/// InfeasibleAssignment. Throws std::invalid_argument on negative or
/// non-finite costs.
LinearAssignment solve_assignment(const CostMatrix &m);

}  // namespace qcmap
