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

#include "qcmap/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qcmap {

namespace {

// Shortest augmenting path Hungarian method for n <= m. `cost(i, j)` is
// 0-based; returns the column matched to each row.
template <typename Cost>
std::vector<std::size_t> hungarian(std::size_t n, std::size_t m, Cost cost) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based arrays; column 0 is the virtual root of each augmentation.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) col_of_row[p[j] - 1] = j - 1;
  }
  return col_of_row;
}

}  // namespace

LinearAssignment solve_assignment(const CostMatrix &m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  double max_finite = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m.forbidden(r, c)) continue;
      const double x = m.at(r, c);
      if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument("cost matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") must be finite and non-negative");
      }
      max_finite = std::max(max_finite, x);
    }
  }
  const double sentinel = static_cast<double>(rows + cols) * (1.0 + max_finite);
  auto entry = [&](std::size_t r, std::size_t c) { return m.forbidden(r, c) ? sentinel : m.at(r, c); };

  LinearAssignment out;
  out.col_of_row.assign(rows, std::nullopt);
  if (rows == 0 || cols == 0) return out;

  if (rows <= cols) {
    const auto match = hungarian(rows, cols, entry);
    for (std::size_t r = 0; r < rows; ++r) out.col_of_row[r] = match[r];
  } else {
    const auto match = hungarian(cols, rows, [&](std::size_t c, std::size_t r) { return entry(r, c); });
    for (std::size_t c = 0; c < cols; ++c) out.col_of_row[match[c]] = c;
  }

  for (std::size_t r = 0; r < rows; ++r) {
    if (!out.col_of_row[r]) continue;
    const std::size_t c = *out.col_of_row[r];
    if (m.forbidden(r, c)) {
      throw InfeasibleAssignment(r, "no feasible assignment: row " + std::to_string(r) +
                                        " cannot avoid forbidden entries");
    }
    out.total_cost += m.at(r, c);
  }
  return out;
}

}  // namespace qcmap
