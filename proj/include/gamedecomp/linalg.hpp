// Copyright 2026 The gamedecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small dense solvers used by the equilibrium routines.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gamedecomp/error.hpp"

namespace gamedecomp::linalg {

// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline constexpr double kSingularThreshold = 1e-11;

// Solves the square system a x = b by Gaussian elimination with partial
// pivoting. Returns nullopt when a pivot falls below
// kSingularThreshold * max(1, max|a|).
inline std::optional<std::vector<double>> solve(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InvalidInput("solve needs a square system");
  const double threshold = kSingularThreshold * std::max(1.0, a.max_abs());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) <= threshold) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= a(r, c) * x[c];
    x[r] = acc / a(r, r);
  }
  return x;
}

// Result of max c^T x subject to a x <= b, x >= 0 with b >= 0.
struct LpSolution {
  std::vector<double> primal;  // x
  std::vector<double> dual;    // multipliers of the rows of a
  double objective = 0.0;
};

// Dense tableau simplex for max c^T x, a x <= b, x >= 0, b >= 0 (so the
// slack basis is feasible). Uses Bland's rule, which cannot cycle.
inline LpSolution simplex_max(const Matrix& a, const std::vector<double>& b,
                              const std::vector<double>& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw InvalidInput("simplex dimension mismatch");
  for (double bi : b) {
    if (bi < 0.0) throw InvalidInput("simplex needs a nonnegative right-hand side");
  }
  constexpr double kEps = 1e-12;
  // Columns: x (n), slacks (m), rhs. Row m is the objective row (-c).
  Matrix t(m + 1, n + m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n; ++k) t(r, k) = a(r, k);
    t(r, n + r) = 1.0;
    t(r, n + m) = b[r];
  }
  for (std::size_t k = 0; k < n; ++k) t(m, k) = -c[k];
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  const std::size_t max_iterations = 50 * (n + m) + 1000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_iterations) throw InternalConsistencyError("simplex did not terminate");
    std::size_t enter = n + m;
    for (std::size_t k = 0; k < n + m; ++k) {
      if (t(m, k) < -kEps) {
        enter = k;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, enter) > kEps) {
        const double ratio = t(r, n + m) / t(r, enter);
        if (leave == m || ratio < best_ratio - kEps ||
            (std::abs(ratio - best_ratio) <= kEps && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) throw PreconditionError("linear program is unbounded", "unbounded");
    const double pivot = t(leave, enter);
    for (std::size_t k = 0; k <= n + m; ++k) t(leave, k) /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double factor = t(r, enter);
      if (factor == 0.0) continue;
      for (std::size_t k = 0; k <= n + m; ++k) t(r, k) -= factor * t(leave, k);
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.primal.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) sol.primal[basis[r]] = t(r, n + m);
  }
  sol.dual.assign(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) sol.dual[r] = t(m, n + r);
  sol.objective = t(m, n + m);
  return sol;
}

}  // namespace gamedecomp::linalg
