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

// The deviation function Phi and equilibrium solvers.
//
//   Phi_f(sigma) = sum_i [ max_{t_i} f^(i)(t_i, sigma_-i) - f^(i)(sigma) ]
//
// Phi_f >= 0 everywhere and Phi_f(sigma) = 0 exactly at Nash equilibria. It
// is unchanged by adding a non-strategic game.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gamedecomp/classifiers.hpp"
#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"
#include "gamedecomp/linalg.hpp"
#include "gamedecomp/mixed_profile.hpp"
#include "gamedecomp/payoff.hpp"

namespace gamedecomp {

inline double phi(const Game& f, const MixedProfile& sigma) {
  double total = 0.0;
  for (std::size_t i = 0; i < f.players(); ++i) total += deviation_gain(f, sigma, i);
  return total;
}

// Evaluates Phi for a fixed game. When a zero-sum form is supplied the
// evaluation runs on its zero-sum part w, where Phi(sigma) reduces to
// sum_i max_{t_i} w^(i)(t_i, sigma_-i).
class PhiEvaluator {
 public:
  explicit PhiEvaluator(Game game, std::optional<ZeroSumForm> form = std::nullopt)
      : game_(std::move(game)), form_(std::move(form)) {
    if (form_) require_same_shape(game_.space(), form_->w.space());
  }

  const Game& game() const noexcept { return game_; }
  bool has_zero_sum_form() const noexcept { return form_.has_value(); }

  double operator()(const MixedProfile& sigma) const {
    if (!form_) return phi(game_, sigma);
    double total = 0.0;
    for (std::size_t i = 0; i < game_.players(); ++i) {
      const std::vector<double> row = pure_deviation_payoffs(form_->w, sigma, i);
      total += *std::max_element(row.begin(), row.end());
    }
    return total;
  }

 private:
  Game game_;
  std::optional<ZeroSumForm> form_;
};

struct NashList {
  std::vector<MixedProfile> profiles;
  bool degenerate = false;
  std::string method;
};

namespace detail {

inline double payoff_scale(const Game& f) { return std::max(1.0, max_abs(f)); }

inline bool contains_profile(const std::vector<MixedProfile>& list, const MixedProfile& p,
                             double tol = 1e-8) {
  return std::any_of(list.begin(), list.end(),
                     [&](const MixedProfile& q) { return max_abs_diff(p, q) <= tol; });
}

// Subsets of {0..n-1} with exactly k elements, in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k == 0 || k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] != i + n - k) break;
      if (i == 0) return out;
    }
    ++cur[i];
    for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

inline std::vector<std::vector<std::size_t>> all_nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto part = subsets_of_size(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Payoff matrices of a two-player game: a(r,c) = f^(1), b(r,c) = f^(2).
struct Bimatrix {
  linalg::Matrix a;
  linalg::Matrix b;
};

inline Bimatrix to_bimatrix(const Game& f) {
  const std::size_t m = f.space().size(0);
  const std::size_t n = f.space().size(1);
  Bimatrix out{linalg::Matrix(m, n), linalg::Matrix(m, n)};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out.a(r, c) = f(0, r * n + c);
      out.b(r, c) = f(1, r * n + c);
    }
  }
  return out;
}

// Mix `mix` over `support` (indices into the opponent's strategies) making
// every strategy in `own` indifferent under payoff(own, support) -- pass
// transpose=true to read payoff(support, own) instead.
struct IndifferenceSolution {
  std::vector<double> mix;  // over the support
  double value = 0.0;
};

inline std::optional<IndifferenceSolution> solve_indifference(const linalg::Matrix& payoff,
                                                              bool transpose,
                                                              const std::vector<std::size_t>& own,
                                                              const std::vector<std::size_t>& support) {
  const std::size_t k = own.size();
  linalg::Matrix sys(k + 1, k + 1);
  std::vector<double> rhs(k + 1, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      sys(r, c) = transpose ? payoff(support[c], own[r]) : payoff(own[r], support[c]);
    }
    sys(r, k) = -1.0;
  }
  for (std::size_t c = 0; c < k; ++c) sys(k, c) = 1.0;
  rhs[k] = 1.0;
  auto x = linalg::solve(std::move(sys), std::move(rhs));
  if (!x) return std::nullopt;
  IndifferenceSolution out;
  out.mix.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(k));
  out.value = (*x)[k];
  return out;
}

// Minimum-norm solution of the (possibly non-square) indifference system,
// or nullopt when the system is inconsistent.
inline std::optional<IndifferenceSolution> solve_indifference_min_norm(
    const linalg::Matrix& payoff, bool transpose, const std::vector<std::size_t>& own,
    const std::vector<std::size_t>& support, double scale) {
  const auto rows = static_cast<Eigen::Index>(own.size() + 1);
  const auto cols = static_cast<Eigen::Index>(support.size() + 1);
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  for (std::size_t r = 0; r < own.size(); ++r) {
    for (std::size_t c = 0; c < support.size(); ++c) {
      sys(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          transpose ? payoff(support[c], own[r]) : payoff(own[r], support[c]);
    }
    sys(static_cast<Eigen::Index>(r), cols - 1) = -1.0;
  }
  for (Eigen::Index c = 0; c + 1 < cols; ++c) sys(rows - 1, c) = 1.0;
  rhs(rows - 1) = 1.0;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sys);
  cod.setThreshold(1e-11);
  const Eigen::VectorXd x = cod.solve(rhs);
  if ((sys * x - rhs).cwiseAbs().maxCoeff() > 1e-9 * scale) return std::nullopt;
  IndifferenceSolution out;
  for (Eigen::Index c = 0; c + 1 < cols; ++c) out.mix.push_back(x(c));
  out.value = x(cols - 1);
  return out;
}

struct CandidateCheck {
  std::optional<MixedProfile> profile;
  bool tie = false;  // a zero-probability strategy is also a best response
};

inline CandidateCheck check_candidate(const Game& f, const std::vector<std::size_t>& rows,
                                      const IndifferenceSolution& xs,
                                      const std::vector<std::size_t>& cols,
                                      const IndifferenceSolution& ys, double scale) {
  CandidateCheck out;
  const std::size_t m = f.space().size(0);
  const std::size_t n = f.space().size(1);
  std::vector<double> x(m, 0.0), y(n, 0.0);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (xs.mix[k] < -1e-12) return out;
    x[rows[k]] = std::max(0.0, xs.mix[k]);
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (ys.mix[k] < -1e-12) return out;
    y[cols[k]] = std::max(0.0, ys.mix[k]);
  }
  auto renormalize = [](std::vector<double>& v) {
    double s = 0.0;
    for (double p : v) s += p;
    for (double& p : v) p /= s;
  };
  renormalize(x);
  renormalize(y);
  MixedProfile sigma({x, y});
  const double tol = 1e-9 * scale;
  for (std::size_t player = 0; player < 2; ++player) {
    const std::vector<double> row = pure_deviation_payoffs(f, sigma, player);
    const std::vector<double>& own = sigma.strategy(player);
    double current = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) current += own[k] * row[k];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] > current + tol) return out;
      if (own[k] <= 1e-12 && row[k] >= current - tol) out.tie = true;
    }
  }
  out.profile = std::move(sigma);
  return out;
}

}  // namespace detail

// All pure Nash equilibria by exhaustive scan.
inline NashList pure_nash(const Game& f, double tol = kDefaultTolerance) {
  const StrategySpace& space = f.space();
  NashList out;
  out.method = "pure";
  for (std::size_t s = 0; s < f.profile_count(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < f.players() && ok; ++i) {
      for (std::size_t t = 0; t < space.size(i); ++t) {
        if (f(i, space.replace(s, i, t)) > f(i, s) + tol) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.profiles.push_back(MixedProfile::pure(space, space.decode(s)));
  }
  return out;
}

// Support enumeration for two-player games over equal-size support pairs.
// `degenerate` is set when an equilibrium comes from a singular support
// system, an unused strategy ties the equilibrium payoff (this includes a
// support strategy with zero weight), or no equilibrium is found. Degenerate games additionally get a pass over all
// support pairs with minimum-norm solves, which recovers equilibria with
// unequal support sizes (for example the uniform profile of a non-square
// normalized zero-sum game).
inline NashList bimatrix_nash(const Game& f) {
  if (f.players() != 2) throw PreconditionError("support enumeration needs a two-player game");
  const std::size_t m = f.space().size(0);
  const std::size_t n = f.space().size(1);
  const detail::Bimatrix bm = detail::to_bimatrix(f);
  const double scale = detail::payoff_scale(f);
  NashList out;
  out.method = "support";

  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    const auto row_sets = detail::subsets_of_size(m, k);
    const auto col_sets = detail::subsets_of_size(n, k);
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        // Column mix makes the rows indifferent; row mix makes the columns indifferent.
        auto ys = detail::solve_indifference(bm.a, false, rows, cols);
        auto xs = detail::solve_indifference(bm.b, true, cols, rows);
        const bool singular = !ys || !xs;
        if (singular) {
          ys = detail::solve_indifference_min_norm(bm.a, false, rows, cols, scale);
          xs = detail::solve_indifference_min_norm(bm.b, true, cols, rows, scale);
          if (!ys || !xs) continue;
        }
        detail::CandidateCheck check = detail::check_candidate(f, rows, *xs, cols, *ys, scale);
        if (!check.profile) continue;
        if (check.tie || singular) out.degenerate = true;
        if (!detail::contains_profile(out.profiles, *check.profile)) {
          out.profiles.push_back(std::move(*check.profile));
        }
      }
    }
  }

  if (out.profiles.empty()) out.degenerate = true;

  constexpr std::size_t kFallbackMaxStrategies = 10;
  if (out.degenerate && m <= kFallbackMaxStrategies && n <= kFallbackMaxStrategies) {
    out.method = "support+min-norm";
    const auto row_sets = detail::all_nonempty_subsets(m);
    const auto col_sets = detail::all_nonempty_subsets(n);
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        auto ys = detail::solve_indifference_min_norm(bm.a, false, rows, cols, scale);
        if (!ys) continue;
        auto xs = detail::solve_indifference_min_norm(bm.b, true, cols, rows, scale);
        if (!xs) continue;
        detail::CandidateCheck check = detail::check_candidate(f, rows, *xs, cols, *ys, scale);
        if (check.profile && !detail::contains_profile(out.profiles, *check.profile)) {
          out.profiles.push_back(std::move(*check.profile));
        }
      }
    }
  }
  return out;
}

inline MixedProfile uniform_profile(const StrategySpace& space) { return MixedProfile::uniform(space); }

// For normalized zero-sum or normalized common interest games the uniform
// profile is an equilibrium, and every pure own strategy earns exactly zero
// against the uniform opponents. Returns whether both hold within 1e-10.
inline bool verify_uniform_ne(const Game& f, double tol = kDefaultTolerance) {
  if (!is_normalized(f, tol)) {
    throw PreconditionError("uniform equilibrium check needs a normalized game (not in N)",
                            "not_normalized");
  }
  if (!is_zero_sum(f, tol) && !is_common_interest(f, tol)) {
    throw PreconditionError(
        "uniform equilibrium check needs a zero-sum or common interest game (not in Z or C)",
        "not_zero_sum_or_common_interest");
  }
  constexpr double kUniformTol = 1e-10;
  const MixedProfile sigma = uniform_profile(f.space());
  if (!is_nash(f, sigma, kUniformTol)) return false;
  for (std::size_t i = 0; i < f.players(); ++i) {
    for (double v : pure_deviation_payoffs(f, sigma, i)) {
      if (std::abs(v) > kUniformTol) return false;
    }
  }
  return true;
}

struct DominantStrategyResult {
  std::size_t row = 0;  // player 1's strategy
  std::size_t col = 0;  // player 2's strategy
  bool strict = false;
  std::vector<std::size_t> row_argmax;
  std::vector<std::size_t> col_argmax;
};

// For two-player games in B: f ~ (zeta_2(s_1) + zeta_1(s_2), same), so each
// player's dominant strategy maximizes the term that depends on its own
// strategy. Ties are reported with strict = false.
inline DominantStrategyResult dominant_strategy(const Game& f, double tol = kDefaultTolerance) {
  if (f.players() != 2) throw PreconditionError("dominant strategy extraction needs two players");
  const MultilateralForm form = extract_multilateral(f, tol);
  auto argmax = [tol](const Tensor& v) {
    const double best = *std::max_element(v.begin(), v.end());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] >= best - tol) out.push_back(k);
    }
    return out;
  };
  DominantStrategyResult r;
  r.row_argmax = argmax(form.zeta(1));  // zeta_2 is a function of s_1
  r.col_argmax = argmax(form.zeta(0));  // zeta_1 is a function of s_2
  r.row = r.row_argmax.front();
  r.col = r.col_argmax.front();
  r.strict = r.row_argmax.size() == 1 && r.col_argmax.size() == 1;
  return r;
}

struct MinimaxResult {
  double value = 0.0;  // expected payoff to player 1
  MixedProfile strategies;
};

// Two-player zero-sum games via the standard value LP on a shifted, strictly
// positive payoff matrix M: max 1^T q s.t. M q <= 1, q >= 0. The column
// player's strategy is q normalized; the row player's comes from the duals.
inline MinimaxResult minimax(const Game& f, double tol = kDefaultTolerance) {
  if (f.players() != 2) throw PreconditionError("minimax needs a two-player game");
  if (!is_zero_sum(f, tol)) throw PreconditionError("minimax needs a zero-sum game", "not_zero_sum");
  const std::size_t m = f.space().size(0);
  const std::size_t n = f.space().size(1);
  double lo = f(0, 0);
  for (double x : f.payoff(0)) lo = std::min(lo, x);
  const double shift = 1.0 - lo;
  linalg::Matrix mat(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) mat(r, c) = f(0, r * n + c) + shift;
  }
  const linalg::LpSolution lp =
      linalg::simplex_max(mat, std::vector<double>(m, 1.0), std::vector<double>(n, 1.0));
  if (lp.objective <= 0.0) throw InternalConsistencyError("minimax LP returned a nonpositive value");
  std::vector<double> x(m), y(n);
  double sx = 0.0, sy = 0.0;
  for (std::size_t r = 0; r < m; ++r) sx += x[r] = std::max(0.0, lp.dual[r]);
  for (std::size_t c = 0; c < n; ++c) sy += y[c] = std::max(0.0, lp.primal[c]);
  for (double& p : x) p /= sx;
  for (double& p : y) p /= sy;
  MinimaxResult out{1.0 / lp.objective - shift, MixedProfile({x, y})};
  if (!is_nash(f, out.strategies, 1e-8 * detail::payoff_scale(f))) {
    throw InternalConsistencyError("minimax strategies are not an equilibrium");
  }
  return out;
}

struct PhiGridRow {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double phi = 0.0;
};

// Phi on symmetric profiles sigma_1 = sigma_2 = p over the barycentric grid
// p = (i, j, R - i - j) / R of a symmetric game with three strategies.
inline std::vector<PhiGridRow> phi_grid(const Game& f, std::size_t resolution,
                                        double tol = kDefaultTolerance) {
  if (f.players() != 2 || f.space().size(0) != 3 || f.space().size(1) != 3) {
    throw PreconditionError("phi grid needs a two-player game with three strategies each",
                            "wrong_shape");
  }
  if (!is_symmetric(f, tol)) throw PreconditionError("phi grid needs a symmetric game", "asymmetric");
  if (resolution < 2) throw InvalidInput("phi grid resolution must be at least 2");
  std::vector<PhiGridRow> rows;
  const double r = static_cast<double>(resolution);
  for (std::size_t i = 0; i <= resolution; ++i) {
    for (std::size_t j = 0; i + j <= resolution; ++j) {
      const std::size_t k = resolution - i - j;
      std::vector<double> p{static_cast<double>(i) / r, static_cast<double>(j) / r,
                            static_cast<double>(k) / r};
      const MixedProfile sigma({p, p});
      rows.push_back({p[0], p[1], p[2], phi(f, sigma)});
    }
  }
  return rows;
}

inline void write_phi_csv(std::ostream& os, const std::vector<PhiGridRow>& rows) {
  os << "p1,p2,p3,phi\n";
  const auto old_precision = os.precision(17);
  for (const auto& row : rows) os << row.p1 << ',' << row.p2 << ',' << row.p3 << ',' << row.phi << '\n';
  os.precision(old_precision);
}

// If sigma is an equilibrium of both f and g, it is one of rho*f + rho2*g for
// positive weights.
inline bool linear_combination_ne_check(const Game& f, const Game& g, const MixedProfile& sigma,
                                        double rho, double rho2, double tol = kDefaultTolerance) {
  if (!(rho > 0.0) || !(rho2 > 0.0)) throw PreconditionError("weights must be positive");
  if (!is_nash(f, sigma, tol) || !is_nash(g, sigma, tol)) {
    throw PreconditionError("profile is not an equilibrium of both games", "not_nash");
  }
  return is_nash(add(scale(f, rho), scale(g, rho2)), sigma, tol * (rho + rho2));
}

}  // namespace gamedecomp
