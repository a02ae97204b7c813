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

// Membership tests for the game classes and constructive extractors:
// potential functions, zero-sum forms and multilateral representations.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamedecomp/decomposition.hpp"
#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"
#include "gamedecomp/payoff.hpp"
#include "gamedecomp/projection.hpp"

namespace gamedecomp {

// ---------------------------------------------------------------------------
// Definitional predicates.

inline bool is_common_interest(const Game& f, double tol = kDefaultTolerance) {
  for (std::size_t i = 1; i < f.players(); ++i) {
    for (std::size_t s = 0; s < f.profile_count(); ++s) {
      if (std::abs(f(i, s) - f(0, s)) > tol) return false;
    }
  }
  return true;
}

inline bool is_zero_sum(const Game& f, double tol = kDefaultTolerance) {
  for (std::size_t s = 0; s < f.profile_count(); ++s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.players(); ++i) sum += f(i, s);
    if (std::abs(sum) > tol) return false;
  }
  return true;
}

inline bool is_normalized(const Game& f, double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < f.players(); ++i) {
    bool ok = true;
    const Tensor& t = f.payoff(i);
    for_each_fiber(f.space(), i, [&](std::size_t base, std::size_t stride, std::size_t length) {
      double sum = 0.0;
      for (std::size_t k = 0; k < length; ++k) sum += t[base + k * stride];
      if (std::abs(sum) > tol) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool is_non_strategic(const Game& f, double tol = kDefaultTolerance) {
  return own_axis_variation(f) <= tol;
}

// Two-player game with f^(1)(s, t) = f^(2)(t, s).
inline bool is_symmetric(const Game& f, double tol = kDefaultTolerance) {
  if (f.players() != 2 || f.space().size(0) != f.space().size(1)) return false;
  const std::size_t m = f.space().size(0);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (std::abs(f.at(0, {s, t}) - f.at(1, {t, s})) > tol) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cycle conditions.

struct CycleTestResult {
  bool pass = true;
  double worst_violation = 0.0;
};

// Pairwise four-cycle condition: for players i < j, strategies s_i, t_i,
// s_j, t_j and any fixed spectator profile, the double differences
//   D_k = f^(k)(s_i,s_j) - f^(k)(t_i,s_j) - f^(k)(s_i,t_j) + f^(k)(t_i,t_j)
// must agree for k = i and k = j.
inline CycleTestResult potential_cycle_test(const Game& f, double tol = kDefaultTolerance) {
  const StrategySpace& space = f.space();
  CycleTestResult result;
  for (std::size_t i = 0; i < f.players(); ++i) {
    for (std::size_t j = i + 1; j < f.players(); ++j) {
      const Tensor& fi = f.payoff(i);
      const Tensor& fj = f.payoff(j);
      const std::size_t si = space.stride(i);
      const std::size_t sj = space.stride(j);
      for (std::size_t base = 0; base < space.profile_count(); ++base) {
        // Enumerate each spectator profile once: base has s_i = s_j = 0.
        if (space.coordinate(base, i) != 0 || space.coordinate(base, j) != 0) continue;
        for (std::size_t a = 0; a < space.size(i); ++a) {
          for (std::size_t b = a + 1; b < space.size(i); ++b) {
            for (std::size_t c = 0; c < space.size(j); ++c) {
              for (std::size_t d = c + 1; d < space.size(j); ++d) {
                const std::size_t ac = base + a * si + c * sj;
                const std::size_t bc = base + b * si + c * sj;
                const std::size_t ad = base + a * si + d * sj;
                const std::size_t bd = base + b * si + d * sj;
                const double di = fi[ac] - fi[bc] - fi[ad] + fi[bd];
                const double dj = fj[ac] - fj[bc] - fj[ad] + fj[bd];
                result.worst_violation = std::max(result.worst_violation, std::abs(di - dj));
              }
            }
          }
        }
      }
    }
  }
  result.pass = result.worst_violation <= tol;
  return result;
}

// Alternating-sum condition over the cube S(a, b) = {s : s_i in {a_i, b_i}}:
//   sum_i sum_{s in S(a,b)} (-1)^{#a's in s} f^(i)(s) = 0  for all a, b.
// Only the player-sum F = sum_i f^(i) enters. Choices with a_i = b_i give zero
// and swapping a_i, b_i flips the sign, so a_i < b_i suffices.
inline CycleTestResult zero_sum_cycle_test(const Game& f, double tol = kDefaultTolerance) {
  const StrategySpace& space = f.space();
  const std::size_t n = f.players();
  Tensor total(f.profile_count(), 0.0);
  for (const Tensor& t : f.payoffs()) {
    for (std::size_t s = 0; s < total.size(); ++s) total[s] += t[s];
  }
  CycleTestResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (space.size(i) < 2) return result;  // Q vanishes: every game passes.
  }
  // Odometer over per-player pairs (a_i, b_i) with a_i < b_i.
  std::vector<std::size_t> lo(n, 0), hi(n, 1);
  const std::size_t corners = std::size_t{1} << n;
  while (true) {
    double acc = 0.0;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      std::size_t idx = 0;
      std::size_t a_count = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const bool take_a = mask >> k & 1U;
        idx += (take_a ? lo[k] : hi[k]) * space.stride(k);
        a_count += take_a;
      }
      acc += (a_count % 2 == 0 ? 1.0 : -1.0) * total[idx];
    }
    result.worst_violation = std::max(result.worst_violation, std::abs(acc));

    std::size_t k = n;
    while (k-- > 0) {
      if (++hi[k] < space.size(k)) break;
      if (++lo[k] + 1 < space.size(k)) {
        hi[k] = lo[k] + 1;
        break;
      }
      lo[k] = 0;
      hi[k] = 1;
      if (k == 0) {
        result.pass = result.worst_violation <= tol;
        return result;
      }
    }
  }
}

// Zero-sum equivalence for symmetric two-player games:
//   f^(1)(s,t) - f^(1)(t,t) + f^(1)(t,s) - f^(1)(s,s) = 0 for all s, t.
inline bool symmetric_zero_sum_test(const Game& f, double tol = kDefaultTolerance) {
  if (!is_symmetric(f, tol)) {
    throw PreconditionError("symmetric zero-sum test needs a symmetric two-player game", "asymmetric");
  }
  const std::size_t m = f.space().size(0);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      const double v = f.at(0, {s, t}) - f.at(0, {t, t}) + f.at(0, {t, s}) - f.at(0, {s, s});
      if (std::abs(v) > tol) return false;
    }
  }
  return true;
}

struct AxisIndependenceResult {
  bool pass = false;
  // witness[i]: a coordinate along which f^(i) is constant, if any.
  std::vector<std::optional<std::size_t>> witness;
};

// Sufficient condition for zero-sum equivalence: every player's payoff is
// constant along some coordinate (possibly a different one per player).
inline AxisIndependenceResult axis_independence_test(const Game& f, double tol = kDefaultTolerance) {
  AxisIndependenceResult result;
  result.pass = true;
  for (std::size_t i = 0; i < f.players(); ++i) {
    std::optional<std::size_t> found;
    // Prefer the own axis, then the rest in order.
    if (axis_variation(f.space(), f.payoff(i), i) <= tol) found = i;
    for (std::size_t l = 0; l < f.players() && !found; ++l) {
      if (axis_variation(f.space(), f.payoff(i), l) <= tol) found = l;
    }
    if (!found) result.pass = false;
    result.witness.push_back(found);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Extractors.

// Potential v with v(first strategy of every player) = 0, built by summing
// own-payoff differences along the path that changes coordinates in player
// order. Satisfies f^(i)(s) - f^(i)(t_i, s_-i) = v(s) - v(t_i, s_-i).
inline Tensor extract_potential(const Game& f, double tol = kDefaultTolerance) {
  const CycleTestResult cycle = potential_cycle_test(f, tol);
  if (!cycle.pass) throw NotPotential(cycle.worst_violation);
  const StrategySpace& space = f.space();
  Tensor v(f.profile_count(), 0.0);
  for (std::size_t s = 0; s < f.profile_count(); ++s) {
    // Walk from (0, ..., 0) to s; step k moves coordinate k from 0 to s_k
    // with coordinates < k already at their target and > k still at 0.
    std::size_t prefix = 0;  // index of (s_1..s_{k-1}, 0, ..., 0)
    double acc = 0.0;
    for (std::size_t k = 0; k < f.players(); ++k) {
      const std::size_t sk = space.coordinate(s, k);
      const std::size_t next = prefix + sk * space.stride(k);
      if (sk != 0) acc += f(k, next) - f(k, prefix);
      prefix = next;
    }
    v[s] = acc;
  }
  return v;
}

// Worst |(f^(i)(s) - f^(i)(t_i,s_-i)) - (v(s) - v(t_i,s_-i))| over all
// unilateral deviations.
inline double potential_identity_error(const Game& f, const Tensor& v) {
  const StrategySpace& space = f.space();
  double worst = 0.0;
  for (std::size_t i = 0; i < f.players(); ++i) {
    for (std::size_t s = 0; s < f.profile_count(); ++s) {
      for (std::size_t t = 0; t < space.size(i); ++t) {
        const std::size_t dev = space.replace(s, i, t);
        worst = std::max(worst, std::abs((f(i, s) - f(i, dev)) - (v[s] - v[dev])));
      }
    }
  }
  return worst;
}

// f = w + h with w zero-sum and h non-strategic.
struct ZeroSumForm {
  Game w;
  Game h;
};

// Splits F = sum_i f^(i) into its Hoeffding terms. Every term except the
// full-interaction one omits some coordinate l; it is assigned to h^(l) for
// the smallest such l, which keeps h^(l) independent of s_l. The
// full-interaction term is zero exactly for zero-sum equivalent games.
inline ZeroSumForm extract_zero_sum_form(const Game& f, double tol = kDefaultTolerance) {
  const CycleTestResult cycle = zero_sum_cycle_test(f, tol);
  if (!cycle.pass) throw NotZeroSumEquivalent(cycle.worst_violation);
  const StrategySpace& space = f.space();
  const std::size_t n = f.players();
  if (n >= 8 * sizeof(unsigned long)) throw CapacityExceeded("too many players for subset expansion");
  Tensor total(f.profile_count(), 0.0);
  for (const Tensor& t : f.payoffs()) {
    for (std::size_t s = 0; s < total.size(); ++s) total[s] += t[s];
  }
  std::vector<Tensor> h(n, Tensor(f.profile_count(), 0.0));
  const unsigned long full = (1UL << n) - 1;
  for (unsigned long mask = 0; mask < full; ++mask) {
    std::size_t owner = 0;
    while (mask >> owner & 1UL) ++owner;
    const Tensor term = anova_term(space, total, mask);
    for (std::size_t s = 0; s < term.size(); ++s) h[owner][s] += term[s];
  }
  Game hg(space, std::move(h));
  return {sub(f, hg), std::move(hg)};
}

// zeta_l is a function of s_{-l}, stored over S_{-l} in row-major order with
// the remaining coordinates in player order. The game with
// f^(i) = sum_{l != i} zeta_l(s_-l) is strategically equivalent to the input.
class MultilateralForm {
 public:
  MultilateralForm(StrategySpace space, std::vector<Tensor> zeta)
      : space_(std::move(space)), zeta_(std::move(zeta)) {
    if (zeta_.size() != space_.players()) {
      throw ShapeMismatch("multilateral term count", zeta_.size(), space_.players());
    }
    for (std::size_t l = 0; l < zeta_.size(); ++l) {
      const std::size_t expected = space_.profile_count() / space_.size(l);
      if (zeta_[l].size() != expected) {
        throw ShapeMismatch("multilateral term " + std::to_string(l + 1), zeta_[l].size(), expected);
      }
    }
  }

  const StrategySpace& space() const noexcept { return space_; }
  const Tensor& zeta(std::size_t l) const { return zeta_.at(l); }

  // Position of full profile `index` inside S_{-l}.
  std::size_t reduced_index(std::size_t index, std::size_t l) const {
    const std::size_t stride = space_.stride(l);
    return index / (stride * space_.size(l)) * stride + index % stride;
  }

  double value(std::size_t l, std::size_t full_index) const {
    return zeta_[l][reduced_index(full_index, l)];
  }

  Game to_game() const {
    std::vector<Tensor> out(space_.players(), Tensor(space_.profile_count(), 0.0));
    for (std::size_t i = 0; i < space_.players(); ++i) {
      for (std::size_t s = 0; s < space_.profile_count(); ++s) {
        double acc = 0.0;
        for (std::size_t l = 0; l < space_.players(); ++l) {
          if (l != i) acc += value(l, s);
        }
        out[i][s] = acc;
      }
    }
    return Game(space_, std::move(out));
  }

 private:
  StrategySpace space_;
  std::vector<Tensor> zeta_;
};

// For f in B the potential has no full-interaction term; its Hoeffding terms
// grouped by smallest omitted coordinate give the zeta family.
inline MultilateralForm extract_multilateral(const Game& f, double tol = kDefaultTolerance) {
  const CycleTestResult pot = potential_cycle_test(f, tol);
  const CycleTestResult zs = zero_sum_cycle_test(f, tol);
  if (!pot.pass || !zs.pass) throw NotInB(std::max(pot.worst_violation, zs.worst_violation));
  const StrategySpace& space = f.space();
  const std::size_t n = f.players();
  if (n >= 8 * sizeof(unsigned long)) throw CapacityExceeded("too many players for subset expansion");
  const Tensor v = extract_potential(f, tol);
  std::vector<Tensor> lifted(n, Tensor(f.profile_count(), 0.0));
  const unsigned long full = (1UL << n) - 1;
  for (unsigned long mask = 0; mask < full; ++mask) {
    std::size_t owner = 0;
    while (mask >> owner & 1UL) ++owner;
    const Tensor term = anova_term(space, v, mask);
    for (std::size_t s = 0; s < term.size(); ++s) lifted[owner][s] += term[s];
  }
  std::vector<Tensor> zeta(n);
  for (std::size_t l = 0; l < n; ++l) {
    zeta[l].assign(f.profile_count() / space.size(l), 0.0);
    const std::size_t stride = space.stride(l);
    for (std::size_t s = 0; s < f.profile_count(); ++s) {
      if (space.coordinate(s, l) == 0) zeta[l][s / (stride * space.size(l)) * stride + s % stride] = lifted[l][s];
    }
  }
  return MultilateralForm(space, std::move(zeta));
}

// ---------------------------------------------------------------------------
// Aggregate report.

struct ClassificationReport {
  bool common_interest = false;
  bool zero_sum = false;
  bool normalized = false;
  bool non_strategic = false;
  bool potential = false;
  bool zero_sum_equivalent = false;
  bool zs_potential_B = false;

  double potential_violation = 0.0;
  double zero_sum_violation = 0.0;

  double norm_total = 0.0;
  double norm_NC = 0.0;
  double norm_NZ = 0.0;
  double norm_B = 0.0;
};

// Runs every predicate and cross-checks the cycle tests against the main
// decomposition: potential iff f_NZ = 0, zero-sum equivalent iff f_NC = 0.
// A decisive disagreement (one side exact to 1e-12, the other off by more
// than 1e-7, both relative to max(1, ||f||)) is reported as an InternalConsistencyError.
inline ClassificationReport classify(const Game& f, double tol = kDefaultTolerance,
                                     ProjectorLimits limits = {}) {
  ClassificationReport r;
  r.common_interest = is_common_interest(f, tol);
  r.zero_sum = is_zero_sum(f, tol);
  r.normalized = is_normalized(f, tol);
  r.non_strategic = is_non_strategic(f, tol);
  const CycleTestResult pot = potential_cycle_test(f, tol);
  const CycleTestResult zs = zero_sum_cycle_test(f, tol);
  r.potential = pot.pass;
  r.zero_sum_equivalent = zs.pass;
  r.zs_potential_B = pot.pass && zs.pass;
  r.potential_violation = pot.worst_violation;
  r.zero_sum_violation = zs.worst_violation;

  const DecompositionResult main = decompose_main(f, limits);
  r.norm_total = norm(f);
  r.norm_NC = norm(main.component("NC"));
  r.norm_NZ = norm(main.component("NZ"));
  r.norm_B = norm(main.component("B"));

  const double scale = std::max(1.0, r.norm_total);
  auto disagree = [&](const CycleTestResult& test, double component_norm) {
    if (test.worst_violation <= 1e-12 * scale) return component_norm > 1e-7 * scale;
    return !test.pass && test.worst_violation > 1e-7 * scale && component_norm <= 1e-12 * scale;
  };
  if (disagree(pot, r.norm_NZ)) {
    throw InternalConsistencyError("potential cycle test disagrees with ||f_NZ|| = " +
                                   std::to_string(r.norm_NZ));
  }
  if (disagree(zs, r.norm_NC)) {
    throw InternalConsistencyError("zero-sum cycle test disagrees with ||f_NC|| = " +
                                   std::to_string(r.norm_NC));
  }
  return r;
}

}  // namespace gamedecomp
