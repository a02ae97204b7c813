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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gamedecomp/game.hpp"
#include "gamedecomp/mixed_profile.hpp"

namespace gamedecomp {

// Expected payoff of each pure strategy t_i of `player` against sigma_{-i}.
inline std::vector<double> pure_deviation_payoffs(const Game& f, const MixedProfile& sigma,
                                                  std::size_t player) {
  const StrategySpace& space = f.space();
  require_compatible(space, sigma);
  std::vector<double> out(space.size(player), 0.0);
  const Tensor& payoff = f.payoff(player);
  for (std::size_t s = 0; s < space.profile_count(); ++s) {
    double weight = 1.0;
    for (std::size_t k = 0; k < space.players() && weight != 0.0; ++k) {
      if (k != player) weight *= sigma.strategy(k)[space.coordinate(s, k)];
    }
    if (weight != 0.0) out[space.coordinate(s, player)] += weight * payoff[s];
  }
  return out;
}

// Multilinear extension: sum_s f^(i)(s) prod_k sigma_k(s_k).
inline double expected_payoff(const Game& f, const MixedProfile& sigma, std::size_t player) {
  const std::vector<double> row = pure_deviation_payoffs(f, sigma, player);
  const std::vector<double>& own = sigma.strategy(player);
  double acc = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) acc += own[k] * row[k];
  return acc;
}

// Best pure unilateral improvement available to `player`; never negative.
inline double deviation_gain(const Game& f, const MixedProfile& sigma, std::size_t player) {
  const std::vector<double> row = pure_deviation_payoffs(f, sigma, player);
  const std::vector<double>& own = sigma.strategy(player);
  double current = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) current += own[k] * row[k];
  const double best = *std::max_element(row.begin(), row.end());
  return std::max(0.0, best - current);
}

inline bool is_nash(const Game& f, const MixedProfile& sigma, double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < f.players(); ++i) {
    if (deviation_gain(f, sigma, i) > tol) return false;
  }
  return true;
}

// Largest spread of `tensor` along any fiber of `axis`. Zero iff the tensor
// does not depend on that coordinate.
inline double axis_variation(const StrategySpace& space, const Tensor& tensor, std::size_t axis) {
  double worst = 0.0;
  for_each_fiber(space, axis, [&](std::size_t base, std::size_t stride, std::size_t length) {
    double lo = tensor[base];
    double hi = tensor[base];
    for (std::size_t k = 1; k < length; ++k) {
      const double x = tensor[base + k * stride];
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    worst = std::max(worst, hi - lo);
  });
  return worst;
}

// Largest own-axis spread over all players; zero exactly for non-strategic games.
inline double own_axis_variation(const Game& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < f.players(); ++i) {
    worst = std::max(worst, axis_variation(f.space(), f.payoff(i), i));
  }
  return worst;
}

// f and g differ by a non-strategic game.
inline bool is_strategically_equivalent(const Game& f, const Game& g,
                                        double tol = kDefaultTolerance) {
  return own_axis_variation(sub(f, g)) <= tol;
}

}  // namespace gamedecomp
