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
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gamedecomp/error.hpp"
#include "gamedecomp/strategy_space.hpp"

namespace gamedecomp {

// Default tolerance for every boolean predicate in the library.
inline constexpr double kDefaultTolerance = 1e-9;

// A real function on the profile set, stored flat in StrategySpace order.
using Tensor = std::vector<double>;

// A finite normal-form game: one payoff tensor per player. Games form a real
// inner-product space; all arithmetic below is entrywise.
class Game {
 public:
  Game(StrategySpace space, std::vector<Tensor> payoffs)
      : space_(std::move(space)), payoffs_(std::move(payoffs)) {
    if (payoffs_.size() != space_.players()) {
      throw ShapeMismatch("payoff tensor count", payoffs_.size(), space_.players());
    }
    for (std::size_t i = 0; i < payoffs_.size(); ++i) {
      if (payoffs_[i].size() != space_.profile_count()) {
        throw ShapeMismatch("payoff entries of player " + std::to_string(i + 1),
                            payoffs_[i].size(), space_.profile_count());
      }
      for (double x : payoffs_[i]) {
        if (!std::isfinite(x)) {
          throw InvalidInput("non-finite payoff for player " + std::to_string(i + 1));
        }
      }
    }
  }

  static Game zero(StrategySpace space) {
    std::vector<Tensor> payoffs(space.players(), Tensor(space.profile_count(), 0.0));
    return Game(std::move(space), std::move(payoffs));
  }

  // Every player receives `v`.
  static Game common(StrategySpace space, const Tensor& v) {
    std::vector<Tensor> payoffs(space.players(), v);
    return Game(std::move(space), std::move(payoffs));
  }

  // Two-player game from row-major matrices: row = player 1's strategy.
  static Game bimatrix(std::initializer_list<std::initializer_list<double>> a,
                       std::initializer_list<std::initializer_list<double>> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.begin()->size() : 0;
    Tensor pa, pb;
    for (const auto& row : a) pa.insert(pa.end(), row.begin(), row.end());
    for (const auto& row : b) pb.insert(pb.end(), row.begin(), row.end());
    return Game(StrategySpace::with_sizes({rows, cols}), {std::move(pa), std::move(pb)});
  }

  const StrategySpace& space() const noexcept { return space_; }
  std::size_t players() const noexcept { return space_.players(); }
  std::size_t profile_count() const noexcept { return space_.profile_count(); }

  const Tensor& payoff(std::size_t player) const { return payoffs_.at(player); }
  const std::vector<Tensor>& payoffs() const noexcept { return payoffs_; }

  double operator()(std::size_t player, std::size_t profile_index) const {
    return payoffs_[player][profile_index];
  }
  double at(std::size_t player, std::initializer_list<std::size_t> profile) const {
    return payoffs_.at(player)[space_.index(profile)];
  }

  Game with_labels(StrategySpace space) const {
    require_same_shape(space_, space);
    return Game(std::move(space), payoffs_);
  }

 private:
  StrategySpace space_;
  std::vector<Tensor> payoffs_;
};

namespace detail {

template <class Op>
Game entrywise(const Game& f, const Game& g, Op op) {
  require_same_shape(f.space(), g.space());
  std::vector<Tensor> out(f.players(), Tensor(f.profile_count()));
  for (std::size_t i = 0; i < f.players(); ++i) {
    const Tensor& a = f.payoff(i);
    const Tensor& b = g.payoff(i);
    for (std::size_t s = 0; s < a.size(); ++s) out[i][s] = op(a[s], b[s]);
  }
  return Game(f.space(), std::move(out));
}

}  // namespace detail

inline Game add(const Game& f, const Game& g) {
  return detail::entrywise(f, g, [](double a, double b) { return a + b; });
}
inline Game sub(const Game& f, const Game& g) {
  return detail::entrywise(f, g, [](double a, double b) { return a - b; });
}
inline Game scale(const Game& f, double c) {
  std::vector<Tensor> out = f.payoffs();
  for (Tensor& t : out) {
    for (double& x : t) x *= c;
  }
  return Game(f.space(), std::move(out));
}

inline Game operator+(const Game& f, const Game& g) { return add(f, g); }
inline Game operator-(const Game& f, const Game& g) { return sub(f, g); }
inline Game operator*(double c, const Game& f) { return scale(f, c); }

// <f, g> = sum_i sum_s f^(i)(s) g^(i)(s) under the counting measure.
inline double inner_product(const Game& f, const Game& g) {
  require_same_shape(f.space(), g.space());
  double acc = 0.0;
  for (std::size_t i = 0; i < f.players(); ++i) {
    const Tensor& a = f.payoff(i);
    const Tensor& b = g.payoff(i);
    for (std::size_t s = 0; s < a.size(); ++s) acc += a[s] * b[s];
  }
  return acc;
}

inline double norm(const Game& f) { return std::sqrt(inner_product(f, f)); }

inline double max_abs_diff(const Game& f, const Game& g) {
  require_same_shape(f.space(), g.space());
  double worst = 0.0;
  for (std::size_t i = 0; i < f.players(); ++i) {
    for (std::size_t s = 0; s < f.profile_count(); ++s) {
      worst = std::max(worst, std::abs(f(i, s) - g(i, s)));
    }
  }
  return worst;
}

inline double max_abs(const Game& f) {
  double worst = 0.0;
  for (const Tensor& t : f.payoffs()) {
    for (double x : t) worst = std::max(worst, std::abs(x));
  }
  return worst;
}

}  // namespace gamedecomp
