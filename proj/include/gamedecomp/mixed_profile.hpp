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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gamedecomp/error.hpp"
#include "gamedecomp/strategy_space.hpp"

namespace gamedecomp {

inline constexpr double kProfileSumTolerance = 1e-12;
inline constexpr double kProfileClampTolerance = 1e-15;

// One probability vector per player. Entries in [-1e-15, 0) are clamped to
// zero on construction; anything more negative, or a vector whose sum is off
// by more than 1e-12, is rejected.
class MixedProfile {
 public:
  explicit MixedProfile(std::vector<std::vector<double>> probabilities)
      : probabilities_(std::move(probabilities)) {
    for (std::size_t i = 0; i < probabilities_.size(); ++i) {
      auto& sigma = probabilities_[i];
      if (sigma.empty()) {
        throw InvalidInput("empty mixed strategy for player " + std::to_string(i + 1));
      }
      double sum = 0.0;
      for (double& p : sigma) {
        if (!std::isfinite(p)) {
          throw InvalidInput("non-finite probability for player " + std::to_string(i + 1));
        }
        if (p < 0.0) {
          if (p < -kProfileClampTolerance) {
            throw InvalidInput("negative probability " + std::to_string(p) + " for player " +
                               std::to_string(i + 1));
          }
          p = 0.0;
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kProfileSumTolerance) {
        throw InvalidInput("mixed strategy of player " + std::to_string(i + 1) + " sums to " +
                           std::to_string(sum));
      }
    }
  }

  static MixedProfile uniform(const StrategySpace& space) {
    std::vector<std::vector<double>> probs(space.players());
    for (std::size_t i = 0; i < space.players(); ++i) {
      probs[i].assign(space.size(i), 1.0 / static_cast<double>(space.size(i)));
    }
    return MixedProfile(std::move(probs));
  }

  static MixedProfile pure(const StrategySpace& space, std::span<const std::size_t> profile) {
    if (profile.size() != space.players()) {
      throw ShapeMismatch("profile length", profile.size(), space.players());
    }
    std::vector<std::vector<double>> probs(space.players());
    for (std::size_t i = 0; i < space.players(); ++i) {
      if (profile[i] >= space.size(i)) throw InvalidInput("pure strategy out of range");
      probs[i].assign(space.size(i), 0.0);
      probs[i][profile[i]] = 1.0;
    }
    return MixedProfile(std::move(probs));
  }
  static MixedProfile pure(const StrategySpace& space, std::initializer_list<std::size_t> profile) {
    return pure(space, std::span<const std::size_t>(profile.begin(), profile.size()));
  }

  std::size_t players() const noexcept { return probabilities_.size(); }
  const std::vector<double>& strategy(std::size_t player) const { return probabilities_.at(player); }
  const std::vector<std::vector<double>>& probabilities() const noexcept { return probabilities_; }

  MixedProfile with_strategy(std::size_t player, std::vector<double> sigma) const {
    auto probs = probabilities_;
    probs.at(player) = std::move(sigma);
    return MixedProfile(std::move(probs));
  }

 private:
  std::vector<std::vector<double>> probabilities_;
};

inline void require_compatible(const StrategySpace& space, const MixedProfile& sigma) {
  if (sigma.players() != space.players()) {
    throw ShapeMismatch("player count", sigma.players(), space.players());
  }
  for (std::size_t i = 0; i < space.players(); ++i) {
    if (sigma.strategy(i).size() != space.size(i)) {
      throw ShapeMismatch("strategy count of player " + std::to_string(i + 1),
                          sigma.strategy(i).size(), space.size(i));
    }
  }
}

inline double max_abs_diff(const MixedProfile& a, const MixedProfile& b) {
  if (a.players() != b.players()) throw ShapeMismatch("player count", a.players(), b.players());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.players(); ++i) {
    const auto& x = a.strategy(i);
    const auto& y = b.strategy(i);
    if (x.size() != y.size()) throw ShapeMismatch("strategy count", x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
  }
  return worst;
}

}  // namespace gamedecomp
