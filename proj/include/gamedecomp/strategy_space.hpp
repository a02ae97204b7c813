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

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gamedecomp/error.hpp"

namespace gamedecomp {

// Finite product of labeled strategy sets, S = S_1 x ... x S_n, with the
// counting measure on each factor.
//
// Profiles are addressed by a flat index in row-major order with player 0
// outermost, so player n-1 has stride 1.
class StrategySpace {
 public:
  explicit StrategySpace(std::vector<std::vector<std::string>> labels)
      : labels_(std::move(labels)) {
    if (labels_.size() < 2) {
      throw InvalidInput("a game needs at least two players, got " +
                         std::to_string(labels_.size()));
    }
    sizes_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) {
        throw InvalidInput("player " + std::to_string(i + 1) + " has no strategies");
      }
      sizes_.push_back(labels_[i].size());
    }
    strides_.assign(sizes_.size(), 1);
    count_ = 1;
    for (std::size_t i = sizes_.size(); i-- > 0;) {
      strides_[i] = count_;
      if (count_ > std::numeric_limits<std::size_t>::max() / sizes_[i]) {
        throw InvalidInput("profile count overflows the native index type");
      }
      count_ *= sizes_[i];
    }
  }

  // Labels default to "1", "2", ... for every player.
  static StrategySpace with_sizes(std::span<const std::size_t> sizes) {
    std::vector<std::vector<std::string>> labels(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      for (std::size_t k = 0; k < sizes[i]; ++k) labels[i].push_back(std::to_string(k + 1));
    }
    return StrategySpace(std::move(labels));
  }
  static StrategySpace with_sizes(std::initializer_list<std::size_t> sizes) {
    return with_sizes(std::span<const std::size_t>(sizes.begin(), sizes.size()));
  }

  std::size_t players() const noexcept { return sizes_.size(); }
  std::size_t size(std::size_t player) const { return sizes_.at(player); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  const std::vector<std::string>& labels(std::size_t player) const { return labels_.at(player); }
  const std::vector<std::vector<std::string>>& all_labels() const noexcept { return labels_; }
  std::size_t profile_count() const noexcept { return count_; }
  std::size_t stride(std::size_t player) const { return strides_.at(player); }

  std::size_t coordinate(std::size_t index, std::size_t player) const {
    return index / strides_[player] % sizes_[player];
  }

  std::size_t index(std::span<const std::size_t> profile) const {
    if (profile.size() != players()) throw ShapeMismatch("profile length", profile.size(), players());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (profile[i] >= sizes_[i]) {
        throw InvalidInput("strategy " + std::to_string(profile[i]) + " out of range for player " +
                           std::to_string(i + 1));
      }
      idx += profile[i] * strides_[i];
    }
    return idx;
  }
  std::size_t index(std::initializer_list<std::size_t> profile) const {
    return index(std::span<const std::size_t>(profile.begin(), profile.size()));
  }

  std::vector<std::size_t> decode(std::size_t index) const {
    std::vector<std::size_t> profile(players());
    for (std::size_t i = 0; i < players(); ++i) profile[i] = coordinate(index, i);
    return profile;
  }

  // Index of the profile that agrees with `index` except player's coordinate is `strategy`.
  std::size_t replace(std::size_t index, std::size_t player, std::size_t strategy) const {
    return index - coordinate(index, player) * strides_[player] + strategy * strides_[player];
  }

  // Same player count and strategy counts; labels are not compared.
  bool same_shape(const StrategySpace& other) const noexcept { return sizes_ == other.sizes_; }

  bool operator==(const StrategySpace& other) const = default;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t count_ = 0;
};

inline void require_same_shape(const StrategySpace& a, const StrategySpace& b) {
  if (a.players() != b.players()) throw ShapeMismatch("player count", a.players(), b.players());
  for (std::size_t i = 0; i < a.players(); ++i) {
    if (a.size(i) != b.size(i)) {
      throw ShapeMismatch("strategy count of player " + std::to_string(i + 1), a.size(i), b.size(i));
    }
  }
}

// Calls fn(base, stride, length) once per fiber along `axis`; the fiber holds
// indices base, base + stride, ..., base + (length - 1) * stride.
template <class Fn>
void for_each_fiber(const StrategySpace& space, std::size_t axis, Fn&& fn) {
  const std::size_t stride = space.stride(axis);
  const std::size_t length = space.size(axis);
  const std::size_t block = stride * length;
  for (std::size_t outer = 0; outer < space.profile_count(); outer += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) fn(outer + inner, stride, length);
  }
}

}  // namespace gamedecomp
