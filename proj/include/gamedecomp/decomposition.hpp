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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"
#include "gamedecomp/projection.hpp"

namespace gamedecomp {

enum class Scheme { kElementary, kMain, kFour, kCandogan };

inline const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kElementary: return "elementary";
    case Scheme::kMain: return "main";
    case Scheme::kFour: return "four";
    case Scheme::kCandogan: return "candogan";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view name) {
  if (name == "elementary") return Scheme::kElementary;
  if (name == "main") return Scheme::kMain;
  if (name == "four") return Scheme::kFour;
  if (name == "candogan") return Scheme::kCandogan;
  throw InvalidInput("unknown decomposition scheme '" + std::string(name) + "'");
}

struct Component {
  std::string name;
  Game game;
};

struct DecompositionResult {
  Scheme scheme;
  std::vector<Component> components;
  double residual = 0.0;  // ||f - sum of components||

  const Game& component(std::string_view name) const {
    for (const auto& c : components) {
      if (c.name == name) return c.game;
    }
    throw InvalidInput("no component named '" + std::string(name) + "'");
  }
};

namespace detail {

inline double reconstruction_residual(const Game& f, const std::vector<Component>& parts) {
  Game sum = Game::zero(f.space());
  for (const auto& c : parts) sum = add(sum, c.game);
  return norm(sub(f, sum));
}

// Orthogonality, reconstruction and Pythagoras for an orthogonal split.
// Throws InternalConsistencyError: a failure here means a projector is wrong.
inline double check_orthogonal_split(const Game& f, const std::vector<Component>& parts) {
  const double f2 = inner_product(f, f);
  const double scale = std::max(1.0, f2);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      const double ip = inner_product(parts[a].game, parts[b].game);
      if (std::abs(ip) > 1e-9 * scale) {
        throw InternalConsistencyError("components " + parts[a].name + " and " + parts[b].name +
                                       " are not orthogonal (inner product " + std::to_string(ip) + ")");
      }
    }
  }
  const double residual = reconstruction_residual(f, parts);
  if (residual > 1e-9 * std::max(1.0, std::sqrt(f2))) {
    throw InternalConsistencyError("components do not reconstruct the game (residual " +
                                   std::to_string(residual) + ")");
  }
  double sum_sq = 0.0;
  for (const auto& c : parts) sum_sq += inner_product(c.game, c.game);
  if (std::abs(f2 - sum_sq) > 1e-8 * f2) {
    throw InternalConsistencyError("Pythagoras identity fails: " + std::to_string(f2) + " vs " +
                                   std::to_string(sum_sq));
  }
  return residual;
}

}  // namespace detail

// f = (C-part + Z-part) and f = (N-part + E-part). The two splits are each
// orthogonal; components from different splits are not orthogonal to each
// other. `residual` is the larger of the two reconstruction residuals.
inline DecompositionResult decompose_elementary(const Game& f) {
  std::vector<Component> cz{{"C", project_C(f)}, {"Z", project_Z(f)}};
  std::vector<Component> ne{{"N", project_N(f)}, {"E", project_E(f)}};
  const double r1 = detail::check_orthogonal_split(f, cz);
  const double r2 = detail::check_orthogonal_split(f, ne);
  DecompositionResult out{Scheme::kElementary, {}, std::max(r1, r2)};
  for (auto& c : cz) out.components.push_back(std::move(c));
  for (auto& c : ne) out.components.push_back(std::move(c));
  return out;
}

// f = f_NC + f_NZ + f_B with N ∩ C, N ∩ Z and their orthogonal complement B.
inline DecompositionResult decompose_main(const Game& f, ProjectorLimits limits = {}) {
  Game nc = project_NC(f);
  Game nz = project_NZ(f, limits);
  Game b = sub(sub(f, nc), nz);
  std::vector<Component> parts{{"NC", std::move(nc)}, {"NZ", std::move(nz)}, {"B", std::move(b)}};
  const double residual = detail::check_orthogonal_split(f, parts);
  return {Scheme::kMain, std::move(parts), residual};
}

// Refines the main split by separating the non-strategic part of f_B:
// f = f_NC + f_NZ + f_NB + f_E with f_E = Lambda f.
inline DecompositionResult decompose_four(const Game& f, ProjectorLimits limits = {}) {
  DecompositionResult main = decompose_main(f, limits);
  Game e = project_E(f);
  Game nb = sub(main.component("B"), e);
  std::vector<Component> parts{{"NC", main.component("NC")},
                               {"NZ", main.component("NZ")},
                               {"NB", std::move(nb)},
                               {"E", std::move(e)}};
  const double residual = detail::check_orthogonal_split(f, parts);
  return {Scheme::kFour, std::move(parts), residual};
}

// Potential / non-strategic / harmonic split.
inline DecompositionResult decompose_candogan(const Game& f, ProjectorLimits limits = {}) {
  DecompositionResult four = decompose_four(f, limits);
  std::vector<Component> parts{{"potential", add(four.component("NC"), four.component("NB"))},
                               {"nonstrategic", four.component("E")},
                               {"harmonic", four.component("NZ")}};
  const double residual = detail::check_orthogonal_split(f, parts);
  return {Scheme::kCandogan, std::move(parts), residual};
}

inline DecompositionResult decompose(const Game& f, Scheme scheme, ProjectorLimits limits = {}) {
  switch (scheme) {
    case Scheme::kElementary: return decompose_elementary(f);
    case Scheme::kMain: return decompose_main(f, limits);
    case Scheme::kFour: return decompose_four(f, limits);
    case Scheme::kCandogan: return decompose_candogan(f, limits);
  }
  throw InvalidInput("unknown decomposition scheme");
}

}  // namespace gamedecomp
