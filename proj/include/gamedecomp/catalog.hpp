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

// Builders for the standard example games, discretized continuous games and
// random members of each subspace.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"
#include "gamedecomp/projection.hpp"

namespace gamedecomp::catalog {

namespace detail {

inline Game labeled_bimatrix(std::vector<std::string> rows, std::vector<std::string> cols,
                             const std::vector<std::vector<double>>& a,
                             const std::vector<std::vector<double>>& b) {
  Tensor pa, pb;
  for (const auto& r : a) pa.insert(pa.end(), r.begin(), r.end());
  for (const auto& r : b) pb.insert(pb.end(), r.begin(), r.end());
  return Game(StrategySpace({std::move(rows), std::move(cols)}), {std::move(pa), std::move(pb)});
}

inline std::vector<std::string> numbered(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The 3x3 symmetric example game and its printed four-way split.

inline Game table1_game() {
  return detail::labeled_bimatrix(detail::numbered(3), detail::numbered(3),
                                  {{4, -1, 1}, {1, 2, -2}, {-1, 0, 2}},
                                  {{4, 1, -1}, {-1, 2, 0}, {1, -2, 2}});
}

struct Table1Components {
  Game C;  // normalized common interest
  Game Z;  // normalized zero-sum (rock-paper-scissors)
  Game B;  // first strategy dominant
  Game E;  // non-strategic
};

// Exactly as printed. B and E are a strategically equivalent display split,
// not the orthogonal one; only their sum matches the orthogonal B-part.
inline Table1Components table1_components() {
  auto n3 = detail::numbered(3);
  return {
      detail::labeled_bimatrix(n3, n3, {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}},
                               {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
      detail::labeled_bimatrix(n3, n3, {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}},
                               {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}),
      detail::labeled_bimatrix(n3, n3, {{1, 1, 1}, {0, 0, 0}, {0, 0, 0}},
                               {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}),
      detail::labeled_bimatrix(n3, n3, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},
                               {{1, 1, 1}, {0, 0, 0}, {0, 0, 0}}),
  };
}

// ---------------------------------------------------------------------------
// Classic small games.

inline Game rps() {
  const std::vector<std::string> l{"R", "P", "S"};
  return detail::labeled_bimatrix(l, l, {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}},
                                  {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
}

inline Game matching_pennies() {
  const std::vector<std::string> l{"H", "T"};
  return detail::labeled_bimatrix(l, l, {{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
}

// Pure coordination: both players get 1 on the diagonal, 0 elsewhere.
inline Game coordination(std::size_t k) {
  if (k < 1) throw InvalidInput("coordination game needs at least one strategy");
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1.0;
  return detail::labeled_bimatrix(detail::numbered(k), detail::numbered(k), m, m);
}

// Symmetric prisoner's dilemma with payoffs (C,C) = R, (C,D) = S, (D,C) = T,
// (D,D) = P to the row player.
inline Game prisoners_dilemma(double t, double r, double p, double s) {
  const std::vector<std::string> l{"C", "D"};
  return detail::labeled_bimatrix(l, l, {{r, s}, {t, p}}, {{r, t}, {s, p}});
}

// T - P + S - R = 0, which makes the dilemma zero-sum equivalent.
inline Game separable_pd() { return prisoners_dilemma(5, 3, 2, 0); }

inline Game standard_pd() { return prisoners_dilemma(5, 3, 1, 0); }

// ---------------------------------------------------------------------------
// Discretized quasi-Cournot oligopoly with linear demand and linear costs:
//   f^(i)(s) = (alpha - beta * sum_j s_j) s_i - c_i s_i.

struct CournotSpec {
  std::size_t players = 3;
  double alpha = 10.0;
  double beta = 1.0;
  std::vector<double> costs{1.0, 1.0, 1.0};
  std::vector<double> grid{0.0, 1.0, 2.0, 3.0, 4.0};

  void validate() const {
    if (players < 2) throw InvalidInput("cournot needs at least two players");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw InvalidInput("cournot needs alpha > 0 and beta > 0");
    if (costs.size() != players) throw ShapeMismatch("cournot cost count", costs.size(), players);
    for (double c : costs) {
      if (!(c >= 0.0)) throw InvalidInput("cournot costs must be nonnegative");
    }
    if (grid.empty()) throw InvalidInput("cournot grid is empty");
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (grid[k] < 0.0) throw InvalidInput("cournot quantities must be nonnegative");
      if (k > 0 && !(grid[k] > grid[k - 1])) throw InvalidInput("cournot grid must be strictly increasing");
    }
  }
};

inline std::vector<std::string> grid_labels(const std::vector<double>& grid) {
  std::vector<std::string> out;
  for (double x : grid) {
    std::string s = std::to_string(x);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    out.push_back(s);
  }
  return out;
}

inline Game cournot(const CournotSpec& spec) {
  spec.validate();
  StrategySpace space(std::vector<std::vector<std::string>>(spec.players, grid_labels(spec.grid)));
  std::vector<Tensor> payoffs(spec.players, Tensor(space.profile_count()));
  for (std::size_t s = 0; s < space.profile_count(); ++s) {
    double total = 0.0;
    for (std::size_t j = 0; j < spec.players; ++j) total += spec.grid[space.coordinate(s, j)];
    for (std::size_t i = 0; i < spec.players; ++i) {
      const double q = spec.grid[space.coordinate(s, i)];
      payoffs[i][s] = (spec.alpha - spec.beta * total) * q - spec.costs[i] * q;
    }
  }
  return Game(std::move(space), std::move(payoffs));
}

// ---------------------------------------------------------------------------
// Discretized contest with ratio success function and linear costs:
//   f^(i)(s) = s_i / (sum_j s_j) v - c_i s_i.

struct ContestSpec {
  std::size_t players = 3;
  double prize = 1.0;
  std::vector<double> costs{1.0, 1.0, 1.0};
  std::vector<double> grid;

  void validate() const {
    if (players < 2) throw InvalidInput("contest needs at least two players");
    if (!(prize > 0.0)) throw InvalidInput("contest prize must be positive");
    if (costs.size() != players) throw ShapeMismatch("contest cost count", costs.size(), players);
    for (double c : costs) {
      if (!(c > 0.0)) throw InvalidInput("contest costs must be positive");
    }
    if (grid.empty()) throw InvalidInput("contest grid is empty");
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (!(grid[k] > 0.0)) throw InvalidInput("contest grid must exclude zero effort");
      if (k > 0 && !(grid[k] > grid[k - 1])) throw InvalidInput("contest grid must be strictly increasing");
    }
  }
};

inline Game contest(const ContestSpec& spec) {
  spec.validate();
  StrategySpace space(std::vector<std::vector<std::string>>(spec.players, grid_labels(spec.grid)));
  std::vector<Tensor> payoffs(spec.players, Tensor(space.profile_count()));
  for (std::size_t s = 0; s < space.profile_count(); ++s) {
    double total = 0.0;
    for (std::size_t j = 0; j < spec.players; ++j) total += spec.grid[space.coordinate(s, j)];
    for (std::size_t i = 0; i < spec.players; ++i) {
      const double e = spec.grid[space.coordinate(s, i)];
      payoffs[i][s] = e / total * spec.prize - spec.costs[i] * e;
    }
  }
  return Game(std::move(space), std::move(payoffs));
}

// Closed-form deviation function of the continuous contest at effort profile s:
//   (sum_i c_i)(sum_l s_l) - 2 sum_i sqrt(c_i v) sqrt(sum_{l != i} s_l) + (n - 1) v.
// Valid where every interior best response is nonnegative.
inline double contest_phi_closed_form(const ContestSpec& spec, const std::vector<double>& efforts) {
  if (efforts.size() != spec.players) throw ShapeMismatch("effort profile length", efforts.size(), spec.players);
  double total = 0.0, cost_sum = 0.0;
  for (std::size_t i = 0; i < spec.players; ++i) {
    total += efforts[i];
    cost_sum += spec.costs[i];
  }
  double root_terms = 0.0;
  for (std::size_t i = 0; i < spec.players; ++i) {
    root_terms += std::sqrt(spec.costs[i] * spec.prize) * std::sqrt(total - efforts[i]);
  }
  return cost_sum * total - 2.0 * root_terms + static_cast<double>(spec.players - 1) * spec.prize;
}

// Interior best response to opponents' total effort x: sqrt(v x / c) - x.
inline double contest_best_response(double prize, double cost, double others) {
  return std::sqrt(prize * others / cost) - others;
}

// ---------------------------------------------------------------------------
// Bayesian games in type-agent form.

// Two-player Bayesian game with k types per side. type_games[t1][t2] is the
// two-player game played when the types are (t1, t2); all share one shape.
struct BayesianSpec {
  std::size_t types = 2;
  std::vector<double> p;  // type probabilities of the first player
  std::vector<double> q;  // type probabilities of the second player
  std::vector<std::vector<Game>> type_games;

  void validate() const {
    if (types < 1) throw InvalidInput("bayesian game needs at least one type per side");
    if (p.size() != types) throw ShapeMismatch("first-player type probabilities", p.size(), types);
    if (q.size() != types) throw ShapeMismatch("second-player type probabilities", q.size(), types);
    for (const auto* probs : {&p, &q}) {
      double sum = 0.0;
      for (double x : *probs) {
        if (!(x >= 0.0)) throw InvalidInput("type probabilities must be nonnegative");
        sum += x;
      }
      if (std::abs(sum - 1.0) > 1e-12) throw InvalidInput("type probabilities must sum to 1");
    }
    if (type_games.size() != types) throw ShapeMismatch("type game rows", type_games.size(), types);
    for (const auto& row : type_games) {
      if (row.size() != types) throw ShapeMismatch("type game columns", row.size(), types);
      for (const Game& g : row) {
        if (g.players() != 2) throw InvalidInput("type games must be two-player games");
        require_same_shape(g.space(), type_games[0][0].space());
      }
    }
  }
};

// 2k-player game: players 0..k-1 are the first player's types, k..2k-1 the
// second player's. Each type agent's payoff is its ex-ante weighted sum over
// the opposing type agents.
inline Game bayesian_embed(const BayesianSpec& spec) {
  spec.validate();
  const std::size_t k = spec.types;
  const StrategySpace& base = spec.type_games[0][0].space();
  const std::size_t ma = base.size(0);
  const std::size_t mb = base.size(1);
  std::vector<std::vector<std::string>> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(base.labels(0));
  for (std::size_t i = 0; i < k; ++i) labels.push_back(base.labels(1));
  StrategySpace space(std::move(labels));
  std::vector<Tensor> payoffs(2 * k, Tensor(space.profile_count(), 0.0));
  for (std::size_t s = 0; s < space.profile_count(); ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t si = space.coordinate(s, i);
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t sl = space.coordinate(s, k + l);
        const Game& g = spec.type_games[i][l];
        payoffs[i][s] += g(0, si * mb + sl) * spec.p[i] * spec.q[l];
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t si = space.coordinate(s, k + i);
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t sl = space.coordinate(s, l);
        const Game& g = spec.type_games[l][i];
        payoffs[k + i][s] += g(1, sl * mb + si) * spec.p[l] * spec.q[i];
      }
    }
  }
  (void)ma;
  return Game(std::move(space), std::move(payoffs));
}

// Two types per side: the first player's types are payoff-irrelevant with
// probabilities (1/2, 1/2); the second player is a common-interest partner
// with probability p and a conflicting one with probability 1 - p.
inline BayesianSpec partner_uncertainty_spec(double a, double b, double p) {
  const std::vector<std::string> rows{"s1", "s2"};
  const std::vector<std::string> cols{"s1'", "s2'"};
  Game common = detail::labeled_bimatrix(rows, cols, {{a, 0}, {0, b}}, {{a, 0}, {0, b}});
  Game conflict = detail::labeled_bimatrix(rows, cols, {{a, 0}, {0, b}}, {{b, 0}, {0, a}});
  BayesianSpec spec;
  spec.types = 2;
  spec.p = {0.5, 0.5};
  spec.q = {p, 1.0 - p};
  spec.type_games = {{common, conflict}, {common, conflict}};
  return spec;
}

// ---------------------------------------------------------------------------
// Random members of each class.

enum class GameClass { kAny, kC, kZ, kN, kE, kNC, kNZ, kB, kCPlusE, kZPlusE };

inline const char* to_string(GameClass c) {
  switch (c) {
    case GameClass::kAny: return "any";
    case GameClass::kC: return "C";
    case GameClass::kZ: return "Z";
    case GameClass::kN: return "N";
    case GameClass::kE: return "E";
    case GameClass::kNC: return "NC";
    case GameClass::kNZ: return "NZ";
    case GameClass::kB: return "B";
    case GameClass::kCPlusE: return "C+E";
    case GameClass::kZPlusE: return "Z+E";
  }
  return "?";
}

inline GameClass parse_game_class(std::string_view name) {
  for (GameClass c : {GameClass::kAny, GameClass::kC, GameClass::kZ, GameClass::kN, GameClass::kE,
                      GameClass::kNC, GameClass::kNZ, GameClass::kB, GameClass::kCPlusE,
                      GameClass::kZPlusE}) {
    if (name == to_string(c)) return c;
  }
  if (name == "D+E") return GameClass::kB;
  throw InvalidInput("unknown game class '" + std::string(name) + "'");
}

inline Game random_game(const StrategySpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Tensor> payoffs(space.players(), Tensor(space.profile_count()));
  for (Tensor& t : payoffs) {
    for (double& x : t) x = dist(rng);
  }
  return Game(space, std::move(payoffs));
}

// Deterministic for a given (class, space, seed).
inline Game random_member(GameClass cls, const StrategySpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (cls) {
    case GameClass::kAny: return random_game(space, rng);
    case GameClass::kC: return project_C(random_game(space, rng));
    case GameClass::kZ: return project_Z(random_game(space, rng));
    case GameClass::kN: return project_N(random_game(space, rng));
    case GameClass::kE: return project_E(random_game(space, rng));
    case GameClass::kNC: return project_NC(random_game(space, rng));
    case GameClass::kNZ: return project_NZ(random_game(space, rng));
    case GameClass::kB: {
      // f^(i) = sum_{l != i} zeta_l + e with zeta_l independent of s_l.
      const Game raw = random_game(space, rng);
      std::vector<Tensor> zeta(space.players());
      for (std::size_t l = 0; l < space.players(); ++l) zeta[l] = axis_average(space, raw.payoff(l), l);
      std::vector<Tensor> payoffs(space.players(), Tensor(space.profile_count(), 0.0));
      for (std::size_t i = 0; i < space.players(); ++i) {
        for (std::size_t l = 0; l < space.players(); ++l) {
          if (l == i) continue;
          for (std::size_t s = 0; s < space.profile_count(); ++s) payoffs[i][s] += zeta[l][s];
        }
      }
      return add(Game(space, std::move(payoffs)), project_E(random_game(space, rng)));
    }
    case GameClass::kCPlusE: {
      Game c = project_C(random_game(space, rng));
      return add(c, project_E(random_game(space, rng)));
    }
    case GameClass::kZPlusE: {
      Game z = project_Z(random_game(space, rng));
      return add(z, project_E(random_game(space, rng)));
    }
  }
  throw InvalidInput("unknown game class");
}

}  // namespace gamedecomp::catalog
