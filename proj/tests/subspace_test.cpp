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


#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gamedecomp {
namespace {

Game table1_f_B() {
  const auto t = catalog::table1_components();
  return add(t.B, t.E);
}

TEST(ProjectorTest, ProjectEAndN) {
  const Game f = catalog::table1_game();
  const Game e = project_E(f);
  // Row averages of A per column: (4 + 1 - 1) / 3, (-1 + 2 + 0) / 3, (1 - 2 + 2) / 3.
  const std::vector<double> col_avg{4.0 / 3, 1.0 / 3, 1.0 / 3};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_NEAR(e(0, r * 3 + c), col_avg[c], 1e-15);
  }
  EXPECT_LE(max_abs(project_E(catalog::rps())), 1e-15);
  EXPECT_LE(max_abs(project_N(catalog::table1_components().E)), 1e-15);
  EXPECT_TRUE(is_normalized(project_N(f), 1e-14));
}

TEST(ProjectorTest, ProjectCAndZ) {
  EXPECT_LE(max_abs(project_Z(catalog::coordination(3))), 1e-15);
  EXPECT_LE(max_abs(project_C(catalog::matching_pennies())), 1e-15);
  const Game c = project_C(catalog::table1_game());
  EXPECT_EQ(c.at(0, {0, 1}), 0.0);
  EXPECT_TRUE(is_zero_sum(project_Z(catalog::table1_game()), 1e-14));
}

TEST(ProjectorTest, ProjectNC) {
  EXPECT_LE(max_abs_diff(project_NC(catalog::table1_game()), catalog::table1_components().C), 1e-12);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game zse = catalog::random_member(catalog::GameClass::kZPlusE, space, rng());
    EXPECT_LE(max_abs(project_NC(zse)), 1e-12);
    const Game g = catalog::random_member(catalog::GameClass::kNC, space, rng());
    EXPECT_LE(max_abs_diff(project_NC(g), g), 1e-12);
    EXPECT_TRUE(is_common_interest(g) && is_normalized(g));
  }
}

TEST(ProjectorTest, GenericProjectorExamples) {
  const Game f = catalog::table1_game();
  const Game nz = generic_project(constraints_for(Subspace::kNZ, f.space()), f);
  EXPECT_LE(max_abs_diff(nz, catalog::rps().with_labels(f.space())), 1e-12);
  EXPECT_LE(max_abs(generic_project(constraints_for(Subspace::kZ, f.space()), catalog::table1_components().C)),
            1e-12);
}

TEST(ProjectorTest, GenericAgreesWithClosedForms) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = oracle::random_game(space, rng);
    EXPECT_LE(max_abs_diff(generic_project(constraints_for(Subspace::kE, space), f), project_E(f)), 1e-9);
    EXPECT_LE(max_abs_diff(generic_project(constraints_for(Subspace::kN, space), f), project_N(f)), 1e-9);
    EXPECT_LE(max_abs_diff(generic_project(constraints_for(Subspace::kC, space), f), project_C(f)), 1e-9);
    EXPECT_LE(max_abs_diff(generic_project(constraints_for(Subspace::kZ, space), f), project_Z(f)), 1e-9);
    EXPECT_LE(max_abs_diff(generic_project(constraints_for(Subspace::kNC, space), f), project_NC(f)), 1e-9);
  }
}

TEST(ProjectorTest, NZMatchesAlternatingProjections) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const StrategySpace space = oracle::random_space(rng, 3, 3);
    const Game f = oracle::random_game(space, rng);
    EXPECT_LE(max_abs_diff(project_NZ(f), oracle::alternating_NZ(f)), 1e-9);
  }
}

TEST(ProjectorTest, CapacityGuard) {
  const StrategySpace space = StrategySpace::with_sizes({4, 4, 4});
  std::mt19937_64 rng(14);
  const Game f = oracle::random_game(space, rng);
  EXPECT_THROW(project_NZ(f, ProjectorLimits{100, 25'000'000}), CapacityExceeded);
  EXPECT_THROW(project_NZ(f, ProjectorLimits{50'000, 1000}), CapacityExceeded);
}

TEST(DecompositionTest, Elementary) {
  const DecompositionResult mp = decompose_elementary(catalog::matching_pennies());
  EXPECT_LE(max_abs(mp.component("C")), 1e-15);
  EXPECT_LE(max_abs_diff(mp.component("Z"), catalog::matching_pennies()), 1e-15);
  const DecompositionResult co = decompose_elementary(catalog::coordination(2));
  EXPECT_LE(max_abs(co.component("Z")), 1e-15);
  std::mt19937_64 rng(15);
  const Game f = oracle::random_game(StrategySpace::with_sizes({3, 2, 4}), rng);
  const DecompositionResult d = decompose_elementary(f);
  EXPECT_LE(std::abs(inner_product(d.component("N"), d.component("E"))), 1e-10);
  EXPECT_LE(d.residual, 1e-12);
}

TEST(DecompositionTest, MainOnWorkedExample) {
  const auto t = catalog::table1_components();
  const DecompositionResult d = decompose_main(catalog::table1_game());
  EXPECT_LE(max_abs_diff(d.component("NC"), t.C), 1e-12);
  EXPECT_LE(max_abs_diff(d.component("NZ"), t.Z), 1e-12);
  const Game expected_b = Game::bimatrix({{2, 1, 1}, {1, 0, 0}, {1, 0, 0}}, {{2, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  EXPECT_LE(max_abs_diff(d.component("B").with_labels(expected_b.space()), expected_b), 1e-12);
}

TEST(DecompositionTest, MainSpecialCases) {
  std::mt19937_64 rng(16);
  const StrategySpace space = StrategySpace::with_sizes({3, 3, 2});
  const Game e = catalog::random_member(catalog::GameClass::kE, space, 99);
  const DecompositionResult de = decompose_main(e);
  EXPECT_LE(max_abs(de.component("NC")), 1e-12);
  EXPECT_LE(max_abs(de.component("NZ")), 1e-12);
  EXPECT_LE(max_abs_diff(de.component("B"), e), 1e-12);
  const DecompositionResult dr = decompose_main(catalog::rps());
  EXPECT_LE(max_abs_diff(dr.component("NZ"), catalog::rps()), 1e-12);
  EXPECT_LE(max_abs(dr.component("NC")), 1e-12);
  EXPECT_LE(max_abs(dr.component("B")), 1e-12);
}

TEST(DecompositionTest, MainComponentsPassMembershipTests) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const DecompositionResult d = decompose_main(oracle::random_game(space, rng));
    EXPECT_TRUE(is_common_interest(d.component("NC")) && is_normalized(d.component("NC")));
    EXPECT_TRUE(is_zero_sum(d.component("NZ")) && is_normalized(d.component("NZ")));
    EXPECT_TRUE(potential_cycle_test(d.component("B")).pass);
    EXPECT_TRUE(zero_sum_cycle_test(d.component("B")).pass);
  }
}

TEST(DecompositionTest, Four) {
  const DecompositionResult d = decompose_four(catalog::table1_game());
  EXPECT_LE(max_abs_diff(add(d.component("NB"), d.component("E")), table1_f_B()), 1e-12);
  std::mt19937_64 rng(18);
  const StrategySpace space = StrategySpace::with_sizes({2, 3, 3});
  const Game e = catalog::random_member(catalog::GameClass::kE, space, 5);
  const DecompositionResult de = decompose_four(e);
  EXPECT_LE(max_abs(de.component("NB")), 1e-12);
  EXPECT_LE(max_abs_diff(de.component("E"), e), 1e-12);
  for (int trial = 0; trial < 30; ++trial) {
    const StrategySpace s = oracle::random_space(rng);
    EXPECT_TRUE(is_normalized(decompose_four(oracle::random_game(s, rng)).component("NB"), 1e-10));
  }
}

TEST(DecompositionTest, Candogan) {
  const DecompositionResult r = decompose_candogan(catalog::rps());
  EXPECT_LE(max_abs_diff(r.component("harmonic"), catalog::rps()), 1e-12);
  EXPECT_LE(max_abs(r.component("potential")), 1e-12);
  EXPECT_LE(max_abs(r.component("nonstrategic")), 1e-12);
  const Game coord = project_N(catalog::coordination(3));
  EXPECT_LE(max_abs_diff(decompose_candogan(coord).component("potential"), coord), 1e-12);
  EXPECT_LE(max_abs_diff(decompose_candogan(catalog::table1_game()).component("harmonic"),
                         catalog::table1_components().Z),
            1e-12);
}

TEST(DecompositionTest, SchemeParsing) {
  EXPECT_EQ(parse_scheme("candogan"), Scheme::kCandogan);
  EXPECT_THROW(parse_scheme("five"), InvalidInput);
}

// Invariants.

TEST(SubspaceProperties, ProjectorsIdempotentAndSelfAdjoint) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = oracle::random_game(space, rng), g = oracle::random_game(space, rng);
    for (Subspace s : {Subspace::kC, Subspace::kZ, Subspace::kN, Subspace::kE, Subspace::kNC, Subspace::kNZ}) {
      const Projector p = Projector::for_subspace(s, space);
      const Game pf = p(f);
      EXPECT_LE(norm(sub(p(pf), pf)), 1e-10 * std::max(1.0, norm(f))) << to_string(s);
      EXPECT_NEAR(inner_product(pf, g), inner_product(f, p(g)), 1e-10) << to_string(s);
    }
  }
}

TEST(SubspaceProperties, DecompositionsAreOrthogonalAndComplete) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = scale(oracle::random_game(space, rng), 5.0);
    const double f2 = inner_product(f, f);
    for (Scheme scheme : {Scheme::kMain, Scheme::kFour, Scheme::kCandogan}) {
      const DecompositionResult d = decompose(f, scheme);
      double sum_sq = 0.0;
      Game total = Game::zero(space);
      for (std::size_t a = 0; a < d.components.size(); ++a) {
        sum_sq += inner_product(d.components[a].game, d.components[a].game);
        total = add(total, d.components[a].game);
        for (std::size_t b = a + 1; b < d.components.size(); ++b) {
          EXPECT_LE(std::abs(inner_product(d.components[a].game, d.components[b].game)), 1e-9 * f2);
        }
      }
      EXPECT_LE(norm(sub(f, total)), 1e-9 * std::max(1.0, norm(f)));
      EXPECT_LE(d.residual, 1e-9 * std::max(1.0, norm(f)));
      EXPECT_LE(std::abs(f2 - sum_sq), 1e-8 * f2);
    }
  }
}

TEST(SubspaceProperties, PerturbingOneComponentChangesOnlyThatComponent) {
  std::mt19937_64 rng(23);
  const std::vector<std::pair<std::string, catalog::GameClass>> parts{
      {"NC", catalog::GameClass::kNC}, {"NZ", catalog::GameClass::kNZ}, {"B", catalog::GameClass::kB}};
  for (int trial = 0; trial < 30; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = oracle::random_game(space, rng);
    const DecompositionResult base = decompose_main(f);
    for (const auto& [name, cls] : parts) {
      const Game delta = catalog::random_member(cls, space, rng());
      const DecompositionResult moved = decompose_main(add(f, delta));
      for (const auto& c : base.components) {
        const Game expected = c.name == name ? add(c.game, delta) : c.game;
        EXPECT_LE(max_abs_diff(moved.component(c.name), expected), 1e-10) << name << " -> " << c.name;
      }
    }
  }
}

TEST(SubspaceProperties, ComplementarityOfNCNormAndZeroSumCycles) {
  std::mt19937_64 rng(24);
  for (catalog::GameClass cls : {catalog::GameClass::kAny, catalog::GameClass::kZPlusE, catalog::GameClass::kNC,
                                 catalog::GameClass::kB}) {
    for (int trial = 0; trial < 30; ++trial) {
      const StrategySpace space = oracle::random_space(rng);
      const Game f = catalog::random_member(cls, space, rng());
      const bool small = norm(project_NC(f)) <= 1e-8 * std::max(1.0, norm(f));
      EXPECT_EQ(small, zero_sum_cycle_test(f, 1e-8).pass) << catalog::to_string(cls);
    }
  }
}

}  // namespace
}  // namespace gamedecomp
