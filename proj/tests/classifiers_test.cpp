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

TEST(PredicateTest, Examples) {
  const Game c = catalog::table1_components().C;
  EXPECT_TRUE(is_common_interest(c));
  EXPECT_TRUE(is_normalized(c));
  const Game zero = Game::zero(StrategySpace::with_sizes({2, 3, 2}));
  EXPECT_TRUE(is_common_interest(zero) && is_zero_sum(zero) && is_normalized(zero) && is_non_strategic(zero));
  const Game mp = catalog::matching_pennies();
  EXPECT_TRUE(is_zero_sum(mp));
  EXPECT_TRUE(is_normalized(mp));
  EXPECT_FALSE(is_common_interest(mp));
  EXPECT_TRUE(is_non_strategic(catalog::table1_components().E));
  EXPECT_FALSE(is_non_strategic(catalog::table1_components().B));
}

TEST(PotentialCycleTest, Examples) {
  const CycleTestResult c = potential_cycle_test(catalog::table1_components().C);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.worst_violation, 0.0);
  const CycleTestResult r = potential_cycle_test(catalog::rps());
  EXPECT_FALSE(r.pass);
  EXPECT_DOUBLE_EQ(r.worst_violation, 6.0);
  EXPECT_DOUBLE_EQ(oracle::potential_violation(catalog::rps()), 6.0);
  EXPECT_TRUE(potential_cycle_test(catalog::cournot({})).pass);
}

TEST(PotentialCycleTest, MatchesBruteCycleScan) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = oracle::random_game(space, rng);
    EXPECT_NEAR(potential_cycle_test(f).worst_violation, oracle::potential_violation(f), 1e-12);
    const Game p = catalog::random_member(catalog::GameClass::kCPlusE, space, rng());
    EXPECT_LE(oracle::potential_violation(p), 1e-12);
    EXPECT_TRUE(potential_cycle_test(p).pass);
  }
}

TEST(ZeroSumCycleTest, Examples) {
  EXPECT_TRUE(zero_sum_cycle_test(catalog::rps()).pass);
  const CycleTestResult co = zero_sum_cycle_test(catalog::coordination(2));
  EXPECT_FALSE(co.pass);
  EXPECT_DOUBLE_EQ(co.worst_violation, 4.0);
  EXPECT_DOUBLE_EQ(oracle::zero_sum_violation(catalog::coordination(2)), 4.0);
  EXPECT_TRUE(zero_sum_cycle_test(catalog::separable_pd()).pass);
}

TEST(ZeroSumCycleTest, MatchesBruteCubeScan) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const StrategySpace space = oracle::random_space(rng, 3, 3);
    const Game f = oracle::random_game(space, rng);
    EXPECT_NEAR(zero_sum_cycle_test(f).worst_violation, oracle::zero_sum_violation(f), 1e-12);
    const Game z = catalog::random_member(catalog::GameClass::kZPlusE, space, rng());
    EXPECT_LE(oracle::zero_sum_violation(z), 1e-12);
  }
}

TEST(SymmetricZeroSumTest, Examples) {
  EXPECT_TRUE(symmetric_zero_sum_test(catalog::rps()));
  EXPECT_FALSE(symmetric_zero_sum_test(catalog::standard_pd()));
  EXPECT_TRUE(symmetric_zero_sum_test(catalog::separable_pd()));
  try {
    symmetric_zero_sum_test(Game::bimatrix({{1, 0}, {0, 0}}, {{0, 0}, {0, 0}}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.code(), "asymmetric");
  }
}

TEST(SymmetricZeroSumTest, AgreesWithCycleTestOnSymmetricGames) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 2 + trial % 3;
    Tensor a(k * k), b(k * k);
    for (double& x : a) x = u(rng);
    // Half the draws are built to satisfy the condition: a(s,t) = x(s) + y(t) + g(s,t) with g symmetric.
    if (trial % 2 == 0) {
      std::vector<double> x(k), y(k);
      for (auto& v : x) v = u(rng);
      for (auto& v : y) v = u(rng);
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = 0; t <= s; ++t) {
          const double g = u(rng);
          a[s * k + t] = x[s] + y[t] + g;
          a[t * k + s] = x[t] + y[s] + g;
        }
      }
    }
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) b[s * k + t] = a[t * k + s];
    }
    const Game f(StrategySpace::with_sizes({k, k}), {a, b});
    EXPECT_EQ(symmetric_zero_sum_test(f), zero_sum_cycle_test(f).pass);
  }
}

TEST(AxisIndependenceTest, Examples) {
  const Game bayes = catalog::bayesian_embed(catalog::partner_uncertainty_spec(2.0, 1.0, 0.3));
  EXPECT_TRUE(axis_independence_test(bayes).pass);
  const Game e = catalog::table1_components().E;
  const AxisIndependenceResult re = axis_independence_test(e);
  EXPECT_TRUE(re.pass);
  ASSERT_EQ(re.witness.size(), 2u);
  EXPECT_EQ(re.witness[0], 0u);
  EXPECT_EQ(re.witness[1], 1u);
  const AxisIndependenceResult rr = axis_independence_test(catalog::rps());
  EXPECT_FALSE(rr.pass);
  EXPECT_FALSE(rr.witness[0].has_value());
}

TEST(AxisIndependenceTest, PassImpliesZeroSumEquivalence) {
  const Game bayes = catalog::bayesian_embed(catalog::partner_uncertainty_spec(3.0, 1.0, 0.6));
  ASSERT_TRUE(axis_independence_test(bayes).pass);
  EXPECT_TRUE(zero_sum_cycle_test(bayes).pass);
}

TEST(ExtractPotentialTest, Examples) {
  std::mt19937_64 rng(34);
  const StrategySpace space = StrategySpace::with_sizes({3, 2, 2});
  const Tensor v = catalog::random_game(space, rng).payoff(0);
  const Game common = Game::common(space, v);
  const Tensor got = extract_potential(common);
  for (std::size_t s = 0; s < v.size(); ++s) EXPECT_NEAR(got[s], v[s] - v[0], 1e-12);

  // Path sums from the base profile (1,1): 1{s1=1} + 1{s2=1} - 2.
  const Tensor vb = extract_potential(table1_f_B());
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_NEAR(vb[r * 3 + c], (r == 0 ? 1.0 : 0.0) + (c == 0 ? 1.0 : 0.0) - 2.0, 1e-12);
    }
  }
  const Game cournot = catalog::cournot({});
  EXPECT_LE(potential_identity_error(cournot, extract_potential(cournot)), 1e-9);
}

TEST(ExtractPotentialTest, ThrowsNotPotential) {
  try {
    extract_potential(catalog::rps());
    FAIL() << "expected NotPotential";
  } catch (const CycleConditionError& e) {
    EXPECT_EQ(e.code(), "not_potential");
    EXPECT_DOUBLE_EQ(e.worst_violation(), 6.0);
  }
}

TEST(ExtractZeroSumFormTest, Examples) {
  const ZeroSumForm r = extract_zero_sum_form(catalog::rps());
  EXPECT_LE(max_abs_diff(r.w, catalog::rps()), 1e-12);
  EXPECT_LE(max_abs(r.h), 1e-12);

  // The contest's textbook zero-sum part:
  //   w^(i) = (p^(i) - 1/n) v - (1/(n-1)) sum_{j != i} (c_i s_i - c_j s_j).
  catalog::ContestSpec spec;
  spec.grid = {0.2, 0.4, 0.6, 0.8};
  const Game f = catalog::contest(spec);
  const ZeroSumForm form = extract_zero_sum_form(f);
  const StrategySpace& space = f.space();
  const double n = static_cast<double>(spec.players);
  std::vector<Tensor> w(spec.players, Tensor(space.profile_count()));
  for (std::size_t s = 0; s < space.profile_count(); ++s) {
    double total = 0.0;
    for (std::size_t j = 0; j < spec.players; ++j) total += spec.grid[space.coordinate(s, j)];
    for (std::size_t i = 0; i < spec.players; ++i) {
      const double si = spec.grid[space.coordinate(s, i)];
      double cross = 0.0;
      for (std::size_t j = 0; j < spec.players; ++j) {
        if (j != i) cross += spec.costs[i] * si - spec.costs[j] * spec.grid[space.coordinate(s, j)];
      }
      w[i][s] = (si / total - 1.0 / n) * spec.prize - cross / (n - 1.0);
    }
  }
  const Game textbook(space, w);
  EXPECT_TRUE(is_zero_sum(textbook, 1e-12));
  EXPECT_TRUE(is_strategically_equivalent(form.w, textbook));
  EXPECT_TRUE(is_strategically_equivalent(f, textbook));
}

TEST(ExtractZeroSumFormTest, ThrowsOnViolation) {
  EXPECT_THROW(extract_zero_sum_form(catalog::coordination(2)), CycleConditionError);
}

TEST(ExtractMultilateralTest, WorkedExampleB) {
  const MultilateralForm form = extract_multilateral(table1_f_B());
  // zeta_2 is a function of s_1, zeta_1 of s_2; compare differences to the indicator 1{. = 1}.
  for (std::size_t k = 1; k < 3; ++k) {
    EXPECT_NEAR(form.zeta(1)[0] - form.zeta(1)[k], 1.0, 1e-12);
    EXPECT_NEAR(form.zeta(0)[0] - form.zeta(0)[k], 1.0, 1e-12);
  }
  EXPECT_TRUE(is_strategically_equivalent(form.to_game(), table1_f_B()));
}

TEST(ExtractMultilateralTest, CournotAndSymmetricZeta) {
  const Game cournot = catalog::cournot({});
  EXPECT_TRUE(is_strategically_equivalent(extract_multilateral(cournot).to_game(), cournot));

  // f^(1)(s1,s2) = zeta_1(s2) + zeta_2(s1), f^(2)(s1,s2) = f^(1)(s2,s1).
  const std::vector<double> z1{0.3, -1.2, 2.0}, z2{1.5, 0.0, -0.7};
  Tensor a(9), b(9);
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t t = 0; t < 3; ++t) {
      a[s * 3 + t] = z1[t] + z2[s];
      b[s * 3 + t] = z1[s] + z2[t];
    }
  }
  const Game f(StrategySpace::with_sizes({3, 3}), {a, b});
  const MultilateralForm form = extract_multilateral(f);
  // z1 only shifts payoffs by opponent-dependent amounts; z2 drives both players' choices.
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(form.zeta(1)[k] - form.zeta(1)[0], z2[k] - z2[0], 1e-12);  // function of s_1
    EXPECT_NEAR(form.zeta(0)[k] - form.zeta(0)[0], z2[k] - z2[0], 1e-12);  // function of s_2
  }
  EXPECT_THROW(extract_multilateral(catalog::rps()), CycleConditionError);
}

TEST(ClassifyTest, Examples) {
  const ClassificationReport rps = classify(catalog::rps());
  EXPECT_TRUE(rps.zero_sum_equivalent);
  EXPECT_FALSE(rps.potential);
  const ClassificationReport t1 = classify(catalog::table1_game());
  EXPECT_FALSE(t1.potential);
  EXPECT_FALSE(t1.zero_sum_equivalent);
  EXPECT_FALSE(t1.zs_potential_B);
  EXPECT_GT(t1.norm_NC, 0.1);
  EXPECT_GT(t1.norm_NZ, 0.1);
  EXPECT_GT(t1.norm_B, 0.1);
  const ClassificationReport pd = classify(catalog::separable_pd());
  EXPECT_TRUE(pd.potential && pd.zero_sum_equivalent && pd.zs_potential_B);
}

// Invariants.

TEST(ClassifierProperties, ReportImplications) {
  std::mt19937_64 rng(35);
  for (catalog::GameClass cls : {catalog::GameClass::kAny, catalog::GameClass::kE, catalog::GameClass::kB,
                                 catalog::GameClass::kNC, catalog::GameClass::kZPlusE}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ClassificationReport r = classify(catalog::random_member(cls, oracle::random_space(rng), rng()));
      if (r.zs_potential_B) EXPECT_TRUE(r.potential && r.zero_sum_equivalent);
      if (r.non_strategic) EXPECT_TRUE(r.potential && r.zero_sum_equivalent);
    }
  }
}

TEST(ClassifierProperties, ClassMembersMatchNormClassification) {
  std::mt19937_64 rng(36);
  struct Expect {
    catalog::GameClass cls;
    bool potential;
    bool zero_sum_equivalent;
  };
  for (const Expect& e : {Expect{catalog::GameClass::kNC, true, false}, Expect{catalog::GameClass::kNZ, false, true},
                          Expect{catalog::GameClass::kB, true, true}}) {
    for (int trial = 0; trial < 300; ++trial) {
      const StrategySpace space = oracle::random_space(rng);
      const Game f = catalog::random_member(e.cls, space, rng());
      const ClassificationReport r = classify(f);
      EXPECT_EQ(r.potential, e.potential);
      EXPECT_EQ(r.zero_sum_equivalent, e.zero_sum_equivalent);
      EXPECT_EQ(r.norm_NZ <= 1e-8 * r.norm_total, e.potential);
      EXPECT_EQ(r.norm_NC <= 1e-8 * r.norm_total, e.zero_sum_equivalent);
    }
  }
}

TEST(ClassifierProperties, PotentialIsUniqueUpToConstant) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = catalog::random_member(catalog::GameClass::kCPlusE, space, rng());
    const Tensor v = extract_potential(f);
    EXPECT_EQ(v[0], 0.0);
    const Tensor u = oracle::reverse_path_potential(f);
    for (std::size_t s = 0; s < v.size(); ++s) EXPECT_NEAR(v[s] - u[s], v[0] - u[0], 1e-10);
  }
}

TEST(ClassifierProperties, UiSubsetSumsArePotentialGames) {
  std::mt19937_64 rng(38);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const std::size_t n = space.players();
    // One random function xi_M(s_M) per nonempty coalition M.
    std::vector<Tensor> xi(1u << n);
    for (std::size_t mask = 1; mask < xi.size(); ++mask) {
      xi[mask].assign(space.profile_count(), 0.0);
      std::vector<std::size_t> reduced_sizes;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) reduced_sizes.push_back(space.size(i));
      }
      Tensor table;
      std::size_t cells = 1;
      for (std::size_t sz : reduced_sizes) cells *= sz;
      for (std::size_t c = 0; c < cells; ++c) table.push_back(u(rng));
      for (std::size_t s = 0; s < space.profile_count(); ++s) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1u) idx = idx * space.size(i) + space.coordinate(s, i);
        }
        xi[mask][s] = table[idx];
      }
    }
    std::vector<Tensor> payoffs(n, Tensor(space.profile_count(), 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t mask = 1; mask < xi.size(); ++mask) {
        if (!(mask >> i & 1u)) continue;
        for (std::size_t s = 0; s < space.profile_count(); ++s) payoffs[i][s] += xi[mask][s];
      }
    }
    EXPECT_TRUE(potential_cycle_test(Game(space, payoffs)).pass);
  }
}

TEST(ClassifierProperties, ZeroSumPartHasNoFullInteraction) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 50; ++trial) {
    const StrategySpace space = oracle::random_space(rng);
    const Game f = catalog::random_member(catalog::GameClass::kZPlusE, space, rng());
    const ZeroSumForm form = extract_zero_sum_form(f);
    Tensor total(space.profile_count(), 0.0);
    for (std::size_t i = 0; i < space.players(); ++i) {
      for (std::size_t s = 0; s < total.size(); ++s) total[s] += form.w(i, s);
    }
    for (double x : full_interaction(space, total)) EXPECT_LE(std::abs(x), 1e-10);
    EXPECT_TRUE(is_zero_sum(form.w));
    EXPECT_TRUE(is_non_strategic(form.h));
    EXPECT_LE(max_abs_diff(add(form.w, form.h), f), 1e-9);
  }
}

}  // namespace
}  // namespace gamedecomp
