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


#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gamedecomp {
namespace {

void expect_bit_exact(const Game& a, const Game& b) {
  ASSERT_TRUE(a.space() == b.space());
  for (std::size_t i = 0; i < a.players(); ++i) {
    for (std::size_t s = 0; s < a.profile_count(); ++s) EXPECT_EQ(a(i, s), b(i, s));
  }
}

TEST(JsonGameTest, LayoutIsNestedRowMajor) {
  const json_io::Json j = json_io::game_to_json(catalog::table1_game());
  EXPECT_EQ(j["players"], 2);
  EXPECT_EQ(j["strategies"][1][2], "3");
  EXPECT_EQ(j["payoffs"][0][1][2].get<double>(), -2.0);  // player 1 at (2, 3)
  EXPECT_EQ(j["payoffs"][1][0][1].get<double>(), 1.0);   // player 2 at (1, 2)
  const std::string text = j.dump();
  EXPECT_LT(text.find("\"players\""), text.find("\"strategies\""));
  EXPECT_LT(text.find("\"strategies\""), text.find("\"payoffs\""));
}

TEST(JsonGameTest, EveryBuilderRoundTripsBitExactly) {
  catalog::ContestSpec contest;
  contest.grid = {1.0 / 9, 2.0 / 9, 3.0 / 9};
  std::vector<Game> games{catalog::table1_game(), catalog::rps(), catalog::matching_pennies(),
                          catalog::coordination(3), catalog::separable_pd(), catalog::standard_pd(),
                          catalog::cournot({}), catalog::contest(contest),
                          catalog::bayesian_embed(catalog::partner_uncertainty_spec(2.0, 1.0, 1.0 / 3))};
  const auto t = catalog::table1_components();
  for (const Game& g : {t.C, t.Z, t.B, t.E}) games.push_back(g);
  for (auto cls : {catalog::GameClass::kAny, catalog::GameClass::kNZ, catalog::GameClass::kB}) {
    games.push_back(catalog::random_member(cls, StrategySpace::with_sizes({3, 2, 4}), 77));
  }
  for (const Game& g : games) {
    const std::string text = json_io::dump(json_io::game_to_json(g));
    expect_bit_exact(json_io::game_from_string(text), g);
    EXPECT_EQ(json_io::dump(json_io::game_to_json(json_io::game_from_string(text))), text);
  }
}

TEST(JsonGameTest, RejectsMalformedInput) {
  EXPECT_THROW(json_io::game_from_string("{"), InvalidInput);
  EXPECT_THROW(json_io::game_from_string("[]"), InvalidInput);
  EXPECT_THROW(json_io::game_from_string(R"({"players": 2, "strategies": [["a"],["b"]]})"), InvalidInput);
  EXPECT_THROW(json_io::game_from_string(
                   R"({"players": 2, "strategies": [["a","b"],["c"]], "payoffs": [[[1],[2]],[[1],[2],[3]]]})"),
               ShapeMismatch);
  EXPECT_THROW(json_io::game_from_string(
                   R"({"players": 2, "strategies": [["a"],["c"]], "payoffs": [[["x"]],[[1]]]})"),
               InvalidInput);
  EXPECT_THROW(json_io::game_from_string(R"({"players": 1, "strategies": [["a"]], "payoffs": [[1]]})"),
               InvalidInput);
}

TEST(JsonResultTest, DecompositionLayout) {
  const json_io::Json j = json_io::decomposition_to_json(decompose_main(catalog::table1_game()));
  EXPECT_EQ(j["scheme"], "main");
  EXPECT_TRUE(j["components"].contains("NC"));
  EXPECT_TRUE(j["components"].contains("NZ"));
  EXPECT_TRUE(j["components"].contains("B"));
  EXPECT_NEAR(j["component_norms"]["NZ"].get<double>(), std::sqrt(12.0), 1e-12);
  EXPECT_LE(j["residual"].get<double>(), 1e-12);
  const Game nc = json_io::game_from_json(j["components"]["NC"]);
  EXPECT_LE(max_abs_diff(nc, catalog::table1_components().C), 1e-12);
}

TEST(JsonResultTest, ReportAndNashLayout) {
  const json_io::Json r = json_io::report_to_json(classify(catalog::rps()));
  EXPECT_EQ(r["flags"]["zero_sum_equivalent"], true);
  EXPECT_EQ(r["flags"]["potential"], false);
  EXPECT_EQ(r["violations"]["potential"].get<double>(), 6.0);
  const json_io::Json n = json_io::nash_to_json(bimatrix_nash(catalog::matching_pennies()));
  EXPECT_EQ(n["method"], "support");
  EXPECT_EQ(n["degenerate"], false);
  ASSERT_EQ(n["profiles"].size(), 1u);
  EXPECT_EQ(n["profiles"][0][0][0].get<double>(), 0.5);
}

TEST(JsonResultTest, DoublesUseRoundTripPrecision) {
  const Game g = Game::bimatrix({{0.1, 1.0 / 3}, {2e-300, -7.25}}, {{1e17, 0}, {0, 0}});
  const std::string text = json_io::game_to_json(g).dump();
  EXPECT_NE(text.find("0.3333333333333333"), std::string::npos);
  expect_bit_exact(json_io::game_from_string(text), g);
}

}  // namespace
}  // namespace gamedecomp
