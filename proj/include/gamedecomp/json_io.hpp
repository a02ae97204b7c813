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

// JSON encoding of games and analysis results.
//
// Game format:
//   {"players": n, "strategies": [[labels...] x n],
//    "payoffs": [one nested array per player, s_1 outermost]}
// Doubles are written in shortest round-trip form; keys keep insertion order.

#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gamedecomp/classifiers.hpp"
#include "gamedecomp/decomposition.hpp"
#include "gamedecomp/equilibrium.hpp"
#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"

namespace gamedecomp::json_io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json nest(const StrategySpace& space, const Tensor& t, std::size_t axis, std::size_t offset) {
  Json arr = Json::array();
  const std::size_t stride = space.stride(axis);
  for (std::size_t k = 0; k < space.size(axis); ++k) {
    const std::size_t idx = offset + k * stride;
    if (axis + 1 == space.players()) {
      arr.push_back(t[idx]);
    } else {
      arr.push_back(nest(space, t, axis + 1, idx));
    }
  }
  return arr;
}

inline void flatten(const StrategySpace& space, const Json& j, std::size_t axis, std::size_t offset,
                    Tensor& out, std::size_t player) {
  const std::string where = "payoffs[" + std::to_string(player) + "]";
  if (!j.is_array()) throw InvalidInput(where + " must be nested arrays");
  if (j.size() != space.size(axis)) {
    throw ShapeMismatch(where + " axis " + std::to_string(axis + 1), j.size(), space.size(axis));
  }
  const std::size_t stride = space.stride(axis);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::size_t idx = offset + k * stride;
    if (axis + 1 == space.players()) {
      if (!j[k].is_number()) throw InvalidInput(where + " contains a non-numeric entry");
      out[idx] = j[k].get<double>();
    } else {
      flatten(space, j[k], axis + 1, idx, out, player);
    }
  }
}

}  // namespace detail

inline Json game_to_json(const Game& f) {
  const StrategySpace& space = f.space();
  Json j;
  j["players"] = space.players();
  j["strategies"] = space.all_labels();
  Json payoffs = Json::array();
  for (std::size_t i = 0; i < f.players(); ++i) payoffs.push_back(detail::nest(space, f.payoff(i), 0, 0));
  j["payoffs"] = std::move(payoffs);
  return j;
}

inline Game game_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("game JSON must be an object");
  for (const char* key : {"players", "strategies", "payoffs"}) {
    if (!j.contains(key)) throw InvalidInput(std::string("game JSON is missing \"") + key + "\"");
  }
  if (!j["players"].is_number_integer()) throw InvalidInput("\"players\" must be an integer");
  const auto n = j["players"].get<long long>();
  if (n < 2) throw InvalidInput("a game needs at least two players");
  const Json& strategies = j["strategies"];
  if (!strategies.is_array()) throw InvalidInput("\"strategies\" must be an array");
  if (strategies.size() != static_cast<std::size_t>(n)) {
    throw ShapeMismatch("strategy label lists", strategies.size(), static_cast<std::size_t>(n));
  }
  std::vector<std::vector<std::string>> labels;
  for (const Json& list : strategies) {
    if (!list.is_array()) throw InvalidInput("each strategy label list must be an array");
    std::vector<std::string> row;
    for (const Json& label : list) {
      if (label.is_string()) {
        row.push_back(label.get<std::string>());
      } else if (label.is_number()) {
        row.push_back(label.dump());
      } else {
        throw InvalidInput("strategy labels must be strings or numbers");
      }
    }
    labels.push_back(std::move(row));
  }
  StrategySpace space(std::move(labels));
  const Json& payoffs = j["payoffs"];
  if (!payoffs.is_array()) throw InvalidInput("\"payoffs\" must be an array");
  if (payoffs.size() != space.players()) throw ShapeMismatch("payoff arrays", payoffs.size(), space.players());
  std::vector<Tensor> tensors(space.players(), Tensor(space.profile_count()));
  for (std::size_t i = 0; i < space.players(); ++i) detail::flatten(space, payoffs[i], 0, 0, tensors[i], i);
  return Game(std::move(space), std::move(tensors));
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline Game game_from_string(const std::string& text) { return game_from_json(parse(text)); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
}

inline Game load_game(const std::string& path) { return game_from_string(read_file(path)); }

inline Json decomposition_to_json(const DecompositionResult& d) {
  Json j;
  j["scheme"] = to_string(d.scheme);
  Json components = Json::object();
  Json norms = Json::object();
  for (const auto& c : d.components) {
    components[c.name] = game_to_json(c.game);
    norms[c.name] = norm(c.game);
  }
  j["components"] = std::move(components);
  j["residual"] = d.residual;
  j["component_norms"] = std::move(norms);
  return j;
}

inline Json report_to_json(const ClassificationReport& r) {
  Json flags;
  flags["common_interest"] = r.common_interest;
  flags["zero_sum"] = r.zero_sum;
  flags["normalized"] = r.normalized;
  flags["non_strategic"] = r.non_strategic;
  flags["potential"] = r.potential;
  flags["zero_sum_equivalent"] = r.zero_sum_equivalent;
  flags["zs_potential_B"] = r.zs_potential_B;
  Json violations;
  violations["potential"] = r.potential_violation;
  violations["zero_sum"] = r.zero_sum_violation;
  Json norms;
  norms["total"] = r.norm_total;
  norms["NC"] = r.norm_NC;
  norms["NZ"] = r.norm_NZ;
  norms["B"] = r.norm_B;
  Json j;
  j["flags"] = std::move(flags);
  j["violations"] = std::move(violations);
  j["component_norms"] = std::move(norms);
  return j;
}

inline Json profile_to_json(const MixedProfile& p) { return Json(p.probabilities()); }

inline Json nash_to_json(const NashList& list) {
  Json profiles = Json::array();
  for (const auto& p : list.profiles) profiles.push_back(profile_to_json(p));
  Json j;
  j["profiles"] = std::move(profiles);
  j["method"] = list.method;
  j["degenerate"] = list.degenerate;
  return j;
}

inline Json error_to_json(const Error& e) {
  Json j;
  j["error"] = to_string(e.kind());
  j["code"] = e.code();
  j["message"] = e.what();
  return j;
}

}  // namespace gamedecomp::json_io
