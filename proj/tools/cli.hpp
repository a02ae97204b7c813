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

// Command-line front end. `run` is callable in-process for tests.
//
// Exit codes: 0 success, 1 malformed input, 2 precondition failure,
// 3 internal-consistency failure. Errors are printed to stderr as JSON.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamedecomp/gamedecomp.hpp"
#include "reproduction_suite.hpp"

namespace gamedecomp::cli {

struct CliConfig {
  std::string subcommand;
  std::string input;  // path, or catalog name for `catalog`
  std::string scheme = "main";
  std::string method = "support";
  double tolerance = kDefaultTolerance;
  std::size_t resolution = 20;
  std::string output;
  std::uint64_t seed = 0;
  std::vector<std::string> params;
};

namespace detail {

using Params = std::map<std::string, std::string>;

inline Params parse_params(const std::vector<std::string>& raw) {
  Params out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("parameter '" + kv + "' is not of the form k=v");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

class ParamReader {
 public:
  explicit ParamReader(Params params) : params_(std::move(params)) {}

  double number(const std::string& key, double fallback) {
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    const std::string text = it->second;
    params_.erase(it);
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw InvalidInput("parameter " + key + "='" + text + "' is not a number");
    }
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const double v = number(key, static_cast<double>(fallback));
    if (v < 0 || v != std::floor(v)) throw InvalidInput("parameter " + key + " must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    std::string v = it->second;
    params_.erase(it);
    return v;
  }

  void finish(const std::string& name) const {
    if (!params_.empty()) {
      throw InvalidInput("unknown parameter '" + params_.begin()->first + "' for catalog entry " + name);
    }
  }

 private:
  Params params_;
};

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::size_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw InvalidInput("bad strategy count '" + item + "'");
    }
  }
  return out;
}

inline std::vector<double> arithmetic_grid(double start, double step, std::size_t count) {
  std::vector<double> g;
  for (std::size_t k = 0; k < count; ++k) g.push_back(start + step * static_cast<double>(k));
  return g;
}

inline Game build_catalog(const std::string& name, const Params& params, std::uint64_t seed) {
  ParamReader p(params);
  Game g = [&]() -> Game {
    if (name == "table1") return catalog::table1_game();
    if (name == "table1_C") return catalog::table1_components().C;
    if (name == "table1_Z") return catalog::table1_components().Z;
    if (name == "table1_B") return catalog::table1_components().B;
    if (name == "table1_E") return catalog::table1_components().E;
    if (name == "rps") return catalog::rps();
    if (name == "matching_pennies") return catalog::matching_pennies();
    if (name == "coordination") return catalog::coordination(p.count("k", 2));
    if (name == "separable_pd") return catalog::separable_pd();
    if (name == "standard_pd") return catalog::standard_pd();
    if (name == "prisoners_dilemma") {
      const double t = p.number("T", 5), r = p.number("R", 3), pp = p.number("P", 1), s = p.number("S", 0);
      return catalog::prisoners_dilemma(t, r, pp, s);
    }
    if (name == "cournot") {
      catalog::CournotSpec spec;
      spec.players = p.count("n", 3);
      spec.alpha = p.number("alpha", 10);
      spec.beta = p.number("beta", 1);
      spec.costs.assign(spec.players, p.number("c", 1));
      const double step = p.number("step", 1);
      spec.grid = arithmetic_grid(0.0, step, p.count("points", 5));
      return catalog::cournot(spec);
    }
    if (name == "contest") {
      catalog::ContestSpec spec;
      spec.players = p.count("n", 3);
      spec.prize = p.number("v", 1);
      spec.costs.assign(spec.players, p.number("c", 1));
      const double step = p.number("step", 1.0 / 9.0);
      spec.grid = arithmetic_grid(step, step, p.count("points", 6));
      return catalog::contest(spec);
    }
    if (name == "bayesian") {
      const double a = p.number("a", 2), b = p.number("b", 1), prob = p.number("p", 0.5);
      return catalog::bayesian_embed(catalog::partner_uncertainty_spec(a, b, prob));
    }
    if (name == "random") {
      const catalog::GameClass cls = catalog::parse_game_class(p.text("class", "any"));
      const auto sizes = parse_sizes(p.text("sizes", "3,3"));
      return catalog::random_member(cls, StrategySpace::with_sizes(sizes), seed);
    }
    throw InvalidInput("unknown catalog entry '" + name + "'");
  }();
  p.finish(name);
  return g;
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    json_io::write_file(path, text);
  }
}

inline NashList solve(const Game& f, const std::string& method, double tol) {
  if (method == "pure") return pure_nash(f, tol);
  if (method == "support") return bimatrix_nash(f);
  if (method == "uniform") {
    NashList list;
    list.method = "uniform";
    if (verify_uniform_ne(f, tol)) list.profiles.push_back(uniform_profile(f.space()));
    return list;
  }
  if (method == "dominant") {
    const DominantStrategyResult d = dominant_strategy(f, tol);
    NashList list;
    list.method = "dominant";
    list.degenerate = !d.strict;
    for (std::size_t r : d.row_argmax) {
      for (std::size_t c : d.col_argmax) list.profiles.push_back(MixedProfile::pure(f.space(), {r, c}));
    }
    return list;
  }
  if (method == "minimax") {
    NashList list;
    list.method = "minimax";
    list.profiles.push_back(minimax(f, tol).strategies);
    return list;
  }
  throw InvalidInput("unknown solve method '" + method + "'");
}

inline int execute(const CliConfig& cfg, std::ostream& out) {
  const auto dump = [](const json_io::Json& j) { return json_io::dump(j); };
  if (cfg.subcommand == "classify") {
    out << dump(json_io::report_to_json(classify(json_io::load_game(cfg.input), cfg.tolerance)));
    return 0;
  }
  if (cfg.subcommand == "decompose") {
    const DecompositionResult d = decompose(json_io::load_game(cfg.input), parse_scheme(cfg.scheme));
    if (!cfg.output.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(cfg.output, ec);
      if (ec) throw InvalidInput("cannot create directory '" + cfg.output + "'");
      for (const auto& c : d.components) {
        json_io::write_file((std::filesystem::path(cfg.output) / (c.name + ".json")).string(),
                            dump(json_io::game_to_json(c.game)));
      }
    }
    out << dump(json_io::decomposition_to_json(d));
    return 0;
  }
  if (cfg.subcommand == "solve") {
    out << dump(json_io::nash_to_json(solve(json_io::load_game(cfg.input), cfg.method, cfg.tolerance)));
    return 0;
  }
  if (cfg.subcommand == "phi") {
    std::ostringstream csv;
    write_phi_csv(csv, phi_grid(json_io::load_game(cfg.input), cfg.resolution, cfg.tolerance));
    emit(csv.str(), cfg.output, out);
    return 0;
  }
  if (cfg.subcommand == "catalog") {
    const Game g = build_catalog(cfg.input, parse_params(cfg.params), cfg.seed);
    emit(dump(json_io::game_to_json(g)), cfg.output, out);
    return 0;
  }
  if (cfg.subcommand == "verify-paper") {
    return reproduction::run_all(out) ? 0 : 3;
  }
  throw InvalidInput("no subcommand given");
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return 1;
    case ErrorKind::kPrecondition: return 2;
    case ErrorKind::kInternalConsistency: return 3;
  }
  return 3;
}

inline void report(std::ostream& err, const std::string& kind, const std::string& code, const std::string& msg) {
  json_io::Json j;
  j["error"] = kind;
  j["code"] = code;
  j["message"] = msg;
  err << j.dump() << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (const char* env = std::getenv("GAMEDECOMP_TOL")) {
    try {
      cfg.tolerance = std::stod(env);
    } catch (const std::exception&) {
      detail::report(err, "invalid_input", "bad_tolerance", std::string("GAMEDECOMP_TOL='") + env + "' is not a number");
      return 1;
    }
  }

  CLI::App app{"Decompose, classify and solve finite normal-form games", "gamedecomp"};
  app.require_subcommand(1);
  const auto positive = CLI::PositiveNumber;

  auto* classify_cmd = app.add_subcommand("classify", "Cycle tests, membership flags and component norms");
  classify_cmd->add_option("--input,-i", cfg.input, "Game JSON file")->required();
  classify_cmd->add_option("--tol", cfg.tolerance, "Tolerance for boolean predicates")->check(positive);

  auto* decompose_cmd = app.add_subcommand("decompose", "Orthogonal decomposition");
  decompose_cmd->add_option("--input,-i", cfg.input, "Game JSON file")->required();
  decompose_cmd->add_option("--scheme", cfg.scheme, "elementary|main|four|candogan")
      ->check(CLI::IsMember({"elementary", "main", "four", "candogan"}));
  decompose_cmd->add_option("--out,-o", cfg.output, "Directory for per-component game files");

  auto* solve_cmd = app.add_subcommand("solve", "Equilibrium computation");
  solve_cmd->add_option("--input,-i", cfg.input, "Game JSON file")->required();
  solve_cmd->add_option("--method", cfg.method, "pure|support|uniform|dominant|minimax")
      ->check(CLI::IsMember({"pure", "support", "uniform", "dominant", "minimax"}));
  solve_cmd->add_option("--tol", cfg.tolerance, "Tolerance")->check(positive);

  auto* phi_cmd = app.add_subcommand("phi", "Deviation function on symmetric profiles of a 3x3 game");
  phi_cmd->add_option("--input,-i", cfg.input, "Game JSON file")->required();
  phi_cmd->add_option("--resolution,-r", cfg.resolution, "Grid denominator")->check(CLI::Range(2, 100000));
  phi_cmd->add_option("--out,-o", cfg.output, "CSV output path (default stdout)");
  phi_cmd->add_option("--tol", cfg.tolerance, "Tolerance")->check(positive);

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a built-in game as JSON");
  catalog_cmd->add_option("name", cfg.input, "Catalog entry")->required();
  catalog_cmd->add_option("--params,-p", cfg.params, "Builder parameters k=v");
  catalog_cmd->add_option("--seed", cfg.seed, "Seed for random entries");
  catalog_cmd->add_option("--out,-o", cfg.output, "Output path (default stdout)");

  app.add_subcommand("verify-paper", "Run the reproduction suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    detail::report(err, "invalid_input", "bad_arguments", e.what());
    return 1;
  }
  if (!(cfg.tolerance > 0.0)) {
    detail::report(err, "invalid_input", "bad_tolerance", "tolerance must be positive");
    return 1;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    return detail::execute(cfg, out);
  } catch (const Error& e) {
    detail::report(err, to_string(e.kind()), e.code(), e.what());
    return detail::exit_code(e.kind());
  } catch (const std::exception& e) {
    detail::report(err, "internal_consistency", "unexpected", e.what());
    return 3;
  }
}

}  // namespace gamedecomp::cli
