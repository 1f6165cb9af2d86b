// Copyright 2026 The Coopetition Authors
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

// Command-line front end. `run` takes the arguments without the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success / check holds, 1 check fails, 2 usage, parse or I/O
// error, 3 precondition or scale ceiling.

#ifndef COOP_TOOLS_CLI_APP_HPP_
#define COOP_TOOLS_CLI_APP_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coop/coop.hpp"

namespace coop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline PartitionedGame load_game(const std::string& path) {
  try {
    return parse_game(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.what());
  }
}

inline StrategyDocument load_strategy(const std::string& path, const PartitionedGame& pg) {
  try {
    return parse_strategy(read_text_file(path), pg.game, pg.partition);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.what());
  }
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f) throw InputError("error writing '" + path + "'");
}

inline std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.size() > 6 ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("--dims expects comma-separated positive integers, got '" + text + "'");
    }
    const std::size_t v = std::stoul(part);
    if (v == 0) throw UsageError("--dims entries must be positive");
    dims.push_back(v);
  }
  if (dims.size() < 2) throw UsageError("--dims needs at least two players");
  return dims;
}

inline std::vector<Rational> parse_constants(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto r = parse_rational(part);
    if (!r) throw UsageError("--k expects comma-separated rationals, got '" + text + "'");
    out.push_back(*r);
  }
  return out;
}

inline CoECandidate as_candidate(const PartitionedGame& pg, const StrategyDocument& doc) {
  switch (doc.kind) {
    case StrategyKind::kProduct:
      return candidate_from_profile(pg.game, pg.partition, doc.profile);
    case StrategyKind::kCorrelatedTeam:
      return doc.candidate;
    case StrategyKind::kJoint:
      break;
  }
  throw UsageError("a joint strategy has no team/adversary split; use a product or correlated-team file");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact co-opetition equilibrium toolkit for adversarial team games", "coop"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string game_path;
  std::string candidate_path;
  std::string out_path;

  // generate
  auto* generate = app.add_subcommand("generate", "Write a game file for a named family");
  std::string family;
  std::uint64_t seed = 0;
  std::string flavor = "general";
  std::string dims = "2,2,2";
  std::string constants;
  generate->add_option("--family", family, "chicken-a, chicken-b, chicken, modified-chicken, exchange-counter or random")
      ->required()
      ->check(CLI::IsMember({"chicken-a", "chicken-b", "chicken", "modified-chicken", "exchange-counter", "random"}));
  generate->add_option("--seed", seed, "Random seed (random family)");
  generate->add_option("--flavor", flavor, "general, zero-sum or consistent-zero-sum")
      ->check(CLI::IsMember({"general", "zero-sum", "consistent-zero-sum"}));
  generate->add_option("--dims", dims, "Actions per player, e.g. 2,3,2 (last player is the adversary)");
  generate->add_option("--k", constants, "Team constants for consistent-zero-sum, e.g. 2,2 (default: all equal)");
  generate->add_option("--out", out_path, "Output file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a strategy against a solution concept");
  std::string concept_name;
  verify->add_option("--game", game_path, "Game file")->required();
  verify->add_option("--candidate", candidate_path, "Strategy file")->required();
  verify->add_option("--concept", concept_name, "ne, ce, coe or best-response")
      ->required()
      ->check(CLI::IsMember({"ne", "ce", "coe", "best-response"}));

  // solve-tmcoe
  auto* solve_tmcoe = app.add_subcommand("solve-tmcoe", "Compute a team-maximizing CoE");
  std::size_t grid = 4;
  solve_tmcoe->add_option("--game", game_path, "Game file")->required();
  solve_tmcoe->add_option("--grid", grid, "Adversary grid resolution for the general solver")
      ->check(CLI::PositiveNumber);
  solve_tmcoe->add_option("--out", out_path, "Also write the candidate as a strategy file");

  // solve-ne
  auto* solve_ne = app.add_subcommand("solve-ne", "Enumerate Nash equilibria by support");
  std::size_t max_support = 0;
  solve_ne->add_option("--game", game_path, "Game file")->required();
  solve_ne->add_option("--max-support", max_support, "Largest support size (default: all)");

  // induce-coe
  auto* induce = app.add_subcommand("induce-coe", "Turn a Nash equilibrium into a CoE");
  std::string ne_path;
  induce->add_option("--game", game_path, "Game file")->required();
  induce->add_option("--ne", ne_path, "Product strategy file holding an NE")->required();
  induce->add_option("--out", out_path, "Also write the candidate as a strategy file");

  // check-consistency
  auto* consistency = app.add_subcommand("check-consistency", "Test u_i = u_T / k_i for every team member");
  consistency->add_option("--game", game_path, "Game file")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a profile (u_T, stable, NE, CoE, TMCoE)");
  classify->add_option("--game", game_path, "Game file")->required();
  classify->add_option("--candidate", candidate_path, "Strategy file")->required();
  classify->add_option("--grid", grid, "Grid resolution for the TMCoE reference")
      ->check(CLI::PositiveNumber);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Add a dummy team member to a two-player game");
  reduce->add_option("--game", game_path, "Two-player game file")->required();
  reduce->add_option("--out", out_path, "Output file (default: stdout)");

  // sat-game
  auto* sat = app.add_subcommand("sat-game", "Build the symmetric game of a CNF formula");
  std::string cnf_path;
  sat->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  sat->add_option("--out", out_path, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) {
      PartitionedGame pg = [&]() -> PartitionedGame {
        if (family == "chicken-a") return chicken_games().original;
        if (family == "chicken-b") return chicken_games().averaged;
        if (family == "chicken") {
          Game g = chicken_bimatrix();
          TeamPartition p = TeamPartition::last_is_adversary(g);
          return {std::move(g), std::move(p)};
        }
        if (family == "modified-chicken") return modified_chicken_game();
        if (family == "exchange-counter") return exchangeability_counterexample();
        RandomGameSpec spec;
        spec.actions_per_player = detail::parse_dims(dims);
        spec.seed = seed;
        if (flavor == "zero-sum") spec.flavor = RandomFlavor::kZeroSum;
        if (flavor == "consistent-zero-sum") {
          spec.flavor = RandomFlavor::kConsistentZeroSum;
          const std::size_t t = spec.actions_per_player.size() - 1;
          spec.k = constants.empty() ? std::vector<Rational>(t, Rational(static_cast<long>(t)))
                                     : detail::parse_constants(constants);
        }
        return random_game(spec);
      }();
      detail::write_output(emit_game(pg), out_path, out);
      return kExitOk;
    }

    if (*sat) {
      const CnfFormula phi = [&] {
        try {
          return parse_dimacs(read_text_file(cnf_path));
        } catch (const ParseError& e) {
          throw ParseError(e.line(), e.column(), cnf_path + ": " + e.what());
        }
      }();
      Game g = sat_game(phi);
      detail::write_output(emit_game(g, TeamPartition::last_is_adversary(g)), out_path, out);
      return kExitOk;
    }

    const PartitionedGame pg = detail::load_game(game_path);
    const Game& game = pg.game;
    const TeamPartition& partition = pg.partition;

    if (*reduce) {
      detail::write_output(emit_game(reduce_two_player(game)), out_path, out);
      return kExitOk;
    }

    if (*verify) {
      const StrategyDocument doc = detail::load_strategy(candidate_path, pg);
      VerificationReport report;
      if (concept_name == "ne") {
        if (doc.kind != StrategyKind::kProduct) {
          throw detail::UsageError("the ne concept needs a product strategy file");
        }
        report = verify_ne(game, doc.profile);
      } else if (concept_name == "ce") {
        CorrelatedStrategy joint;
        switch (doc.kind) {
          case StrategyKind::kProduct: joint = joint_distribution(game, doc.profile); break;
          case StrategyKind::kCorrelatedTeam:
            joint = joint_distribution(game, partition, doc.candidate);
            break;
          case StrategyKind::kJoint: joint = doc.joint; break;
        }
        report = verify_ce(game, joint);
      } else {
        const CoECandidate cand = detail::as_candidate(pg, doc);
        report = concept_name == "coe"
                     ? verify_coe(game, partition, cand)
                     : is_best_response(game, partition, cand.team_strategy, cand.adversary_strategy);
      }
      out << format_report(game, report);
      return report.holds() ? kExitOk : kExitCheckFailed;
    }

    if (*solve_tmcoe) {
      std::optional<TmcoeResult> result;
      if (game.is_zero_sum() && check_consistency(game, partition).consistent) {
        result = solve_tmcoe_consistent_lp(game, partition);
      } else {
        result = solve_tmcoe_grid(game, partition, grid);
      }
      if (!result) {
        throw PreconditionError("no CoE has an adversary strategy on the grid of resolution " +
                                std::to_string(grid) + "; try a finer --grid");
      }
      out << "status: optimal\n" << format_tmcoe(game, *result);
      if (!out_path.empty()) detail::write_output(emit_candidate(game, result->candidate), out_path, out);
      return kExitOk;
    }

    if (*solve_ne) {
      std::size_t k = max_support;
      if (k == 0) {
        for (std::size_t p = 0; p < game.num_players(); ++p) k = std::max(k, game.num_actions(p));
      }
      const NashEnumeration ne = find_nash_support_enumeration(game, k);
      out << "equilibria: " << ne.equilibria.size() << '\n';
      out << "algebraic_equilibria: " << ne.algebraic.size() << '\n';
      out << "supports_examined: " << ne.supports_examined << '\n';
      out << "supports_skipped: " << ne.supports_skipped << '\n';
      for (std::size_t i = 0; i < ne.equilibria.size(); ++i) {
        out << "equilibrium: " << i + 1 << '\n' << format_profile(game, ne.equilibria[i]);
        for (std::size_t p = 0; p < game.num_players(); ++p) {
          out << "utility_" << p + 1 << ": " << to_string(expected_utility(game, ne.equilibria[i], p))
              << '\n';
        }
      }
      for (std::size_t i = 0; i < ne.algebraic.size(); ++i) {
        out << "algebraic_equilibrium: " << i + 1 << '\n' << format_algebraic(game, ne.algebraic[i]);
      }
      return kExitOk;
    }

    if (*induce) {
      const StrategyDocument doc = detail::load_strategy(ne_path, pg);
      if (doc.kind != StrategyKind::kProduct) {
        throw detail::UsageError("induce-coe needs a product strategy file");
      }
      const CoECandidate cand = ne_to_coe(game, partition, doc.profile);
      out << format_candidate(game, cand);
      out << "team_value: " << to_string(team_utility(game, partition, cand)) << '\n';
      if (!out_path.empty()) detail::write_output(emit_candidate(game, cand), out_path, out);
      return kExitOk;
    }

    if (*consistency) {
      const ConsistencyReport r = check_consistency(game, partition);
      out << format_consistency(game, partition, r);
      return r.consistent ? kExitOk : kExitCheckFailed;
    }

    if (*classify) {
      const StrategyDocument doc = detail::load_strategy(candidate_path, pg);
      ProfileForm form;
      switch (doc.kind) {
        case StrategyKind::kProduct: form = doc.profile; break;
        case StrategyKind::kCorrelatedTeam: form = doc.candidate; break;
        case StrategyKind::kJoint:
          throw detail::UsageError("classify needs a product or correlated-team strategy file");
      }
      out << format_classification(classify_profile(game, partition, form, grid));
      return kExitOk;
    }
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ScaleError& e) {
    err << "scale ceiling: " << e.what() << '\n';
    return kExitPrecondition;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace coop::cli

#endif  // COOP_TOOLS_CLI_APP_HPP_
