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

// Text formats.
//
// Game file:
//
//   coe-game 1
//   name chicken-a            (optional)
//   players 3
//   actions 1 D C             (one line per player, 1-based ids)
//   actions 2 D C
//   actions 3 A B
//   team 1 2
//   adversary 3
//   D D A 10 10 -20           (one record per joint action: labels, payoffs)
//   ...
//
// Strategy file:
//
//   coe-strategy 1
//   kind product | correlated-team | joint
//   player 1 D 1/3            (product)
//   team C C 1/2              (correlated-team: team labels in team order)
//   adversary B 1             (correlated-team)
//   joint C C B 1/2           (joint: one label per player)
//
// '#' starts a comment; blank lines are ignored. Omitted entries have
// probability 0 and every declared distribution must sum to exactly 1.

#ifndef COOP_IO_HPP_
#define COOP_IO_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coop/algebraic_nash.hpp"
#include "coop/classify.hpp"
#include "coop/equilibria.hpp"
#include "coop/error.hpp"
#include "coop/game.hpp"
#include "coop/generators.hpp"
#include "coop/rational.hpp"
#include "coop/tmcoe.hpp"

namespace coop {

inline constexpr std::string_view kGameMagic = "coe-game";
inline constexpr std::string_view kStrategyMagic = "coe-strategy";
inline constexpr int kFormatVersion = 1;

namespace detail {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

// Non-empty lines with comments removed.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::size_t parse_index(const Line& line, std::size_t i, std::size_t limit,
                               const char* what) {
  const Token& t = line.tokens.at(i);
  std::size_t value = 0;
  bool ok = !t.text.empty() && t.text.size() <= 9;
  for (char c : t.text) ok = ok && c >= '0' && c <= '9';
  if (ok) value = std::stoul(t.text);
  if (!ok || value == 0 || value > limit) {
    throw ParseError(line.number, t.column,
                     std::string(what) + " '" + t.text + "' is not in 1.." + std::to_string(limit));
  }
  return value - 1;
}

inline Rational parse_number(const Line& line, std::size_t i) {
  const Token& t = line.tokens.at(i);
  auto r = parse_rational(t.text);
  if (!r) throw ParseError(line.number, t.column, "'" + t.text + "' is not a rational number");
  return *r;
}

inline void expect_arity(const Line& line, std::size_t count, const std::string& what) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, line.tokens.front().column,
                     what + " expects " + std::to_string(count - 1) + " field(s), got " +
                         std::to_string(line.tokens.size() - 1));
  }
}

inline void check_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) throw ParseError(1, 0, "empty document; expected '" + std::string(magic) + " 1'");
  const Line& first = lines.front();
  if (first.tokens[0].text != magic) {
    throw ParseError(first.number, first.tokens[0].column,
                     "expected '" + std::string(magic) + "', got '" + first.tokens[0].text + "'");
  }
  if (first.tokens.size() != 2) {
    throw ParseError(first.number, first.tokens[0].column, "header expects a version number");
  }
  if (first.tokens[1].text != std::to_string(kFormatVersion)) {
    throw ParseError(first.number, first.tokens[1].column,
                     "unsupported version '" + first.tokens[1].text + "' (expected " +
                         std::to_string(kFormatVersion) + ")");
  }
}

inline std::string joint_label(const Game& game, const JointAction& a,
                               std::span<const std::size_t> players) {
  std::string s = "(";
  for (std::size_t k = 0; k < players.size(); ++k) {
    if (k) s += ',';
    s += game.action_label(players[k], a[k]);
  }
  return s + ")";
}

inline std::vector<std::size_t> all_players(const Game& game) {
  std::vector<std::size_t> p(game.num_players());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  return p;
}

}  // namespace detail

/// "(D,C,B)" for a full joint action.
inline std::string format_joint_action(const Game& game, const JointAction& a) {
  return detail::joint_label(game, a, detail::all_players(game));
}

// ---------------------------------------------------------------------------
// Games

inline PartitionedGame parse_game(std::string_view text) {
  const auto lines = detail::tokenize(text);
  detail::check_header(lines, kGameMagic);

  std::string name;
  std::optional<std::size_t> players;
  std::vector<std::optional<std::vector<std::string>>> actions;
  std::optional<std::vector<std::size_t>> team;
  std::optional<std::size_t> adversary;
  std::size_t team_line = 0;
  std::size_t li = 1;

  auto header_complete = [&] {
    if (!players || !team || !adversary) return false;
    for (const auto& a : actions) {
      if (!a) return false;
    }
    return true;
  };
  // The header ends once every required line has been seen, so action
  // labels may coincide with header keywords.
  for (; li < lines.size() && !header_complete(); ++li) {
    const detail::Line& line = lines[li];
    const std::string& key = line.tokens[0].text;
    if (key == "name") {
      std::string n;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (i > 1) n += ' ';
        n += line.tokens[i].text;
      }
      name = n;
    } else if (key == "players") {
      detail::expect_arity(line, 2, "players");
      if (players) throw ParseError(line.number, 1, "duplicate 'players' line");
      players = detail::parse_index(line, 1, 1000, "player count") + 1;
      if (*players < 2) throw ParseError(line.number, line.tokens[1].column, "need at least 2 players");
      actions.assign(*players, std::nullopt);
    } else if (key == "actions") {
      if (!players) throw ParseError(line.number, 1, "'actions' before 'players'");
      if (line.tokens.size() < 3) throw ParseError(line.number, 1, "'actions' needs a player and labels");
      const std::size_t p = detail::parse_index(line, 1, *players, "player");
      if (actions[p]) throw ParseError(line.number, line.tokens[1].column, "duplicate actions for player " + std::to_string(p + 1));
      std::vector<std::string> labels;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) labels.push_back(line.tokens[i].text);
      actions[p] = std::move(labels);
    } else if (key == "team") {
      if (!players) throw ParseError(line.number, 1, "'team' before 'players'");
      if (team) throw ParseError(line.number, 1, "duplicate 'team' line");
      std::vector<std::size_t> t;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        t.push_back(detail::parse_index(line, i, *players, "team member"));
      }
      team = std::move(t);
      team_line = line.number;
    } else if (key == "adversary") {
      if (!players) throw ParseError(line.number, 1, "'adversary' before 'players'");
      detail::expect_arity(line, 2, "adversary");
      if (adversary) throw ParseError(line.number, 1, "duplicate 'adversary' line");
      adversary = detail::parse_index(line, 1, *players, "adversary");
    } else {
      break;  // first payoff record
    }
  }
  const std::size_t header_end = li < lines.size() ? lines[li].number : (lines.back().number + 1);
  if (!players) throw ParseError(header_end, 0, "missing 'players' line");
  for (std::size_t p = 0; p < *players; ++p) {
    if (!actions[p]) throw ParseError(header_end, 0, "missing 'actions' line for player " + std::to_string(p + 1));
  }
  if (!team) throw ParseError(header_end, 0, "missing 'team' line");
  if (!adversary) throw ParseError(header_end, 0, "missing 'adversary' line");

  std::vector<std::vector<std::string>> labels;
  for (auto& a : actions) labels.push_back(std::move(*a));
  const std::size_t n = *players;

  // Collect records first; Game validates labels and the shape.
  std::size_t total = 1;
  for (const auto& l : labels) {
    if (total > kMaxJointActions / std::max<std::size_t>(l.size(), 1)) {
      throw ScaleError("game has more than " + std::to_string(kMaxJointActions) + " joint actions");
    }
    total *= l.size();
  }
  std::vector<std::map<std::string, std::size_t, std::less<>>> lookup(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t a = 0; a < labels[p].size(); ++a) lookup[p].emplace(labels[p][a], a);
  }
  std::vector<Rational> payoffs(total * n);
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t p = n - 1; p-- > 0;) stride[p] = stride[p + 1] * labels[p + 1].size();

  for (; li < lines.size(); ++li) {
    const detail::Line& line = lines[li];
    if (line.tokens.size() != 2 * n) {
      throw ParseError(line.number, line.tokens.front().column,
                       "payoff record expects " + std::to_string(n) + " labels and " +
                           std::to_string(n) + " payoffs, got " +
                           std::to_string(line.tokens.size()) + " fields");
    }
    std::size_t idx = 0;
    for (std::size_t p = 0; p < n; ++p) {
      auto it = lookup[p].find(line.tokens[p].text);
      if (it == lookup[p].end()) {
        throw ParseError(line.number, line.tokens[p].column,
                         "unknown action '" + line.tokens[p].text + "' for player " + std::to_string(p + 1));
      }
      idx += it->second * stride[p];
    }
    if (seen[idx]) {
      std::string joint = "(";
      for (std::size_t p = 0; p < n; ++p) joint += (p ? "," : "") + line.tokens[p].text;
      throw ParseError(line.number, line.tokens[0].column, "duplicate record for joint action " + joint + ")");
    }
    seen[idx] = true;
    for (std::size_t p = 0; p < n; ++p) payoffs[idx * n + p] = detail::parse_number(line, n + p);
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (seen[idx]) continue;
    std::string joint = "(";
    std::size_t rest = idx;
    for (std::size_t p = 0; p < n; ++p) {
      joint += (p ? "," : "") + labels[p][rest / stride[p]];
      rest %= stride[p];
    }
    throw ParseError(lines.back().number + 1, 0, "missing record for joint action " + joint + ")");
  }

  try {
    Game g(std::move(labels), std::move(payoffs), std::move(name));
    TeamPartition part(g, *team, *adversary);
    return {std::move(g), std::move(part)};
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(team_line, 0, e.what());
  }
}

inline std::string emit_game(const Game& game, const TeamPartition& partition) {
  std::ostringstream os;
  os << kGameMagic << ' ' << kFormatVersion << '\n';
  if (!game.name().empty()) os << "name " << game.name() << '\n';
  os << "players " << game.num_players() << '\n';
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    os << "actions " << p + 1;
    for (const auto& l : game.action_labels(p)) os << ' ' << l;
    os << '\n';
  }
  os << "team";
  for (std::size_t p : partition.team()) os << ' ' << p + 1;
  os << "\nadversary " << partition.adversary() + 1 << '\n';
  for (std::size_t idx = 0; idx < game.num_joint_actions(); ++idx) {
    const JointAction a = game.joint_action(idx);
    for (std::size_t p = 0; p < game.num_players(); ++p) os << game.action_label(p, a[p]) << ' ';
    for (std::size_t p = 0; p < game.num_players(); ++p) {
      os << to_string(game.payoff(idx, p)) << (p + 1 < game.num_players() ? " " : "\n");
    }
  }
  return os.str();
}

inline std::string emit_game(const PartitionedGame& pg) { return emit_game(pg.game, pg.partition); }

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw InputError("error reading '" + path + "'");
  return os.str();
}

// ---------------------------------------------------------------------------
// Strategies

enum class StrategyKind { kProduct, kCorrelatedTeam, kJoint };

inline const char* to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::kProduct: return "product";
    case StrategyKind::kCorrelatedTeam: return "correlated-team";
    case StrategyKind::kJoint: return "joint";
  }
  return "?";
}

struct StrategyDocument {
  StrategyKind kind = StrategyKind::kProduct;
  Profile profile;           // kProduct
  CoECandidate candidate;    // kCorrelatedTeam
  CorrelatedStrategy joint;  // kJoint
};

inline StrategyDocument parse_strategy(std::string_view text, const Game& game,
                                       const TeamPartition& partition) {
  const auto lines = detail::tokenize(text);
  detail::check_header(lines, kStrategyMagic);
  if (lines.size() < 2 || lines[1].tokens[0].text != "kind") {
    throw ParseError(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, 0,
                     "expected a 'kind' line after the header");
  }
  const detail::Line& kind_line = lines[1];
  detail::expect_arity(kind_line, 2, "kind");
  StrategyDocument doc;
  const std::string& k = kind_line.tokens[1].text;
  if (k == "product") {
    doc.kind = StrategyKind::kProduct;
  } else if (k == "correlated-team") {
    doc.kind = StrategyKind::kCorrelatedTeam;
  } else if (k == "joint") {
    doc.kind = StrategyKind::kJoint;
  } else {
    throw ParseError(kind_line.number, kind_line.tokens[1].column,
                     "unknown kind '" + k + "' (expected product, correlated-team or joint)");
  }

  const std::size_t n = game.num_players();
  const auto& team = partition.team();
  const std::vector<std::size_t> everyone = detail::all_players(game);

  // Distributions under construction, keyed by name for error messages.
  std::vector<std::vector<Rational>> per_player(n);
  std::vector<std::vector<bool>> per_player_seen(n);
  for (std::size_t p = 0; p < n; ++p) {
    per_player[p].assign(game.num_actions(p), Rational(0));
    per_player_seen[p].assign(game.num_actions(p), false);
  }
  const std::vector<std::size_t>& corr_players = doc.kind == StrategyKind::kJoint ? everyone : team;
  std::vector<Rational> corr;
  std::vector<bool> corr_seen;
  if (doc.kind != StrategyKind::kProduct) {
    const std::size_t size = CorrelatedStrategy::space_size(game, corr_players);
    corr.assign(size, Rational(0));
    corr_seen.assign(size, false);
  }
  std::size_t last_line = kind_line.number;

  auto label_of = [&](const detail::Line& line, std::size_t i, std::size_t player) {
    auto a = game.find_action(player, line.tokens[i].text);
    if (!a) {
      throw ParseError(line.number, line.tokens[i].column,
                       "unknown action '" + line.tokens[i].text + "' for player " +
                           std::to_string(player + 1));
    }
    return *a;
  };
  auto probability = [&](const detail::Line& line, std::size_t i) {
    Rational r = detail::parse_number(line, i);
    if (r < 0 || r > 1) {
      throw ParseError(line.number, line.tokens[i].column,
                       "probability " + to_string(r) + " is outside [0, 1]");
    }
    return r;
  };
  auto wrong_kind = [&](const detail::Line& line) {
    throw ParseError(line.number, line.tokens[0].column,
                     "'" + line.tokens[0].text + "' entry is not allowed in a " +
                         std::string(to_string(doc.kind)) + " strategy");
  };

  for (std::size_t li = 2; li < lines.size(); ++li) {
    const detail::Line& line = lines[li];
    last_line = line.number;
    const std::string& key = line.tokens[0].text;
    if (key == "player") {
      if (doc.kind != StrategyKind::kProduct) wrong_kind(line);
      detail::expect_arity(line, 4, "player");
      const std::size_t p = detail::parse_index(line, 1, n, "player");
      const std::size_t a = label_of(line, 2, p);
      if (per_player_seen[p][a]) {
        throw ParseError(line.number, line.tokens[2].column, "duplicate entry for player " + std::to_string(p + 1) + " action '" + line.tokens[2].text + "'");
      }
      per_player_seen[p][a] = true;
      per_player[p][a] = probability(line, 3);
    } else if (key == "adversary") {
      if (doc.kind != StrategyKind::kCorrelatedTeam) wrong_kind(line);
      detail::expect_arity(line, 3, "adversary");
      const std::size_t p = partition.adversary();
      const std::size_t a = label_of(line, 1, p);
      if (per_player_seen[p][a]) {
        throw ParseError(line.number, line.tokens[1].column, "duplicate adversary entry '" + line.tokens[1].text + "'");
      }
      per_player_seen[p][a] = true;
      per_player[p][a] = probability(line, 2);
    } else if (key == "team" || key == "joint") {
      const bool is_team = key == "team";
      if (is_team != (doc.kind == StrategyKind::kCorrelatedTeam) || doc.kind == StrategyKind::kProduct) {
        wrong_kind(line);
      }
      detail::expect_arity(line, corr_players.size() + 2, key);
      JointAction a(corr_players.size());
      for (std::size_t k2 = 0; k2 < corr_players.size(); ++k2) {
        a[k2] = label_of(line, k2 + 1, corr_players[k2]);
      }
      const std::size_t idx = CorrelatedStrategy::index_of(game, corr_players, a);
      if (corr_seen[idx]) {
        throw ParseError(line.number, line.tokens[1].column,
                         "duplicate entry for " + detail::joint_label(game, a, corr_players));
      }
      corr_seen[idx] = true;
      corr[idx] = probability(line, corr_players.size() + 1);
    } else {
      throw ParseError(line.number, line.tokens[0].column, "unknown entry '" + key + "'");
    }
  }

  auto require_sum = [&](const std::vector<Rational>& probs, const std::string& what) {
    const Rational total = sum(probs);
    if (total != 1) {
      throw ParseError(last_line + 1, 0, what + " probabilities sum to " + to_string(total) + ", not 1");
    }
  };
  switch (doc.kind) {
    case StrategyKind::kProduct:
      for (std::size_t p = 0; p < n; ++p) {
        require_sum(per_player[p], "player " + std::to_string(p + 1));
        doc.profile.push_back(MixedStrategy{p, per_player[p]});
      }
      break;
    case StrategyKind::kCorrelatedTeam:
      require_sum(corr, "team");
      require_sum(per_player[partition.adversary()], "adversary");
      doc.candidate = {CorrelatedStrategy{team, corr},
                       MixedStrategy{partition.adversary(), per_player[partition.adversary()]}};
      break;
    case StrategyKind::kJoint:
      require_sum(corr, "joint");
      doc.joint = CorrelatedStrategy{everyone, corr};
      break;
  }
  return doc;
}

inline std::string emit_profile(const Game& game, const Profile& profile) {
  std::ostringstream os;
  os << kStrategyMagic << ' ' << kFormatVersion << "\nkind product\n";
  for (const MixedStrategy& s : profile) {
    for (std::size_t a = 0; a < s.probs.size(); ++a) {
      if (s.probs[a] == 0) continue;
      os << "player " << s.player + 1 << ' ' << game.action_label(s.player, a) << ' '
         << to_string(s.probs[a]) << '\n';
    }
  }
  return os.str();
}

inline std::string emit_candidate(const Game& game, const CoECandidate& cand) {
  std::ostringstream os;
  os << kStrategyMagic << ' ' << kFormatVersion << "\nkind correlated-team\n";
  const auto& players = cand.team_strategy.players;
  for (std::size_t t = 0; t < cand.team_strategy.probs.size(); ++t) {
    if (cand.team_strategy.probs[t] == 0) continue;
    const JointAction a = CorrelatedStrategy::actions_of(game, players, t);
    os << "team";
    for (std::size_t k = 0; k < players.size(); ++k) os << ' ' << game.action_label(players[k], a[k]);
    os << ' ' << to_string(cand.team_strategy.probs[t]) << '\n';
  }
  const MixedStrategy& x = cand.adversary_strategy;
  for (std::size_t a = 0; a < x.probs.size(); ++a) {
    if (x.probs[a] == 0) continue;
    os << "adversary " << game.action_label(x.player, a) << ' ' << to_string(x.probs[a]) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DIMACS CNF

/// Reads "p cnf <vars> <clauses>" followed by 0-terminated clauses of signed
/// integers; 'c' lines are comments. Clauses may span lines.
inline CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula phi;
  std::optional<std::size_t> declared_clauses;
  std::vector<Literal> current;
  std::size_t number = 0;
  std::size_t pos = 0;
  std::size_t last_line = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    const auto tokens = detail::tokenize(raw);
    if (!tokens.empty()) {
      const auto& toks = tokens.front().tokens;
      last_line = number;
      if (toks[0].text == "c") {
        // comment
      } else if (toks[0].text == "%") {
        break;  // end marker used by some corpora
      } else if (toks[0].text == "p") {
        if (declared_clauses) throw ParseError(number, toks[0].column, "duplicate problem line");
        if (toks.size() != 4 || toks[1].text != "cnf") {
          throw ParseError(number, toks[0].column, "expected 'p cnf <variables> <clauses>'");
        }
        detail::Line line{number, toks};
        phi.num_vars = detail::parse_index(line, 2, 1'000'000, "variable count") + 1;
        std::size_t c = 0;
        const std::string& ct = toks[3].text;
        bool ok = !ct.empty() && ct.size() <= 9;
        for (char ch : ct) ok = ok && ch >= '0' && ch <= '9';
        if (!ok) throw ParseError(number, toks[3].column, "bad clause count '" + ct + "'");
        c = std::stoul(ct);
        declared_clauses = c;
      } else {
        if (!declared_clauses) throw ParseError(number, toks[0].column, "clause before the problem line");
        for (const auto& tok : toks) {
          long v = 0;
          std::size_t used = 0;
          try {
            v = std::stol(tok.text, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != tok.text.size() || tok.text.empty()) {
            throw ParseError(number, tok.column, "'" + tok.text + "' is not an integer literal");
          }
          if (v == 0) {
            if (current.empty()) throw ParseError(number, tok.column, "empty clause");
            phi.clauses.push_back(std::move(current));
            current.clear();
            continue;
          }
          const std::size_t var = static_cast<std::size_t>(v < 0 ? -v : v);
          if (var > phi.num_vars) {
            throw ParseError(number, tok.column,
                             "variable " + std::to_string(var) + " exceeds declared count " +
                                 std::to_string(phi.num_vars));
          }
          current.push_back(Literal{var, v > 0});
        }
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (!declared_clauses) throw ParseError(number, 0, "missing problem line 'p cnf <variables> <clauses>'");
  if (!current.empty()) throw ParseError(last_line, 0, "last clause is not terminated by 0");
  if (phi.clauses.size() != *declared_clauses) {
    throw ParseError(last_line, 0,
                     "problem line declares " + std::to_string(*declared_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
  }
  phi.validate();
  return phi;
}

// ---------------------------------------------------------------------------
// Reports: one "key: value" per line, rationals as p/q.

inline std::string format_distribution(const Game& game, const MixedStrategy& s) {
  std::string out;
  for (std::size_t a = 0; a < s.probs.size(); ++a) {
    if (s.probs[a] == 0) continue;
    if (!out.empty()) out += ' ';
    out += game.action_label(s.player, a) + "=" + to_string(s.probs[a]);
  }
  return out;
}

inline std::string format_distribution(const Game& game, const CorrelatedStrategy& s) {
  std::string out;
  for (std::size_t t = 0; t < s.probs.size(); ++t) {
    if (s.probs[t] == 0) continue;
    if (!out.empty()) out += ' ';
    out += detail::joint_label(game, CorrelatedStrategy::actions_of(game, s.players, t), s.players) +
           "=" + to_string(s.probs[t]);
  }
  return out;
}

inline std::string format_report(const Game& game, const VerificationReport& report) {
  std::ostringstream os;
  os << "concept: " << to_string(report.concept_kind) << '\n';
  os << "holds: " << (report.holds() ? "true" : "false") << '\n';
  os << "violations: " << report.violations.size() << '\n';
  for (const Violation& v : report.violations) {
    os << "violation: player=" << v.player + 1;
    if (v.recommended) os << " recommended=" << game.action_label(v.player, *v.recommended);
    os << " deviation=" << game.action_label(v.player, v.deviation)
       << " gain=" << to_string(v.amount) << '\n';
  }
  return os.str();
}

inline std::string format_candidate(const Game& game, const CoECandidate& cand) {
  return "team_strategy: " + format_distribution(game, cand.team_strategy) + "\n" +
         "adversary_strategy: " + format_distribution(game, cand.adversary_strategy) + "\n";
}

inline std::string format_profile(const Game& game, const Profile& profile) {
  std::string out;
  for (const MixedStrategy& s : profile) {
    out += "strategy_" + std::to_string(s.player + 1) + ": " + format_distribution(game, s) + "\n";
  }
  return out;
}

/// Algebraic equilibrium: the defining polynomial (ascending powers), the
/// isolating interval of the pivot's probability, and 12-digit decimal
/// approximations of every strategy.
inline std::string format_algebraic(const Game& game, const AlgebraicNash& eq) {
  std::ostringstream os;
  os << "pivot: " << eq.pivot + 1 << '\n';
  os << "pivot_actions: " << game.action_label(eq.pivot, eq.supports[eq.pivot][0]) << ' '
     << game.action_label(eq.pivot, eq.supports[eq.pivot][1]) << '\n';
  os << "polynomial:";
  for (const Rational& c : eq.polynomial.coeffs()) os << ' ' << to_string(c);
  os << '\n';
  os << "root_interval: " << to_string(eq.lo) << ' ' << to_string(eq.hi) << '\n';
  const Profile approx = approximate(eq, Rational(Integer(1), Integer(1) << 60));
  for (const MixedStrategy& s : approx) {
    os << "approx_strategy_" << s.player + 1 << ":";
    for (std::size_t a = 0; a < s.probs.size(); ++a) {
      if (s.probs[a] == 0) continue;
      os << ' ' << game.action_label(s.player, a) << '=' << to_decimal(s.probs[a], 12);
    }
    os << '\n';
  }
  return os.str();
}

inline std::string format_tmcoe(const Game& game, const TmcoeResult& r) {
  std::ostringstream os;
  os << "method: " << to_string(r.method) << '\n';
  os << "team_value: " << to_string(r.team_value) << '\n';
  os << "certified_exact: " << (r.certified_exact ? "true" : "false") << '\n';
  if (r.grid_resolution) os << "grid_resolution: " << *r.grid_resolution << '\n';
  os << format_candidate(game, r.candidate);
  return os.str();
}

inline std::string format_consistency(const Game& game, const TeamPartition& partition,
                                      const ConsistencyReport& r) {
  std::ostringstream os;
  os << "consistent: " << (r.consistent ? "true" : "false") << '\n';
  if (r.consistent) {
    for (std::size_t k = 0; k < partition.team().size(); ++k) {
      os << "k_" << partition.team()[k] + 1 << ": " << to_string(r.constants[k]) << '\n';
    }
  }
  for (const ConsistencyWitness& w : r.witnesses) {
    os << "witness: player=" << w.player + 1 << " from=" << format_joint_action(game, w.recommended)
       << " to=" << format_joint_action(game, w.deviation) << '\n';
  }
  return os.str();
}

inline std::string format_classification(const Classification& c) {
  std::ostringstream os;
  os << "form: " << (c.correlated ? "correlated" : "product") << '\n';
  os << "u_T: " << to_string(c.team_utility) << '\n';
  os << "stable: " << to_string(c.stable) << '\n';
  os << "stable_definition: ne-or-coe-in-stated-form\n";
  os << "ne: " << to_string(c.ne) << '\n';
  os << "coe: " << to_string(c.coe) << '\n';
  os << "tmcoe: " << to_string(c.tmcoe) << '\n';
  if (c.correlated) {
    os << "tmcoe_reference: "
       << (c.reference_method ? to_string(*c.reference_method) : "none") << '\n';
    if (c.reference_method == TmcoeMethod::kGridSearch || !c.reference_method) {
      os << "grid_resolution: " << c.grid_resolution << '\n';
    }
    os << "reference_optimum: " << (c.reference_optimum ? to_string(*c.reference_optimum) : "none")
       << '\n';
    os << "reference_certified_exact: " << (c.reference_certified ? "true" : "false") << '\n';
  }
  os << "team_maxmin: " << (c.team_maxmin ? "yes" : "no") << '\n';
  os << "maxmin_value: " << to_string(c.maxmin_value) << '\n';
  return os.str();
}

}  // namespace coop

#endif  // COOP_IO_HPP_
