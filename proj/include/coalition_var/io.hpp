/*
 * Copyright 2026 The coalition-var Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file coalition_var/io.hpp
 *
 * \brief Game files, attribution tables and generator specs.
 *
 * Game file (JSON):
 *
 *     {"n": 3, "players": ["1", "2", "3"],
 *      "coalitions": [{"members": ["1"], "value": 0}, ...]}
 *
 * "players" is optional (defaults to "1".."n"); every non-empty coalition
 * must appear exactly once; the empty coalition is optional and defaults
 * to 0.
 *
 * Attribution table (CSV), one row per set of absent factors, factors
 * separated by ';' and the all-present row left blank:
 *
 *     absent_factors,value
 *     ,0
 *     LDL,0.21
 *     LDL;smoking,0.35
 *
 * Published summaries can be given directly as `factor,V,sqrtR` rows.
 */

#ifndef COALITION_VAR_IO_HPP
#define COALITION_VAR_IO_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "coalition_var/analysis.hpp"
#include "coalition_var/coalition.hpp"
#include "coalition_var/error.hpp"
#include "coalition_var/game.hpp"

namespace coalition_var {

/// Largest game written out as an explicit coalition list.
inline constexpr int kGameFileLimit = 20;

/// A game together with the names its players carry in files and reports.
struct NamedGame {
  Game game;
  std::vector<std::string> players;
};

inline std::vector<std::string> default_player_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) names.push_back(std::to_string(p));
  return names;
}

/// 12 significant digits, the precision used in every report.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string format_coalition(Coalition s,
                                    const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (PlayerId p : s.members()) {
    if (!first) out += ",";
    out += names[p];
    first = false;
  }
  return out + "}";
}

namespace detail {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos
                                              ? std::string_view::npos
                                              : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x)) {
    throw Error(ErrorKind::kParse, "bad number '" + text + "' for " + what);
  }
  return x;
}

inline int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorKind::kParse, "bad integer '" + text + "' for " + what);
  }
  return static_cast<int>(x);
}

// Turns named member lists into a complete tabular game.
inline NamedGame build_named_game(
    std::vector<std::string> names,
    const std::vector<std::pair<std::vector<std::string>, double>>& rows,
    std::string_view what) {
  const int n = static_cast<int>(names.size());
  if (n < 1) throw Error(ErrorKind::kParse, std::string(what) + " has no players");
  if (n > kGameFileLimit) {
    throw Error(ErrorKind::kTooManyPlayers,
                std::string(what) + " lists " + std::to_string(n) +
                    " players; explicit tables are limited to " +
                    std::to_string(kGameFileLimit));
  }
  std::unordered_map<std::string, PlayerId> index;
  for (std::size_t p = 0; p < names.size(); ++p) {
    if (!index.emplace(names[p], p).second) {
      throw Error(ErrorKind::kParse, "duplicate player name '" + names[p] + "'");
    }
  }
  std::map<Coalition, double> values;
  for (const auto& [members, value] : rows) {
    Coalition s;
    for (const auto& name : members) {
      const auto it = index.find(name);
      if (it == index.end()) {
        throw Error(ErrorKind::kParse, "unknown player '" + name + "'");
      }
      if (s.contains(it->second)) {
        throw Error(ErrorKind::kParse,
                    "player '" + name + "' listed twice in one coalition");
      }
      s = s.with(it->second);
    }
    if (!values.emplace(s, value).second) {
      throw Error(ErrorKind::kDuplicateCoalition,
                  "coalition " + format_coalition(s, names) + " appears twice");
    }
  }
  const Coalition::mask_type count = Coalition::mask_type{1} << n;
  for (Coalition::mask_type m = 1; m < count; ++m) {
    if (!values.contains(Coalition::from_mask(m))) {
      throw Error(ErrorKind::kMissingCoalition,
                  "no value for coalition " +
                      format_coalition(Coalition::from_mask(m), names));
    }
  }
  return NamedGame{make_tabular(n, values), std::move(names)};
}

}  // namespace detail

// --- game files -------------------------------------------------------------

inline NamedGame parse_game_file(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "game file must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::kParse, "game file needs an integer 'n'");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) throw Error(ErrorKind::kParse, "'n' must be >= 1");
  std::vector<std::string> names;
  if (doc.contains("players")) {
    if (!doc["players"].is_array()) {
      throw Error(ErrorKind::kParse, "'players' must be an array");
    }
    for (const auto& p : doc["players"]) {
      if (!p.is_string()) throw Error(ErrorKind::kParse, "player names must be strings");
      names.push_back(p.get<std::string>());
    }
    if (static_cast<int>(names.size()) != n) {
      throw Error(ErrorKind::kParse, "'players' has " +
                                         std::to_string(names.size()) +
                                         " names but n = " + std::to_string(n));
    }
  } else {
    if (n > kGameFileLimit) {
      throw Error(ErrorKind::kTooManyPlayers,
                  "explicit tables are limited to " +
                      std::to_string(kGameFileLimit) + " players");
    }
    names = default_player_names(n);
  }
  if (!doc.contains("coalitions") || !doc["coalitions"].is_array()) {
    throw Error(ErrorKind::kParse, "game file needs a 'coalitions' array");
  }
  std::vector<std::pair<std::vector<std::string>, double>> rows;
  for (const auto& entry : doc["coalitions"]) {
    if (!entry.is_object() || !entry.contains("members") ||
        !entry["members"].is_array() || !entry.contains("value") ||
        !entry["value"].is_number()) {
      throw Error(ErrorKind::kParse,
                  "coalition entries need 'members' (array) and 'value' "
                  "(number): " + entry.dump());
    }
    std::vector<std::string> members;
    for (const auto& m : entry["members"]) {
      if (m.is_string()) {
        members.push_back(m.get<std::string>());
      } else if (m.is_number_integer()) {
        members.push_back(std::to_string(m.get<long long>()));
      } else {
        throw Error(ErrorKind::kParse, "member names must be strings");
      }
    }
    rows.emplace_back(std::move(members), entry["value"].get<double>());
  }
  return detail::build_named_game(std::move(names), rows, "game file");
}

inline NamedGame parse_game_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  return parse_game_file(doc);
}

inline NamedGame read_game_file(const std::string& path) {
  return parse_game_file(std::string_view(detail::read_text(path)));
}

/// Explicit coalition list for a game of at most kGameFileLimit players,
/// in increasing mask order, the empty coalition included.
inline nlohmann::json to_game_file(const Game& game,
                                   std::vector<std::string> names = {}) {
  const int n = game.n_players();
  if (n > kGameFileLimit) {
    throw Error(ErrorKind::kTooManyPlayers,
                "2^" + std::to_string(n) +
                    " coalitions is too many for a game file (limit " +
                    std::to_string(kGameFileLimit) +
                    " players); evaluate the generator directly instead");
  }
  if (names.empty()) names = default_player_names(n);
  nlohmann::json doc;
  doc["n"] = n;
  doc["players"] = names;
  nlohmann::json rows = nlohmann::json::array();
  const Coalition::mask_type count = Coalition::mask_type{1} << n;
  for (Coalition::mask_type m = 0; m < count; ++m) {
    const Coalition s = Coalition::from_mask(m);
    nlohmann::json members = nlohmann::json::array();
    for (PlayerId p : s.members()) members.push_back(names[p]);
    rows.push_back({{"members", members}, {"value", game.value(s)}});
  }
  doc["coalitions"] = std::move(rows);
  return doc;
}

// --- generator specs --------------------------------------------------------

/// additive:w1,w2,... | majority:N | symmetric:g0,g1,... | twotype:na,nb,sqrtkl
inline NamedGame parse_generator(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::kParse, "generator spec needs 'family:args', got '" +
                                       std::string(spec) + "'");
  }
  const std::string family(detail::trim(spec.substr(0, colon)));
  const std::vector<std::string> args = detail::split(spec.substr(colon + 1), ',');
  auto numbers = [&] {
    std::vector<double> xs;
    for (const auto& a : args) xs.push_back(detail::parse_double(a, family));
    return xs;
  };
  auto named = [](Game g) {
    const int n = g.n_players();
    return NamedGame{std::move(g), default_player_names(n)};
  };
  if (family == "additive") return named(generate_additive(numbers()));
  if (family == "majority") {
    if (args.size() != 1) throw Error(ErrorKind::kParse, "majority takes one N");
    const int n = detail::parse_int(args[0], "majority N");
    if (n < 1) throw Error(ErrorKind::kParse, "majority N must be >= 1");
    return named(generate_majority(n));
  }
  if (family == "symmetric") {
    std::vector<double> g = numbers();
    if (g.size() < 2) throw Error(ErrorKind::kParse, "symmetric needs g0,g1,...");
    const int n = static_cast<int>(g.size()) - 1;
    return named(generate_symmetric(n, std::move(g)));
  }
  if (family == "twotype") {
    if (args.size() != 3 || args[2] != "sqrtkl") {
      throw Error(ErrorKind::kParse, "twotype takes na,nb,sqrtkl");
    }
    const int n_a = detail::parse_int(args[0], "twotype na");
    const int n_b = detail::parse_int(args[1], "twotype nb");
    if (n_a < 0 || n_b < 0 || n_a + n_b < 1) {
      throw Error(ErrorKind::kParse, "twotype counts must be >= 0 and not both 0");
    }
    return named(generate_two_type(n_a, n_b, sqrt_product_worth));
  }
  throw Error(ErrorKind::kParse, "unknown generator family '" + family + "'");
}

// --- attribution tables -----------------------------------------------------

/// Either a complete attribution game or a list of published (V, sqrt R).
struct AttributionInput {
  std::optional<NamedGame> game;
  std::vector<SignificanceInput> summary;
};

inline AttributionInput parse_attribution_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back(detail::split(t, ','));
  }
  if (lines.empty()) throw Error(ErrorKind::kParse, "attribution file is empty");
  const auto& header = lines.front();
  AttributionInput out;
  if (header.size() == 3 && header[0] == "factor" && header[1] == "V" &&
      header[2] == "sqrtR") {
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& row = lines[k];
      if (row.size() != 3) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(k + 1) +
                                           ": expected factor,V,sqrtR");
      }
      const double sd = detail::parse_double(row[2], "sqrtR of " + row[0]);
      if (sd < 0.0) {
        throw Error(ErrorKind::kNegativeUncertainty, "sqrtR of " + row[0] + " < 0");
      }
      out.summary.push_back({row[0], detail::parse_double(row[1], "V of " + row[0]),
                             sd * sd});
    }
    if (out.summary.empty()) throw Error(ErrorKind::kParse, "no factor rows");
    return out;
  }
  if (header.size() != 2 || header[0] != "absent_factors" || header[1] != "value") {
    throw Error(ErrorKind::kParse,
                "header must be 'absent_factors,value' or 'factor,V,sqrtR'");
  }
  std::vector<std::string> factors;
  std::vector<std::pair<std::vector<std::string>, double>> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& row = lines[k];
    if (row.size() != 2) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(k + 1) + ": expected absent_factors,value");
    }
    std::vector<std::string> members;
    if (!row[0].empty()) {
      for (auto& f : detail::split(row[0], ';')) {
        if (f.empty()) throw Error(ErrorKind::kParse, "empty factor name");
        if (std::find(factors.begin(), factors.end(), f) == factors.end()) {
          factors.push_back(f);
        }
        members.push_back(std::move(f));
      }
    }
    rows.emplace_back(std::move(members), detail::parse_double(row[1], "value"));
  }
  out.game = detail::build_named_game(std::move(factors), rows, "attribution file");
  return out;
}

inline AttributionInput read_attribution_csv(const std::string& path) {
  return parse_attribution_csv(detail::read_text(path));
}

}  // namespace coalition_var

#endif  // COALITION_VAR_IO_HPP
