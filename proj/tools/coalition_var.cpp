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

// coalition-var: Shapley values and their uncertainty from the command line.
//
// Exit codes: 0 ok, 1 property violation or internal failure, 2 malformed
// input, 3 game beyond the exact-computation limit, 4 too few samples.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalition_var/coalition_var.hpp"

namespace cv = coalition_var;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitFewSamples = 4;

int exit_code_for(const cv::Error& e) {
  switch (e.kind()) {
    case cv::ErrorKind::kGameTooLargeForExact:
    case cv::ErrorKind::kTooManyPlayers:
    case cv::ErrorKind::kTooManyPlayersForOracle:
    case cv::ErrorKind::kTooLargeForExactCheck:
      return kExitTooLarge;
    case cv::ErrorKind::kInsufficientSamples:
      return kExitFewSamples;
    case cv::ErrorKind::kNumericalInstability:
    case cv::ErrorKind::kDegenerateDenominators:
      return kExitViolation;
    default:
      return kExitBadInput;
  }
}

enum class Format { kText, kCsv, kJson };

const std::map<std::string, Format> kFormats = {
    {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};

std::string num(double x) { return cv::format_number(x); }

// nlohmann prints doubles in shortest round-trip form; reports use the same
// 12 significant digits as the text and CSV renderings.
nlohmann::json jnum(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  return nlohmann::json::parse(num(x));
}

cv::NamedGame load_game(const std::string& path, const std::string& generator) {
  if (!generator.empty() && !path.empty()) {
    throw cv::Error(cv::ErrorKind::kInvalidArgument,
                    "give either a game file or --generate, not both");
  }
  if (!generator.empty()) return cv::parse_generator(generator);
  if (path.empty()) {
    throw cv::Error(cv::ErrorKind::kInvalidArgument,
                    "a game file or --generate is required");
  }
  return cv::read_game_file(path);
}

cv::PlayerId resolve_player(const cv::NamedGame& g, const std::string& name) {
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    if (g.players[p] == name) return p;
  }
  throw cv::Error(cv::ErrorKind::kInvalidArgument, "unknown player '" + name + "'");
}

std::vector<int> parse_sizes(const std::string& spec) {
  std::vector<int> sizes;
  if (spec.find(':') != std::string::npos) {
    const auto parts = cv::detail::split(spec, ':');
    if (parts.size() < 2 || parts.size() > 3) {
      throw cv::Error(cv::ErrorKind::kParse, "size range is lo:hi[:step]");
    }
    const int lo = cv::detail::parse_int(parts[0], "size range");
    const int hi = cv::detail::parse_int(parts[1], "size range");
    const int step = parts.size() == 3 ? cv::detail::parse_int(parts[2], "size step") : 1;
    if (step < 1) throw cv::Error(cv::ErrorKind::kParse, "size step must be >= 1");
    for (int n = lo; n <= hi; n += step) sizes.push_back(n);
  } else {
    for (const auto& s : cv::detail::split(spec, ',')) {
      sizes.push_back(cv::detail::parse_int(s, "size list"));
    }
  }
  if (sizes.empty()) throw cv::Error(cv::ErrorKind::kParse, "no sizes given");
  return sizes;
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string path;
  std::string generator;
  std::string weighting = "shapley";
  Format format = Format::kText;
};

int run_eval(const EvalArgs& args) {
  const cv::NamedGame g = load_game(args.path, args.generator);
  const cv::Weighting w = args.weighting == "banzhaf" ? cv::Weighting::banzhaf()
                                                      : cv::Weighting::shapley();
  cv::ExactOptions options;
  options.max_players = cv::exact_limit_from_environment();
  const auto profiles = cv::all_profiles(g.game, w, options);
  cv::KahanSum sum_v;
  for (const auto& p : profiles) sum_v.add(p.v);
  const double average_r = cv::average_uncertainty(profiles);
  std::optional<double> grand;
  if (g.game.addressable()) {
    grand = g.game.value(g.game.grand_coalition()) - g.game.value(cv::Coalition{});
  }

  switch (args.format) {
    case Format::kText:
      std::cout << "weighting: " << w.name() << "\n";
      std::cout << "player\tV\tR\tsqrtR\n";
      for (const auto& p : profiles) {
        std::cout << g.players[p.player] << "\t" << num(p.v) << "\t" << num(p.r)
                  << "\t" << num(p.sd) << "\n";
      }
      std::cout << "sum V: " << num(sum_v.value()) << "\n";
      if (grand) std::cout << "G(A) - G(empty): " << num(*grand) << "\n";
      std::cout << "average R: " << num(average_r) << "\n";
      break;
    case Format::kCsv:
      std::cout << "player,V,R,sqrtR\n";
      for (const auto& p : profiles) {
        std::cout << g.players[p.player] << "," << num(p.v) << "," << num(p.r)
                  << "," << num(p.sd) << "\n";
      }
      std::cout << "SUM," << num(sum_v.value()) << ",,\n";
      std::cout << "MEAN,," << num(average_r) << ",\n";
      break;
    case Format::kJson: {
      nlohmann::json doc;
      doc["weighting"] = std::string(w.name());
      doc["players"] = nlohmann::json::array();
      for (const auto& p : profiles) {
        doc["players"].push_back({{"player", g.players[p.player]},
                                  {"V", jnum(p.v)},
                                  {"R", jnum(p.r)},
                                  {"sqrtR", jnum(p.sd)}});
      }
      doc["sum_V"] = jnum(sum_v.value());
      if (grand) doc["grand_value"] = jnum(*grand);
      doc["average_R"] = jnum(average_r);
      std::cout << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

// --- sample -----------------------------------------------------------------

struct SampleArgs {
  std::string path;
  std::string generator;
  std::string player;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::uint64_t chunks = 1;
  unsigned threads = 0;
  Format format = Format::kText;
};

int run_sample(const SampleArgs& args) {
  const cv::NamedGame g = load_game(args.path, args.generator);
  std::vector<cv::EstimateReport> reports;
  if (!args.player.empty()) {
    reports.push_back(cv::estimate_parallel(g.game, resolve_player(g, args.player),
                                            args.samples, args.seed, args.chunks,
                                            args.threads));
  } else {
    reports = cv::estimate_all(g.game, args.samples, args.seed, args.chunks,
                               args.threads);
  }
  switch (args.format) {
    case Format::kText:
      std::cout << "samples: " << args.samples << "  seed: " << args.seed
                << "  chunks: " << args.chunks << "\n";
      std::cout << "player\tv_hat\tr_hat\tse_v\tci95_lo\tci95_hi\n";
      for (const auto& r : reports) {
        std::cout << g.players[r.player] << "\t" << num(r.v_hat) << "\t"
                  << num(r.r_hat) << "\t" << num(r.se_v) << "\t"
                  << num(r.ci95_v.lo) << "\t" << num(r.ci95_v.hi) << "\n";
      }
      if (reports.size() > 1) {
        std::cout << "note: all players share the sampled orderings, so their "
                     "estimates are correlated\n";
      }
      break;
    case Format::kCsv:
      std::cout << "player,v_hat,r_hat,se_v,ci95_lo,ci95_hi,n_samples,seed,chunks\n";
      for (const auto& r : reports) {
        std::cout << g.players[r.player] << "," << num(r.v_hat) << ","
                  << num(r.r_hat) << "," << num(r.se_v) << "," << num(r.ci95_v.lo)
                  << "," << num(r.ci95_v.hi) << "," << r.n_samples << ","
                  << r.seed << "," << r.n_chunks << "\n";
      }
      break;
    case Format::kJson: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : reports) {
        doc.push_back({{"player", g.players[r.player]},
                       {"v_hat", jnum(r.v_hat)},
                       {"r_hat", jnum(r.r_hat)},
                       {"se_v", jnum(r.se_v)},
                       {"ci95_v", {jnum(r.ci95_v.lo), jnum(r.ci95_v.hi)}},
                       {"n_samples", r.n_samples},
                       {"seed", r.seed},
                       {"chunks", r.n_chunks}});
      }
      std::cout << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

// --- generate ---------------------------------------------------------------

int run_generate(const std::string& spec, const std::string& output) {
  const cv::NamedGame g = cv::parse_generator(spec);
  nlohmann::json doc;
  try {
    doc = cv::to_game_file(g.game, g.players);
  } catch (const cv::Error& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: run `coalition-var eval --generate " << spec
              << "` to use the closed-form fast path\n";
    return kExitBadInput;
  }
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw cv::Error(cv::ErrorKind::kParse, "cannot write '" + output + "'");
    out << text;
  }
  return kExitOk;
}

// --- attrib -----------------------------------------------------------------

int run_attrib(const std::string& path, double z_crit, Format format) {
  const cv::AttributionInput input = cv::read_attribution_csv(path);
  std::vector<cv::SignificanceInput> rows = input.summary;
  std::optional<double> sum_v;
  std::optional<double> grand;
  if (input.game) {
    const auto profiles = cv::all_profiles(input.game->game);
    cv::KahanSum total;
    for (const auto& p : profiles) {
      rows.push_back({input.game->players[p.player], p.v, p.r});
      total.add(p.v);
    }
    sum_v = total.value();
    const cv::Game& game = input.game->game;
    grand = game.value(game.grand_coalition()) - game.value(cv::Coalition{});
  }
  const auto table = cv::significance_table(rows, z_crit);
  const auto notes = cv::borderline_notes(table, z_crit);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };

  switch (format) {
    case Format::kText:
      std::cout << "factor\tV\tsqrtR\tz\tsignificant\n";
      for (const auto& r : table) {
        std::cout << r.label << "\t" << num(r.v) << "\t" << num(r.sd) << "\t"
                  << num(r.z) << "\t" << yes_no(r.significant_5pct) << "\n";
      }
      if (sum_v) {
        std::cout << "total: sum V = " << num(*sum_v)
                  << ", G(all absent) - G(none absent) = " << num(*grand) << "\n";
      }
      std::cout << "test: two-sided z = |V|/sqrtR > " << num(z_crit) << "\n";
      for (const auto& n : notes) std::cout << n << "\n";
      break;
    case Format::kCsv:
      std::cout << "player,V,R,sqrtR,z,significant\n";
      for (const auto& r : table) {
        std::cout << r.label << "," << num(r.v) << "," << num(r.sd * r.sd) << ","
                  << num(r.sd) << "," << num(r.z) << ","
                  << yes_no(r.significant_5pct) << "\n";
      }
      for (const auto& n : notes) std::cerr << n << "\n";
      break;
    case Format::kJson: {
      nlohmann::json doc;
      doc["z_crit"] = jnum(z_crit);
      doc["factors"] = nlohmann::json::array();
      for (const auto& r : table) {
        doc["factors"].push_back({{"factor", r.label},
                                  {"V", jnum(r.v)},
                                  {"sqrtR", jnum(r.sd)},
                                  {"z", jnum(r.z)},
                                  {"significant", r.significant_5pct}});
      }
      if (sum_v) {
        doc["sum_V"] = jnum(*sum_v);
        doc["grand_value"] = jnum(*grand);
      }
      doc["notes"] = notes;
      std::cout << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  std::string property = "all";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  int n = 0;
  Format format = Format::kText;
  std::string fault;
};

nlohmann::json report_json(const cv::PropertyReport& r) {
  nlohmann::json doc;
  doc["property"] = r.property;
  doc["instances"] = r.instances;
  doc["checks"] = r.checks;
  doc["violations"] = r.violation_count;
  doc["max_gap"] = jnum(r.max_gap);
  doc["tolerance"] = jnum(r.tolerance);
  doc["passed"] = r.passed();
  doc["witnesses"] = nlohmann::json::array();
  for (const auto& v : r.violations) {
    doc["witnesses"].push_back({{"fingerprint", v.fingerprint},
                                {"game", v.witness.substr(v.witness.find('|') + 1)},
                                {"player", v.player + 1},
                                {"lhs", jnum(v.lhs)},
                                {"rhs", jnum(v.rhs)},
                                {"gap", jnum(v.gap)}});
  }
  return doc;
}

int run_check(const CheckArgs& args) {
  std::vector<cv::Property> properties;
  if (args.property == "all") {
    properties.assign(cv::kAllProperties.begin(), cv::kAllProperties.end());
  } else if (auto p = cv::parse_property(args.property)) {
    properties.push_back(*p);
  } else {
    throw cv::Error(cv::ErrorKind::kInvalidArgument,
                    "unknown property '" + args.property + "'");
  }
  cv::SuiteOptions options;
  if (args.n != 0) {
    options.min_players = args.n;
    options.max_players = args.n;
  }
  cv::ProfileFn profiles = cv::exact_profiles();
  if (args.fault == "negate-variance") {
    profiles = [](const cv::Game& g) {
      auto rows = cv::all_profiles(g);
      for (auto& r : rows) r.r = -r.r;
      return rows;
    };
  } else if (!args.fault.empty()) {
    throw cv::Error(cv::ErrorKind::kInvalidArgument, "unknown fault '" + args.fault + "'");
  }

  bool all_passed = true;
  nlohmann::json doc = nlohmann::json::array();
  for (cv::Property p : properties) {
    const auto report = cv::run_property_suite(p, args.trials, args.seed, options, profiles);
    all_passed = all_passed && report.passed();
    if (args.format == Format::kJson) {
      doc.push_back(report_json(report));
      continue;
    }
    std::cout << (report.passed() ? "PASS " : "FAIL ") << report.property
              << " instances=" << report.instances << " checks=" << report.checks
              << " violations=" << report.violation_count
              << " max_gap=" << num(report.max_gap) << "\n";
    for (const auto& v : report.violations) {
      std::cout << "  witness player=" << v.player + 1 << " lhs=" << num(v.lhs)
                << " rhs=" << num(v.rhs) << " gap=" << num(v.gap) << "\n    "
                << v.witness << "\n";
    }
  }
  if (args.format == Format::kJson) std::cout << doc.dump(2) << "\n";
  return all_passed ? kExitOk : kExitViolation;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string family;
  double k = 0.5;
  std::string sizes;
  std::string output;
  double tolerance = 0.25;
};

int run_sweep(const SweepArgs& args) {
  const auto family = cv::parse_sweep_family(args.family);
  if (!family) {
    throw cv::Error(cv::ErrorKind::kInvalidArgument,
                    "unknown family '" + args.family + "'");
  }
  std::string spec = args.sizes;
  if (spec.empty()) {
    spec = *family == cv::SweepFamily::kMajority ? "3:201:2" : "10,20,50,100,200,400";
  }
  const auto result = cv::asymptotic_sweep(*family, args.k, parse_sizes(spec), args.tolerance);
  std::ostringstream csv;
  csv << "N,V,R,scaled\n";
  for (const auto& r : result.rows) {
    csv << r.n << "," << num(r.v) << "," << num(r.r) << "," << num(r.scaled) << "\n";
  }
  if (args.output.empty() || args.output == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw cv::Error(cv::ErrorKind::kParse, "cannot write '" + args.output + "'");
    out << csv.str();
  }
  const auto& t = result.trend;
  std::cerr << "scaled = " << result.scaled_label << ", reference = " << num(result.reference)
            << "\ntrend: monotone=" << (t.monotone ? "yes" : "no")
            << " approaching=" << (t.approaching ? "yes" : "no")
            << " final_gap=" << num(t.final_relative_gap)
            << " within_tolerance=" << (t.within_tolerance ? "yes" : "no") << "\n";
  if (*family != cv::SweepFamily::kMajority) {
    bool adjusted = false;
    for (const auto& r : result.rows) adjusted = adjusted || r.k_actual != args.k;
    if (adjusted) std::cerr << "note: k*N rounded per size; realized k differs for some N\n";
  }
  return kExitOk;
}

// --- probe ------------------------------------------------------------------

int run_probe(int n, std::uint64_t trials, std::uint64_t seed) {
  const auto result = cv::conjecture_probe(n, trials, seed);
  nlohmann::json doc;
  doc["n"] = result.n;
  doc["trials"] = result.trials;
  doc["seed"] = result.seed;
  doc["skipped_terms"] = result.skipped;
  doc["rejected_candidates"] = result.rejected;
  doc["worst_ratio"] = jnum(result.worst_ratio);
  const auto& w = *result.witness;
  doc["witness"] = {{"player", w.player + 1},
                    {"trial", w.trial},
                    {"R_G", jnum(w.r_g)},
                    {"R_H", jnum(w.r_h)},
                    {"R_G_plus_H", jnum(w.r_sum)},
                    {"G", cv::to_game_file(w.g)},
                    {"H", cv::to_game_file(w.h)}};
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapley values and Shapley uncertainty of cooperative games"};
  app.name("coalition-var");
  app.require_subcommand(1);

  auto format_option = [](CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Exact V, R and sqrt(R) for every player");
  eval->add_option("game", eval_args.path, "Game file (JSON)");
  eval->add_option("--generate", eval_args.generator, "Generator spec instead of a file");
  eval->add_option("--weighting", eval_args.weighting, "shapley or banzhaf")
      ->check(CLI::IsMember({"shapley", "banzhaf"}));
  format_option(eval, eval_args.format);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Monte Carlo estimates over random orderings");
  sample->add_option("game", sample_args.path, "Game file (JSON)");
  sample->add_option("--generate", sample_args.generator, "Generator spec instead of a file");
  sample->add_option("--player", sample_args.player, "Player name (default: all players)");
  sample->add_option("--samples", sample_args.samples, "Number of sampled orderings");
  sample->add_option("--seed", sample_args.seed, "RNG seed");
  sample->add_option("--chunks", sample_args.chunks, "Independent RNG streams")
      ->check(CLI::PositiveNumber);
  sample->add_option("--threads", sample_args.threads, "Worker threads (0: all cores)");
  format_option(sample, sample_args.format);

  std::string gen_spec;
  std::string gen_output;
  auto* generate = app.add_subcommand("generate", "Write a generated game as a game file");
  generate->add_option("spec", gen_spec,
                       "additive:w1,w2,... | majority:N | symmetric:g0,g1,... | "
                       "twotype:na,nb,sqrtkl")
      ->required();
  generate->add_option("-o,--output", gen_output, "Output path (default: stdout)");

  std::string attrib_path;
  double z_crit = cv::kDefaultZCritical;
  Format attrib_format = Format::kText;
  auto* attrib = app.add_subcommand("attrib", "Attribution table with significance tests");
  attrib->add_option("table", attrib_path, "Attribution CSV")->required();
  attrib->add_option("--z-crit", z_crit, "Critical |z| (default 1.96)");
  format_option(attrib, attrib_format);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Randomized checks of the uncertainty laws");
  check->add_option("property", check_args.property, "Property name or 'all'");
  check->add_option("--trials", check_args.trials, "Random instances per property");
  check->add_option("--seed", check_args.seed, "RNG seed");
  check->add_option("--n", check_args.n, "Players per game (default: cycle 2..6)")
      ->check(CLI::Range(2, 16));
  check->add_option("--inject-fault", check_args.fault, "Harness self-test")->group("");
  format_option(check, check_args.format);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Exact V and R across game sizes");
  sweep->add_option("family", sweep_args.family,
                    "majority | production-worker | production-capitalist | market-trader")
      ->required();
  sweep->add_option("--k", sweep_args.k, "Share of type-A players");
  sweep->add_option("--sizes", sweep_args.sizes, "lo:hi[:step] or a comma list");
  sweep->add_option("-o,--output", sweep_args.output, "CSV path (default: stdout)");
  sweep->add_option("--tolerance", sweep_args.tolerance, "Relative gap for the trend check");

  int probe_n = 3;
  std::uint64_t probe_trials = 10000;
  std::uint64_t probe_seed = 1;
  auto* probe = app.add_subcommand("probe", "Empirical lower-bound ratio for superadditive pairs");
  probe->add_option("--n", probe_n, "Players")->check(CLI::Range(2, 7));
  probe->add_option("--trials", probe_trials, "Random game pairs");
  probe->add_option("--seed", probe_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*sample) return run_sample(sample_args);
    if (*generate) return run_generate(gen_spec, gen_output);
    if (*attrib) return run_attrib(attrib_path, z_crit, attrib_format);
    if (*check) return run_check(check_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*probe) return run_probe(probe_n, probe_trials, probe_seed);
  } catch (const cv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == cv::ErrorKind::kGameTooLargeForExact) {
      std::cerr << "hint: use `coalition-var sample` for Monte Carlo estimates\n";
    }
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
