#include "walkmeg/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "walkmeg/channel.hpp"
#include "walkmeg/errors.hpp"
#include "walkmeg/metrics.hpp"
#include "walkmeg/momentum.hpp"
#include "walkmeg/search.hpp"
#include "walkmeg/walk.hpp"

#ifndef WALKMEG_VERSION
#define WALKMEG_VERSION "0.0.0"
#endif

namespace walkmeg::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("expected a number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("expected a finite number, got '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("expected an integer, got '" + text + "'");
  return v;
}

std::optional<double> named_gamma(const std::string& name) {
  if (name == "H") return std::numbers::pi / 4.0;
  if (name == "X" || name == "sx") return std::numbers::pi / 2.0;
  if (name == "Z" || name == "sz" || name == "I" || name == "1") return 0.0;
  return std::nullopt;
}

ResultTable start_table(const RunConfig& config, std::vector<Column> columns) {
  ResultTable table(std::move(columns));
  table.set_meta("tool", std::string("walkmeg ") + WALKMEG_VERSION);
  std::string echo;
  for (const auto& a : config.echo) echo += (echo.empty() ? "" : " ") + a;
  table.set_meta("command", echo);
  table.set_meta("seed", std::to_string(config.seed));
  return table;
}

std::size_t require_steps(const RunConfig& config) {
  if (!config.steps) throw UsageError(config.command + " requires --T");
  if (*config.steps == 0) throw UsageError("--T must be at least 1");
  return *config.steps;
}

struct ResolvedBits {
  BitString bits;
  std::string source;  // given | table | brute-best
};

bool table_defined(const CoinSet& set, std::size_t steps) {
  if (set.label == "H,I" || set.label == "H,Z") return steps >= 3;
  if (set.label == "H,F") return steps >= 3 && steps <= 10;
  return false;
}

BitString table_for(const CoinSet& set, std::size_t steps) {
  if (set.label == "H,F") return hadamard_f_table_bits(steps);
  return table_bits(steps);
}

ResolvedBits resolve_bits(const CoinSet& set, const std::string& spec, std::size_t steps, double tolerance,
                          bool fallback_to_brute) {
  if (set.single) {
    return {BitString(std::vector<std::uint8_t>(steps, 0)), "single-coin"};
  }
  if (spec == "table") {
    if (table_defined(set, steps)) return {table_for(set, steps), "table"};
    if (!fallback_to_brute) {
      if (set.label == "H,I" || set.label == "H,Z") table_bits(steps);  // raises NoMegPossible
      throw UsageError("no reference sequence for set " + set.label + " at T = " + std::to_string(steps));
    }
  } else if (spec != "brute-best") {
    BitString bits = BitString::parse(spec);
    if (bits.size() != steps) throw UsageError("--bits length does not match --T");
    return {std::move(bits), "given"};
  }
  SearchOptions options;
  options.tolerance = tolerance;
  options.max_listed = 0;
  return {brute_force(steps, set.coin0, set.coin1, options).best_bits, "brute-best"};
}

std::vector<InitialCoinState> parse_inits(const std::string& spec, std::vector<std::string>& labels) {
  const auto parts = split(spec, ',');
  auto named = [](const std::string& s) -> std::optional<InitialCoinState> {
    if (s == "H") return InitialCoinState::horizontal();
    if (s == "V") return InitialCoinState::vertical();
    if (s == "+" || s == "D") return InitialCoinState::diagonal();
    if (s == "L") return InitialCoinState::left_circular();
    return std::nullopt;
  };
  std::vector<InitialCoinState> states;
  bool all_named = !parts.empty();
  for (const auto& p : parts) all_named = all_named && named(p).has_value();
  if (all_named) {
    for (const auto& p : parts) {
      states.push_back(*named(p));
      labels.push_back(p);
    }
    return states;
  }
  if (parts.size() == 2) {
    states.push_back({parse_real(parts[0]), parse_real(parts[1])});
    labels.push_back(spec);
    return states;
  }
  throw UsageError("--init expects H|V|+|L (comma-separated) or theta,phi");
}

std::size_t steps_from(const RunConfig& config) {
  if (config.steps) return require_steps(config);
  if (config.bits && *config.bits != "table" && *config.bits != "brute-best") return config.bits->size();
  throw UsageError(config.command + " requires --T");
}

}  // namespace

CoinSet parse_coin_set(const std::string& spec) {
  if (spec.rfind("g:", 0) == 0) {
    const auto parts = split(spec.substr(2), ',');
    if (parts.size() != 2) throw UsageError("angle coin set must be g:gamma0,gamma1");
    const double g0 = parse_real(parts[0]);
    const double g1 = parse_real(parts[1]);
    return {spec, build_coin(CoinParameters::from_gamma(g0)), build_coin(CoinParameters::from_gamma(g1)),
            false, std::make_pair(g0, g1)};
  }
  const auto parts = split(spec, ',');
  try {
    if (parts.size() == 1) {
      const CoinOperator c = named_coin(parts[0]);
      std::optional<std::pair<double, double>> gammas;
      if (auto g = named_gamma(parts[0])) gammas = std::make_pair(*g, *g);
      return {parts[0], c, c, true, gammas};
    }
    if (parts.size() == 2) {
      std::optional<std::pair<double, double>> gammas;
      const auto g0 = named_gamma(parts[0]);
      const auto g1 = named_gamma(parts[1]);
      if (g0 && g1) gammas = std::make_pair(*g0, *g1);
      return {spec, named_coin(parts[0]), named_coin(parts[1]), false, gammas};
    }
  } catch (const InvalidParameter& e) {
    throw UsageError(std::string("invalid coin set: ") + e.what());
  }
  throw UsageError("coin set must be NAME, NAME,NAME or g:gamma0,gamma1");
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"walkmeg: coin-sequence design for maximal walker-coin entanglement", "walkmeg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  std::string range;
  std::optional<std::size_t> steps;
  std::optional<std::string> set, bits, pattern, out;

  auto io = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Seed for every random stream")->capture_default_str();
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out, "Output path (default: stdout)");
  };
  auto walk_opts = [&](CLI::App* sub) {
    sub->add_option("--T", steps, "Number of steps");
    sub->add_option("--set", set, "Coin set: H,I | H,Z | H,X | H,F | H | g:gamma0,gamma1");
    sub->add_option("--bits", bits, "table | brute-best | literal 0/1 string (0 = first coin)");
  };

  auto* simulate = app.add_subcommand("simulate", "Per-step distribution, entropies and second moment");
  walk_opts(simulate);
  simulate->add_option("--init", config.init, "H|V|+|L (comma list) or theta,phi")->capture_default_str();
  io(simulate);

  auto* curve = app.add_subcommand("fidelity-curve", "Best or given-sequence fidelity against T per coin set");
  walk_opts(curve);
  curve->add_option("--T-range", range, "Step range A..B (default 2..10)");
  curve->add_option("--ensemble", config.ensemble, "Initial states for the S_E statistics")->capture_default_str();
  curve->add_option("--tol", config.tolerance, "Optimality tolerance on 1 - F")->capture_default_str();
  io(curve);

  auto* search = app.add_subcommand("search", "Exhaustive, annealing or angle-landscape search");
  search->add_option("mode", config.search_mode, "brute | anneal | landscape")
      ->required()
      ->check(CLI::IsMember({"brute", "anneal", "landscape"}));
  search->add_option("--T", steps, "Number of steps");
  search->add_option("--set", set, "Coin set (brute: default H,I; anneal: fixes the angles)");
  search->add_option("--tol", config.tolerance, "Optimality tolerance on 1 - F")->capture_default_str();
  search->add_option("--grid", config.grid, "Landscape grid points per axis")->capture_default_str();
  search->add_option("--restarts", config.restarts, "Annealing restarts")->capture_default_str();
  io(search);

  auto* verify = app.add_subcommand("verify", "Check the closed-form optimality conditions against simulation");
  verify->add_option("--max-T", config.max_steps, "Largest pattern length (<= 12)")->capture_default_str();
  verify->add_option("--pattern", pattern, "Single pattern l1,l2 or l1,l2,l3");
  verify->add_flag("--prefixed", config.prefixed, "Pattern starts with an extra Hadamard");
  verify->add_option("--tol", config.tolerance, "Optimality tolerance on 1 - F")->capture_default_str();
  io(verify);

  auto* bloch = app.add_subcommand("bloch", "Bloch-sphere image of the coin channel");
  walk_opts(bloch);
  bloch->add_option("--n", config.samples, "Number of sphere samples")->capture_default_str();
  io(bloch);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    throw HelpRequested(target->help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (message.empty()) message = "invalid command line";
    throw UsageError(message);
  }

  for (auto* sub : {simulate, curve, search, verify, bloch}) {
    if (sub->parsed()) config.command = sub->get_name();
  }
  config.steps = steps;
  config.coin_set = set;
  config.bits = bits;
  config.pattern = pattern;
  config.out = out;
  if (!range.empty()) {
    std::string r = range;
    for (const char* sep : {"..", ":", "-"}) {
      const auto pos = r.find(sep);
      if (pos != std::string::npos) {
        const int a = parse_int(r.substr(0, pos));
        const int b = parse_int(r.substr(pos + std::string(sep).size()));
        if (a < 1 || b < a) throw UsageError("--T-range must satisfy 1 <= A <= B");
        config.step_range = std::make_pair(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        break;
      }
    }
    if (!config.step_range) throw UsageError("--T-range expects A..B");
  }
  if (!(config.tolerance > 0.0)) throw UsageError("--tol must be positive");

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    config.echo.push_back(args[i]);
  }
  return config;
}

ResultTable cmd_simulate(const RunConfig& config) {
  const std::size_t steps = steps_from(config);
  const CoinSet set = parse_coin_set(config.coin_set.value_or("H,I"));
  const ResolvedBits resolved = resolve_bits(set, config.bits.value_or("table"), steps, config.tolerance, false);
  const CoinSequence sequence(set.coin0, set.coin1, resolved.bits);

  std::vector<std::string> labels;
  const auto inits = parse_inits(config.init, labels);

  std::vector<Column> columns{{"init", ColumnType::Text}, {"t", ColumnType::Integer},
                              {"S_E", ColumnType::Real},  {"S_S", ColumnType::Real},
                              {"m", ColumnType::Real}};
  const int span = static_cast<int>(steps);
  for (int x = -span; x <= span; ++x) columns.push_back({"P[" + std::to_string(x) + "]", ColumnType::Real});
  ResultTable table = start_table(config, std::move(columns));
  table.set_meta("set", set.label);
  table.set_meta("bits", resolved.bits.to_string());
  table.set_meta("bits_source", resolved.source);
  table.set_meta("T", std::to_string(steps));

  for (std::size_t i = 0; i < inits.size(); ++i) {
    WalkerState state = initial_state(inits[i]);
    WalkerState next;
    for (std::size_t t = 1; t <= steps; ++t) {
      step_into(state, sequence.coin_at(t - 1), next);
      std::swap(state, next);
      const auto dist = position_distribution(state);
      Row row{labels[i], static_cast<std::int64_t>(t), entanglement_entropy(reduced_coin_state(state)),
              shannon_entropy(dist, t), second_moment(dist)};
      for (int x = -span; x <= span; ++x) row.emplace_back(dist.at(x));
      table.add_row(std::move(row));
    }
  }
  return table;
}

ResultTable cmd_fidelity_curve(const RunConfig& config) {
  std::pair<std::size_t, std::size_t> range{2, 10};
  if (config.step_range) range = *config.step_range;
  if (config.steps) range = {require_steps(config), require_steps(config)};
  if (range.second > kMaxBruteForceSteps) {
    throw ResourceLimit("fidelity-curve enumerates 2^T strings; T is capped at " +
                        std::to_string(kMaxBruteForceSteps));
  }

  std::vector<std::string> sets{"H,I", "H,Z", "H,X", "H,F", "H"};
  if (config.coin_set) sets = {*config.coin_set};
  const std::string spec = config.bits.value_or("brute-best");

  ResultTable table = start_table(config, {{"T", ColumnType::Integer},
                                           {"set", ColumnType::Text},
                                           {"bits", ColumnType::Text},
                                           {"source", ColumnType::Text},
                                           {"fidelity", ColumnType::Real},
                                           {"mean_S_E", ColumnType::Real},
                                           {"std_S_E", ColumnType::Real}});
  if (config.ensemble == 0) throw UsageError("--ensemble must be at least 1");
  table.set_meta("tolerance", format_real(config.tolerance));
  table.set_meta("ensemble", std::to_string(config.ensemble));
  for (const auto& label : sets) {
    const CoinSet set = parse_coin_set(label);
    for (std::size_t t = range.first; t <= range.second; ++t) {
      const ResolvedBits resolved = resolve_bits(set, spec, t, config.tolerance, true);
      const CoinSequence seq(set.coin0, set.coin1, resolved.bits);
      const EnsembleStatistics stats = average_entanglement(seq, config.ensemble);
      table.add_row({static_cast<std::int64_t>(t), set.label, resolved.bits.to_string(), resolved.source,
                     sequence_fidelity(seq), stats.mean, stats.std_dev});
    }
  }
  return table;
}

ResultTable cmd_search(const RunConfig& config) {
  const std::size_t steps = require_steps(config);

  if (config.search_mode == "brute") {
    const CoinSet set = parse_coin_set(config.coin_set.value_or("H,I"));
    SearchOptions options;
    options.tolerance = config.tolerance;
    options.extra_tolerances = {1e-6, 1e-9, 1e-12};
    const SearchResult result = brute_force(steps, set.coin0, set.coin1, options);

    ResultTable table = start_table(config, {{"index", ColumnType::Integer},
                                             {"bits", ColumnType::Text},
                                             {"fidelity", ColumnType::Real}});
    table.set_meta("mode", "brute");
    table.set_meta("set", set.label);
    table.set_meta("T", std::to_string(steps));
    table.set_meta("tolerance", format_real(config.tolerance));
    table.set_meta("best_fidelity", format_real(result.best_fidelity));
    table.set_meta("best_bits", result.best_bits.to_string());
    table.set_meta("count_optimal", std::to_string(result.count_optimal));
    table.set_meta("evaluations", std::to_string(result.evaluations));
    table.set_meta("count_optimal_1e-6", std::to_string(result.extra_counts[0]));
    table.set_meta("count_optimal_1e-9", std::to_string(result.extra_counts[1]));
    table.set_meta("count_optimal_1e-12", std::to_string(result.extra_counts[2]));
    const auto fidelities = fidelity_table(steps, set.coin0, set.coin1);
    for (const auto& bits : result.optimal_bits) {
      const auto index = bits.to_index();
      table.add_row({static_cast<std::int64_t>(index), bits.to_string(), fidelities[index]});
    }
    return table;
  }

  if (config.search_mode == "anneal") {
    AnnealConfig anneal_config;
    anneal_config.seed = config.seed;
    anneal_config.restarts = config.restarts;
    bool optimize_angles = true;
    if (config.coin_set) {
      const CoinSet set = parse_coin_set(*config.coin_set);
      if (!set.gammas || set.single) {
        throw UsageError("anneal needs a two-coin set from the C(gamma) family (H, X, Z, I or g:...)");
      }
      anneal_config.gamma0 = set.gammas->first;
      anneal_config.gamma1 = set.gammas->second;
      optimize_angles = false;
    }
    const AnnealResult result = anneal(steps, anneal_config, optimize_angles);
    ResultTable table = start_table(config, {{"gamma0", ColumnType::Real},
                                             {"gamma1", ColumnType::Real},
                                             {"bits", ColumnType::Text},
                                             {"fidelity", ColumnType::Real},
                                             {"restart", ColumnType::Integer}});
    table.set_meta("mode", "anneal");
    table.set_meta("T", std::to_string(steps));
    table.set_meta("optimize_angles", optimize_angles ? "true" : "false");
    table.set_meta("restarts", std::to_string(anneal_config.restarts));
    table.set_meta("temperature_levels", std::to_string(result.best_cost_trace.size()));
    table.add_row({result.gamma0, result.gamma1, result.bits.to_string(), result.fidelity,
                   static_cast<std::int64_t>(result.best_restart)});
    return table;
  }

  // landscape
  const auto grid = uniform_angle_grid(config.grid);
  const auto points = landscape_scan(steps, grid);
  ResultTable table = start_table(config, {{"gamma0", ColumnType::Real},
                                           {"gamma1", ColumnType::Real},
                                           {"best_fidelity", ColumnType::Real}});
  table.set_meta("mode", "landscape");
  table.set_meta("T", std::to_string(steps));
  table.set_meta("grid", std::to_string(config.grid));
  double best = 0.0;
  for (const auto& p : points) {
    best = std::max(best, p.best_fidelity_over_bits);
    table.add_row({p.gamma0, p.gamma1, p.best_fidelity_over_bits});
  }
  table.set_meta("max_fidelity", format_real(best));
  return table;
}

ResultTable cmd_verify(const RunConfig& config) {
  std::vector<SequencePattern> patterns;
  if (config.pattern) {
    std::vector<int> ls;
    for (const auto& part : split(*config.pattern, ',')) ls.push_back(parse_int(part));
    try {
      if (ls.size() == 2) {
        patterns.push_back(SequencePattern::one_h(ls[0], ls[1], config.prefixed));
      } else if (ls.size() == 3) {
        patterns.push_back(SequencePattern::two_h(ls[0], ls[1], ls[2], config.prefixed));
      } else {
        throw UsageError("--pattern expects l1,l2 or l1,l2,l3");
      }
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
  } else {
    if (config.max_steps > kMaxLandscapeSteps) {
      throw ResourceLimit("verify enumerates pattern families up to T = " + std::to_string(kMaxLandscapeSteps));
    }
    const int max_t = static_cast<int>(config.max_steps);
    for (int t = 1; t <= max_t; ++t) {
      for (int l1 = 0; l1 <= t - 1; ++l1) patterns.push_back(SequencePattern::one_h(l1, t - 1 - l1));
      for (int l1 = 0; l1 <= t - 2; ++l1) {
        for (int l2 = 0; l1 + l2 <= t - 2; ++l2) {
          patterns.push_back(SequencePattern::two_h(l1, l2, t - 2 - l1 - l2));
        }
      }
      for (int l1 = 1; l1 <= t - 2; ++l1) {
        for (int l2 = 0; l1 + l2 <= t - 2; ++l2) {
          patterns.push_back(SequencePattern::two_h(l1, l2, t - 2 - l1 - l2, true));
        }
      }
    }
  }

  ResultTable table = start_table(config, {{"pattern", ColumnType::Text},
                                           {"bits", ColumnType::Text},
                                           {"predicate", ColumnType::Integer},
                                           {"fidelity", ColumnType::Real},
                                           {"optimal", ColumnType::Integer},
                                           {"agree", ColumnType::Integer}});
  table.set_meta("tolerance", format_real(config.tolerance));
  const CoinOperator h = named_coin(NamedCoin::H);
  const CoinOperator id = named_coin(NamedCoin::I);
  std::size_t disagreements = 0;
  for (const auto& p : patterns) {
    const BitString bits = p.to_bits();
    const bool predicate = theorem_predicate(p);
    const double f = sequence_fidelity(CoinSequence(h, id, bits));
    const bool optimal = 1.0 - f < config.tolerance;
    disagreements += predicate != optimal;
    table.add_row({p.describe(), bits.to_string(), std::int64_t{predicate}, f, std::int64_t{optimal},
                   std::int64_t{predicate == optimal}});
  }
  table.set_meta("patterns", std::to_string(patterns.size()));
  table.set_meta("disagreements", std::to_string(disagreements));
  table.set_meta("all_agree", disagreements == 0 ? "true" : "false");
  return table;
}

ResultTable cmd_bloch(const RunConfig& config) {
  const std::size_t steps = steps_from(config);
  if (config.samples == 0) throw UsageError("--n must be at least 1");
  const CoinSet set = parse_coin_set(config.coin_set.value_or("H,I"));
  const ResolvedBits resolved = resolve_bits(set, config.bits.value_or("table"), steps, config.tolerance, false);
  const CoinSequence sequence(set.coin0, set.coin1, resolved.bits);
  const BlochImage image = bloch_image(sequence, config.samples);

  ResultTable table = start_table(config, {{"x_in", ColumnType::Real},
                                           {"y_in", ColumnType::Real},
                                           {"z_in", ColumnType::Real},
                                           {"x_out", ColumnType::Real},
                                           {"y_out", ColumnType::Real},
                                           {"z_out", ColumnType::Real}});
  table.set_meta("set", set.label);
  table.set_meta("bits", resolved.bits.to_string());
  table.set_meta("T", std::to_string(steps));
  double max_norm = 0.0;
  for (const auto& [in, out] : image) {
    max_norm = std::max(max_norm, out.norm());
    table.add_row({in.x(), in.y(), in.z(), out.x(), out.y(), out.z()});
  }
  table.set_meta("max_output_norm", format_real(max_norm));
  return table;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& e) {
    out << e.what();
    return kExitSuccess;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  ResultTable table;
  try {
    if (config.command == "simulate") {
      table = cmd_simulate(config);
    } else if (config.command == "fidelity-curve") {
      table = cmd_fidelity_curve(config);
    } else if (config.command == "search") {
      table = cmd_search(config);
    } else if (config.command == "verify") {
      table = cmd_verify(config);
    } else {
      table = cmd_bloch(config);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoMegPossible& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  auto emit = [&](std::ostream& os) {
    if (config.format == "json") {
      write_json(table, os);
    } else {
      write_csv(table, os);
    }
  };
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << *config.out << "' for writing\n";
      return kExitFailure;
    }
    emit(file);
    if (!file) {
      err << "error: failed writing '" << *config.out << "'\n";
      return kExitFailure;
    }
  } else {
    emit(out);
  }

  if (table.meta("all_agree") == std::optional<std::string>("false")) {
    err << "verification failed; disagreeing patterns:\n";
    for (std::size_t r = 0; r < table.rows().size(); ++r) {
      if (table.int_at(r, "agree") == 0) {
        err << "  " << table.text_at(r, "pattern") << " bits=" << table.text_at(r, "bits")
            << " predicate=" << table.int_at(r, "predicate") << " fidelity=" << format_real(table.real_at(r, "fidelity"))
            << '\n';
      }
    }
    return kExitVerificationFailed;
  }
  return kExitSuccess;
}

}  // namespace walkmeg::cli
