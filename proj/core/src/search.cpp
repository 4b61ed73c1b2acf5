#include "walkmeg/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "walkmeg/channel.hpp"
#include "walkmeg/errors.hpp"
#include "walkmeg/parallel.hpp"

namespace walkmeg {

namespace {

constexpr std::size_t kSplitBits = 10;

void check_steps(std::size_t steps, std::size_t limit) {
  if (steps == 0) throw InvalidParameter("search needs T >= 1");
  if (steps > limit) {
    throw ResourceLimit("T = " + std::to_string(steps) + " exceeds the enumeration guard of " +
                        std::to_string(limit));
  }
}

/// Depth-first enumeration of every bit string below a fixed prefix. The four
/// tomography inputs are evolved once per tree node, so siblings share prefixes.
class SubtreeEnumerator {
 public:
  SubtreeEnumerator(std::size_t steps, const CoinOperator& coin0, const CoinOperator& coin1)
      : steps_(steps), coins_{coin0, coin1}, levels_(steps + 1) {
    levels_[0][0] = initial_state(InitialCoinState::horizontal());
    levels_[0][1] = initial_state(InitialCoinState::vertical());
    levels_[0][2] = initial_state(InitialCoinState::diagonal());
    levels_[0][3] = initial_state(InitialCoinState::left_circular());
  }

  /// Calls visit(index, fidelity) for all strings whose top `prefix_len` bits equal `prefix`,
  /// in ascending index order.
  template <class Visit>
  void run(std::uint64_t prefix, std::size_t prefix_len, Visit&& visit) {
    for (std::size_t d = 0; d < prefix_len; ++d) {
      const int bit = static_cast<int>((prefix >> (prefix_len - 1 - d)) & 1u);
      advance(d, bit);
    }
    descend(prefix_len, prefix, visit);
  }

 private:
  void advance(std::size_t depth, int bit) {
    for (std::size_t s = 0; s < 4; ++s) step_into(levels_[depth][s], coins_[bit], levels_[depth + 1][s]);
  }

  template <class Visit>
  void descend(std::size_t depth, std::uint64_t index, Visit& visit) {
    if (depth == steps_) {
      const auto& leaf = levels_[depth];
      TomographyOutputs out{reduced_coin_state(leaf[0]), reduced_coin_state(leaf[1]),
                            reduced_coin_state(leaf[2]), reduced_coin_state(leaf[3])};
      visit(index, depolarizing_fidelity(ptm_from_tomography(out)));
      return;
    }
    for (int bit = 0; bit < 2; ++bit) {
      advance(depth, bit);
      descend(depth + 1, (index << 1) | static_cast<std::uint64_t>(bit), visit);
    }
  }

  std::size_t steps_;
  std::array<CoinOperator, 2> coins_;
  std::vector<std::array<WalkerState, 4>> levels_;
};

struct Candidate {
  std::uint64_t index;
  double fidelity;
};

struct TaskResult {
  double best = -1.0;
  std::uint64_t best_index = 0;
  std::vector<Candidate> candidates;
  std::vector<std::uint64_t> extra_counts;
  std::uint64_t evaluations = 0;
};

double serial_max_fidelity(std::size_t steps, const CoinOperator& coin0, const CoinOperator& coin1) {
  SubtreeEnumerator walker(steps, coin0, coin1);
  double best = 0.0;
  walker.run(0, 0, [&](std::uint64_t, double f) { best = std::max(best, f); });
  return best;
}

double reflect_into_quarter_turn(double gamma) {
  constexpr double hi = std::numbers::pi / 2.0;
  // Reflect at both walls; period is pi.
  gamma = std::fmod(gamma, 2.0 * hi);
  if (gamma < 0.0) gamma += 2.0 * hi;
  if (gamma > hi) gamma = 2.0 * hi - gamma;
  return std::clamp(gamma, 0.0, hi);
}

double anneal_cost(double g0, double g1, const BitString& bits) {
  const CoinSequence seq(build_coin(CoinParameters::from_gamma(g0)),
                         build_coin(CoinParameters::from_gamma(g1)), bits);
  return 1.0 - sequence_fidelity(seq);
}

AnnealResult anneal_once(std::size_t steps, const AnnealConfig& config, bool optimize_angles,
                         std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> position(0, steps - 1);

  double g0 = config.gamma0;
  double g1 = config.gamma1;
  if (optimize_angles) {
    g0 = unit(rng) * std::numbers::pi / 2.0;
    g1 = unit(rng) * std::numbers::pi / 2.0;
  }
  std::vector<std::uint8_t> raw(steps);
  for (auto& b : raw) b = unit(rng) < 0.5 ? 0 : 1;
  BitString bits(raw);

  double cost = anneal_cost(g0, g1, bits);
  AnnealResult best{g0, g1, bits, 1.0 - cost, restart, {}};
  double best_cost = cost;

  const bool flips = config.bit_flip_moves;
  const bool turns = optimize_angles && config.angle_moves;
  if (!flips && !turns) {
    best.best_cost_trace.push_back(best_cost);
    return best;
  }

  for (double temperature = config.initial_temperature;
       temperature > config.final_temperature && best_cost > 0.0;
       temperature *= config.cooling_rate) {
    const double sigma = config.angle_step * std::sqrt(temperature / config.initial_temperature);
    for (std::size_t s = 0; s < config.steps_per_temperature; ++s) {
      double n0 = g0, n1 = g1;
      std::vector<std::uint8_t> proposal(raw);
      const bool flip = flips && (!turns || unit(rng) < 0.5);
      if (flip) {
        proposal[position(rng)] ^= 1u;
      } else if (unit(rng) < 0.5) {
        n0 = reflect_into_quarter_turn(g0 + sigma * gauss(rng));
      } else {
        n1 = reflect_into_quarter_turn(g1 + sigma * gauss(rng));
      }
      BitString candidate(proposal);
      const double next_cost = anneal_cost(n0, n1, candidate);
      const double delta = next_cost - cost;
      if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
        g0 = n0;
        g1 = n1;
        raw = std::move(proposal);
        cost = next_cost;
        if (cost < best_cost) {
          best_cost = cost;
          best.gamma0 = g0;
          best.gamma1 = g1;
          best.bits = std::move(candidate);
          best.fidelity = 1.0 - cost;
        }
      }
      if (best_cost <= 0.0) break;
    }
    best.best_cost_trace.push_back(best_cost);
  }
  return best;
}

}  // namespace

SearchResult brute_force(std::size_t steps, const CoinOperator& coin0, const CoinOperator& coin1,
                         const SearchOptions& options) {
  check_steps(steps, kMaxBruteForceSteps);
  if (!(options.tolerance > 0.0)) throw InvalidParameter("search tolerance must be positive");

  const std::size_t split = std::min(steps, kSplitBits);
  const std::size_t tasks = std::size_t{1} << split;
  std::vector<TaskResult> results(tasks);
  const bool against_one = options.mode == OptimalityMode::AgainstOne;

  parallel_for(tasks, options.workers, [&](std::size_t task) {
    SubtreeEnumerator walker(steps, coin0, coin1);
    TaskResult& r = results[task];
    r.extra_counts.assign(options.extra_tolerances.size(), 0);
    walker.run(task, split, [&](std::uint64_t index, double f) {
      ++r.evaluations;
      if (f > r.best) {
        r.best = f;
        r.best_index = index;
        if (!against_one) {
          std::erase_if(r.candidates, [&](const Candidate& c) { return f - c.fidelity >= options.tolerance; });
        }
      }
      const double reference = against_one ? 1.0 : r.best;
      if (reference - f < options.tolerance) r.candidates.push_back({index, f});
      for (std::size_t i = 0; i < options.extra_tolerances.size(); ++i) {
        if (1.0 - f < options.extra_tolerances[i]) ++r.extra_counts[i];
      }
    });
  });

  SearchResult out;
  out.extra_counts.assign(options.extra_tolerances.size(), 0);
  double best = -1.0;
  std::uint64_t best_index = 0;
  for (const auto& r : results) {
    if (r.best > best) {
      best = r.best;
      best_index = r.best_index;
    }
    out.evaluations += r.evaluations;
    for (std::size_t i = 0; i < r.extra_counts.size(); ++i) out.extra_counts[i] += r.extra_counts[i];
  }
  out.best_fidelity = best;
  out.best_bits = BitString::from_index(best_index, steps);

  const double reference = against_one ? 1.0 : best;
  for (const auto& r : results) {  // tasks are already in ascending prefix order
    for (const auto& c : r.candidates) {
      if (reference - c.fidelity >= options.tolerance) continue;
      ++out.count_optimal;
      if (out.optimal_bits.size() < options.max_listed) {
        out.optimal_bits.push_back(BitString::from_index(c.index, steps));
      }
    }
  }
  return out;
}

std::vector<double> fidelity_table(std::size_t steps, const CoinOperator& coin0,
                                   const CoinOperator& coin1, std::size_t workers) {
  check_steps(steps, kMaxBruteForceSteps);
  const std::size_t split = std::min(steps, kSplitBits);
  std::vector<double> table(std::size_t{1} << steps);
  parallel_for(std::size_t{1} << split, workers, [&](std::size_t task) {
    SubtreeEnumerator walker(steps, coin0, coin1);
    walker.run(task, split, [&](std::uint64_t index, double f) { table[index] = f; });
  });
  return table;
}

AnnealResult anneal(std::size_t steps, const AnnealConfig& config, bool optimize_angles) {
  if (steps == 0) throw InvalidParameter("anneal needs T >= 1");
  if (!(config.initial_temperature > 0.0) || !(config.final_temperature > 0.0)) {
    throw InvalidParameter("annealing temperatures must be positive");
  }
  if (!(config.cooling_rate > 0.0 && config.cooling_rate < 1.0)) {
    throw InvalidParameter("cooling rate must lie in (0, 1)");
  }
  if (config.steps_per_temperature == 0 || config.restarts == 0) {
    throw InvalidParameter("anneal needs at least one proposal per level and one restart");
  }
  if (!(config.angle_step > 0.0)) throw InvalidParameter("angle step must be positive");

  std::vector<AnnealResult> runs(config.restarts);
  parallel_for(config.restarts, config.workers, [&](std::size_t r) {
    runs[r] = anneal_once(steps, config, optimize_angles, r);
  });

  std::size_t winner = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].fidelity > runs[winner].fidelity) winner = r;
  }
  return runs[winner];
}

std::vector<double> uniform_angle_grid(std::size_t n) {
  if (n == 0) throw InvalidParameter("angle grid needs at least one point");
  if (n == 1) return {0.0};
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = static_cast<double>(i) * (std::numbers::pi / 2.0) / static_cast<double>(n - 1);
  }
  return grid;
}

std::vector<LandscapePoint> landscape_scan(std::size_t steps, const std::vector<double>& grid,
                                           std::size_t workers) {
  check_steps(steps, kMaxLandscapeSteps);
  for (double g : grid) {
    if (!(g >= 0.0 && g <= std::numbers::pi / 2.0 + 1e-12)) {
      throw InvalidParameter("landscape angles must lie in [0, pi/2]");
    }
  }
  std::vector<CoinOperator> coins;
  coins.reserve(grid.size());
  for (double g : grid) coins.push_back(build_coin(CoinParameters::from_gamma(g)));

  const std::size_t n = grid.size();
  std::vector<LandscapePoint> points(n * n);
  parallel_for(n * n, workers, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    points[k] = {grid[i], grid[j], serial_max_fidelity(steps, coins[i], coins[j])};
  });
  return points;
}

}  // namespace walkmeg
