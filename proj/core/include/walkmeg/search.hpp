#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "walkmeg/walk.hpp"

namespace walkmeg {

inline constexpr std::size_t kMaxBruteForceSteps = 24;
inline constexpr std::size_t kMaxLandscapeSteps = 12;

/// Which reference the optimality tolerance is measured against.
enum class OptimalityMode {
  AgainstOne,  ///< 1 - F < tol
  AgainstMax,  ///< F_max - F < tol
};

struct SearchOptions {
  double tolerance = 1e-9;
  OptimalityMode mode = OptimalityMode::AgainstOne;
  /// Cap on the stored list; count_optimal is exact regardless.
  std::size_t max_listed = std::size_t(-1);
  /// Additional 1 - F thresholds whose counts are reported alongside.
  std::vector<double> extra_tolerances;
  std::size_t workers = 0;  ///< 0 = worker_count()
};

struct SearchResult {
  double best_fidelity = 0.0;
  BitString best_bits;                 ///< first maximizer in ascending order
  std::vector<BitString> optimal_bits; ///< ascending, possibly truncated
  std::uint64_t count_optimal = 0;
  std::uint64_t evaluations = 0;
  /// Counts of 1 - F < extra_tolerances[i], in the same order.
  std::vector<std::uint64_t> extra_counts;
};

/// Exhaustive evaluation of all 2^T bit strings for the coin pair.
/// Throws ResourceLimit for T > kMaxBruteForceSteps and InvalidParameter for T == 0.
SearchResult brute_force(std::size_t steps, const CoinOperator& coin0, const CoinOperator& coin1,
                         const SearchOptions& options = {});

/// All 2^T fidelities in ascending bit-string order.
std::vector<double> fidelity_table(std::size_t steps, const CoinOperator& coin0,
                                   const CoinOperator& coin1, std::size_t workers = 0);

struct AnnealConfig {
  double initial_temperature = 1.0;
  double cooling_rate = 0.95;
  std::size_t steps_per_temperature = 200;
  double final_temperature = 1e-7;
  std::size_t restarts = 10;
  std::uint64_t seed = 1;
  bool bit_flip_moves = true;
  bool angle_moves = true;
  double angle_step = 0.2;  ///< radians, scaled by sqrt(temperature / initial_temperature)
  /// Starting angles of the C(gamma) coins; fixed when angles are not optimized.
  double gamma0 = 0.7853981633974483;
  double gamma1 = 0.0;
  std::size_t workers = 0;  ///< 0 = worker_count()
};

struct AnnealResult {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  BitString bits;
  double fidelity = 0.0;
  std::size_t best_restart = 0;
  /// Best cost 1 - F after each temperature level of the winning restart.
  std::vector<double> best_cost_trace;
};

/// Simulated annealing on the cost 1 - F over (gamma0, gamma1, b) with coins
/// C(gamma) = C(0, gamma, 0), gamma in [0, pi/2]. Geometric cooling, Metropolis
/// acceptance, independent seeded restarts merged by (fidelity, restart index).
AnnealResult anneal(std::size_t steps, const AnnealConfig& config, bool optimize_angles);

struct LandscapePoint {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  double best_fidelity_over_bits = 0.0;
};

/// max_b F for every (gamma0, gamma1) in grid x grid, row-major in gamma0.
/// Grid values must lie in [0, pi/2]; T <= kMaxLandscapeSteps.
std::vector<LandscapePoint> landscape_scan(std::size_t steps, const std::vector<double>& grid,
                                           std::size_t workers = 0);

/// n equally spaced values covering [0, pi/2] inclusive.
std::vector<double> uniform_angle_grid(std::size_t n);

}  // namespace walkmeg
