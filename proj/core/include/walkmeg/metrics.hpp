#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "walkmeg/walk.hpp"

namespace walkmeg {

struct EnsembleStatistics {
  double mean = 0.0;
  double std_dev = 0.0;  ///< population standard deviation
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

/// m(t) for t = 1..T, stored at index t - 1. Light-cone bound m(t) <= t^2 is
/// checked on construction.
class MomentSeries {
 public:
  explicit MomentSeries(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double at_step(std::size_t t) const { return values_.at(t - 1); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// m(t) ~ prefactor * t^exponent.
struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Von Neumann entropy in bits, -sum lambda log2 lambda, with 0 log 0 = 0.
double entanglement_entropy(const Matrix2c& rho);

/// S_E of the reduced coin state of every Fibonacci-lattice initial state.
EnsembleStatistics average_entanglement(const CoinSequence& sequence, std::size_t ensemble_size);

/// Normalized Shannon entropy (-sum P ln P) / ln(T + 1).
double shannon_entropy(const ProbabilityDistribution& distribution, std::size_t steps);

double second_moment(const ProbabilityDistribution& distribution);

/// m(t) along the walk for t = 1..T.
MomentSeries moment_series(const InitialCoinState& coin, const CoinSequence& sequence);

/// Unweighted least squares of ln m(t) against ln t, t = 1..T.
PowerLawFit fit_power_law(const MomentSeries& series);
double fit_diffusion_exponent(const MomentSeries& series);

}  // namespace walkmeg
