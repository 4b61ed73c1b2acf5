#include "walkmeg/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "walkmeg/errors.hpp"
#include "walkmeg/sphere.hpp"

namespace walkmeg {

namespace {

constexpr double kPsdTolerance = 1e-9;

double plogp2(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

MomentSeries::MomentSeries(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double t = static_cast<double>(i + 1);
    if (!(values_[i] >= 0.0)) throw InvalidParameter("second moments must be non-negative");
    if (values_[i] > t * t + 1e-9) throw InvalidParameter("second moment exceeds the light cone t^2");
  }
}

double entanglement_entropy(const Matrix2c& rho) {
  if (!rho.allFinite()) throw InvalidParameter("density matrix has non-finite entries");
  if (std::abs(rho(0, 1) - std::conj(rho(1, 0))) > kPsdTolerance ||
      std::abs(rho(0, 0).imag()) > kPsdTolerance || std::abs(rho(1, 1).imag()) > kPsdTolerance) {
    throw InvalidParameter("density matrix is not Hermitian");
  }
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  if (std::abs(a + d - 1.0) > kPsdTolerance) throw InvalidParameter("density matrix must have unit trace");

  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(1, 0)));
  const double lo = 0.5 * (a + d) - half_gap;
  const double hi = 0.5 * (a + d) + half_gap;
  if (lo < -kPsdTolerance) throw InvalidParameter("density matrix is not positive semidefinite");

  const double entropy = -plogp2(std::clamp(lo, 0.0, 1.0)) - plogp2(std::clamp(hi, 0.0, 1.0));
  return std::clamp(entropy, 0.0, 1.0);
}

EnsembleStatistics average_entanglement(const CoinSequence& sequence, std::size_t ensemble_size) {
  if (ensemble_size == 0) throw InvalidParameter("ensemble needs at least one state");
  std::vector<double> values;
  values.reserve(ensemble_size);
  for (const auto& coin : fibonacci_coin_states(ensemble_size)) {
    values.push_back(entanglement_entropy(reduced_coin_state(evolve(coin, sequence))));
  }

  EnsembleStatistics stats;
  stats.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(stats.n);
  double sq = 0.0;
  for (double v : values) sq += (v - stats.mean) * (v - stats.mean);
  stats.std_dev = std::sqrt(sq / static_cast<double>(stats.n));
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  stats.min = *lo;
  stats.max = *hi;
  return stats;
}

double shannon_entropy(const ProbabilityDistribution& distribution, std::size_t steps) {
  if (steps == 0) throw InvalidParameter("normalized Shannon entropy needs T >= 1");
  double h = 0.0;
  for (double p : distribution.values()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return std::max(0.0, h) / std::log(static_cast<double>(steps) + 1.0);
}

double second_moment(const ProbabilityDistribution& distribution) {
  double m = 0.0;
  for (int x = distribution.min_position(); x <= distribution.max_position(); ++x) {
    m += static_cast<double>(x) * static_cast<double>(x) * distribution.at(x);
  }
  return m;
}

MomentSeries moment_series(const InitialCoinState& coin, const CoinSequence& sequence) {
  std::vector<double> values;
  values.reserve(sequence.steps());
  WalkerState state = initial_state(coin);
  WalkerState next;
  for (std::size_t t = 0; t < sequence.steps(); ++t) {
    step_into(state, sequence.coin_at(t), next);
    std::swap(state, next);
    values.push_back(second_moment(position_distribution(state)));
  }
  return MomentSeries(std::move(values));
}

PowerLawFit fit_power_law(const MomentSeries& series) {
  const auto m = series.values();
  if (m.size() < 3) throw InvalidParameter("power-law fit needs at least three points");
  std::vector<double> xs(m.size()), ys(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(m[i] > 0.0)) throw InvalidParameter("power-law fit needs strictly positive moments");
    xs[i] = std::log(static_cast<double>(i + 1));
    ys[i] = std::log(m[i]);
  }
  const double n = static_cast<double>(m.size());
  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_mean += xs[i] / n;
    y_mean += ys[i] / n;
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
  }
  const double slope = sxy / sxx;
  const double intercept = y_mean - slope * x_mean;
  return {slope, std::exp(intercept)};
}

double fit_diffusion_exponent(const MomentSeries& series) { return fit_power_law(series).exponent; }

}  // namespace walkmeg
