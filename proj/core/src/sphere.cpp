#include "walkmeg/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace walkmeg {

std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Eigen::Vector3d> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double azimuth = golden_angle * static_cast<double>(i);
    points.emplace_back(r * std::cos(azimuth), r * std::sin(azimuth), z);
  }
  return points;
}

std::vector<InitialCoinState> fibonacci_coin_states(std::size_t n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<InitialCoinState> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double theta = std::acos(std::clamp(z, -1.0, 1.0));
    const double phi = std::fmod(golden_angle * static_cast<double>(i), 2.0 * std::numbers::pi);
    states.push_back({theta, phi});
  }
  return states;
}

}  // namespace walkmeg
