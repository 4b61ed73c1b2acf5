#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "walkmeg/walk.hpp"

namespace walkmeg {

/// Deterministic near-uniform points on the unit sphere (golden-angle spiral).
/// Point i has z = 1 - (2i+1)/n and azimuth i * golden angle.
std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t n);

/// The same lattice expressed as pure coin states (theta, phi).
std::vector<InitialCoinState> fibonacci_coin_states(std::size_t n);

}  // namespace walkmeg
