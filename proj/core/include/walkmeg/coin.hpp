#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Core>

namespace walkmeg {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

/// Angles of the SU(2)-type coin
///   [ e^{i xi} cos(gamma)    e^{i zeta} sin(gamma)  ]
///   [ e^{-i zeta} sin(gamma) -e^{-i xi} cos(gamma)  ]
/// All three are canonicalized into [0, 2pi) on construction.
class CoinParameters {
 public:
  CoinParameters(double xi, double gamma, double zeta);

  /// The one-parameter family C(gamma) = C(0, gamma, 0).
  static CoinParameters from_gamma(double gamma) { return {0.0, gamma, 0.0}; }

  double xi() const { return xi_; }
  double gamma() const { return gamma_; }
  double zeta() const { return zeta_; }

 private:
  double xi_;
  double gamma_;
  double zeta_;
};

/// A 2x2 unitary acting on the coin qubit. Unitarity (||C^dag C - 1||_max < 1e-12)
/// is checked at construction.
class CoinOperator {
 public:
  explicit CoinOperator(const Matrix2c& entries);

  const Matrix2c& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  /// Largest elementwise deviation of C^dag C from the identity.
  double unitarity_defect() const;

  friend bool operator==(const CoinOperator& a, const CoinOperator& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Matrix2c entries_;
};

enum class NamedCoin { H, I, F, X, Z };

CoinOperator build_coin(const CoinParameters& params);
CoinOperator named_coin(NamedCoin name);

/// Accepts "H", "I", "F", "X", "Z" (also "1", "sx", "sz" as aliases).
CoinOperator named_coin(std::string_view name);

/// Canonical one-letter label for a named coin.
std::string_view coin_label(NamedCoin name);

/// Wraps an angle into [0, 2pi). Throws InvalidParameter when not finite.
double canonical_angle(double radians);

}  // namespace walkmeg
