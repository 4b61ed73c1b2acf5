#include "walkmeg/coin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "walkmeg/errors.hpp"

namespace walkmeg {

namespace {

constexpr double kUnitarityTolerance = 1e-12;

}  // namespace

double canonical_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidParameter("coin angle must be finite");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(radians, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (wrapped >= two_pi) wrapped = 0.0;
  return wrapped;
}

CoinParameters::CoinParameters(double xi, double gamma, double zeta)
    : xi_(canonical_angle(xi)), gamma_(canonical_angle(gamma)), zeta_(canonical_angle(zeta)) {}

CoinOperator::CoinOperator(const Matrix2c& entries) : entries_(entries) {
  if (!entries_.allFinite()) {
    throw InvalidParameter("coin matrix has non-finite entries");
  }
  if (unitarity_defect() >= kUnitarityTolerance) {
    throw InvalidParameter("coin matrix is not unitary");
  }
}

double CoinOperator::unitarity_defect() const {
  const Matrix2c product = entries_.adjoint() * entries_;
  return (product - Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

CoinOperator build_coin(const CoinParameters& params) {
  const double c = std::cos(params.gamma());
  const double s = std::sin(params.gamma());
  const Complex e_xi = std::polar(1.0, params.xi());
  const Complex e_zeta = std::polar(1.0, params.zeta());
  Matrix2c m;
  m << e_xi * c, e_zeta * s,
       std::conj(e_zeta) * s, -std::conj(e_xi) * c;
  return CoinOperator(m);
}

CoinOperator named_coin(NamedCoin name) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  Matrix2c m;
  switch (name) {
    case NamedCoin::H:
      m << r, r, r, -r;
      break;
    case NamedCoin::I:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case NamedCoin::F:
      m << r, i * r, i * r, r;
      break;
    case NamedCoin::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case NamedCoin::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return CoinOperator(m);
}

CoinOperator named_coin(std::string_view name) {
  if (name == "H") return named_coin(NamedCoin::H);
  if (name == "I" || name == "1") return named_coin(NamedCoin::I);
  if (name == "F") return named_coin(NamedCoin::F);
  if (name == "X" || name == "sx") return named_coin(NamedCoin::X);
  if (name == "Z" || name == "sz") return named_coin(NamedCoin::Z);
  throw InvalidParameter("unknown coin name '" + std::string(name) + "'");
}

std::string_view coin_label(NamedCoin name) {
  switch (name) {
    case NamedCoin::H: return "H";
    case NamedCoin::I: return "I";
    case NamedCoin::F: return "F";
    case NamedCoin::X: return "X";
    case NamedCoin::Z: return "Z";
  }
  return "?";
}

}  // namespace walkmeg
