#include "walkmeg/momentum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "walkmeg/errors.hpp"

namespace walkmeg {

AffineBlochVector::AffineBlochVector(double a1, double a2, double a3) : a_(a1, a2, a3) {
  if (!a_.allFinite()) throw InvalidParameter("Bloch components must be finite");
  if (a_.squaredNorm() > 0.25 + 1e-9) throw InvalidParameter("Bloch vector outside the ball");
}

AffineBlochVector AffineBlochVector::from_coin_state(const InitialCoinState& coin) {
  const Eigen::Vector3d b = 0.5 * coin.bloch();
  return {b.x(), b.y(), b.z()};
}

AffineBlochVector AffineBlochVector::from_density(const Matrix2c& rho) {
  // rho = [[1/2 + a3, a1 - i a2], [a1 + i a2, 1/2 - a3]]
  const double a1 = rho(1, 0).real();
  const double a2 = rho(1, 0).imag();
  const double a3 = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  return {a1, a2, a3};
}

Eigen::Matrix4d superoperator_at(SuperoperatorKind kind, double k) {
  const double c = std::cos(2.0 * k);
  const double s = std::sin(2.0 * k);
  Eigen::Matrix4d m;
  if (kind == SuperoperatorKind::Hadamard) {
    m << 1, 0, 0, 0,
         0, 0, s, c,
         0, 0, -c, s,
         0, 1, 0, 0;
  } else {
    m << 1, 0, 0, 0,
         0, c, -s, 0,
         0, s, c, 0,
         0, 0, 0, 1;
  }
  return m;
}

std::size_t momentum_grid_size(std::size_t steps) { return 4 * steps + 4; }

Eigen::Matrix4d momentum_averaged_map(const BitString& bits, std::size_t grid_points) {
  const std::size_t n = grid_points == 0 ? momentum_grid_size(bits.size()) : grid_points;
  Eigen::Matrix4d total = Eigen::Matrix4d::Zero();
  for (std::size_t j = 0; j < n; ++j) {
    const double k = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                              static_cast<double>(n);
    const Eigen::Matrix4d lh = superoperator_at(SuperoperatorKind::Hadamard, k);
    const Eigen::Matrix4d li = superoperator_at(SuperoperatorKind::Identity, k);
    Eigen::Matrix4d product = Eigen::Matrix4d::Identity();
    for (std::size_t t = 0; t < bits.size(); ++t) {
      product = (bits[t] == 0 ? lh : li) * product;
    }
    total += product;
  }
  return total / static_cast<double>(n);
}

AffineBlochVector momentum_final_bloch(const BitString& bits, const AffineBlochVector& initial,
                                       std::size_t grid_points) {
  const Eigen::Vector4d out = momentum_averaged_map(bits, grid_points) * initial.as_vector();
  return {out[1], out[2], out[3]};
}

// --- patterns ---

SequencePattern SequencePattern::one_h(int l1, int l2, bool prefixed) {
  if (l1 < 0 || l2 < 0) throw InvalidParameter("pattern run lengths must be non-negative");
  if (prefixed && l1 < 1) throw InvalidParameter("prefixed pattern needs l1 >= 1");
  return {Form::OneH, l1, l2, 0, prefixed};
}

SequencePattern SequencePattern::two_h(int l1, int l2, int l3, bool prefixed) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw InvalidParameter("pattern run lengths must be non-negative");
  if (prefixed && l1 < 1) throw InvalidParameter("prefixed pattern needs l1 >= 1");
  return {Form::TwoH, l1, l2, l3, prefixed};
}

BitString SequencePattern::to_bits() const {
  std::vector<std::uint8_t> bits;
  auto ones = [&](int n) { bits.insert(bits.end(), static_cast<std::size_t>(n), 1); };
  if (prefixed) {
    bits.push_back(0);
    ones(l1 - 1);
  } else {
    ones(l1);
  }
  bits.push_back(0);
  ones(l2);
  if (form == Form::TwoH) {
    bits.push_back(0);
    ones(l3);
  }
  return BitString(std::move(bits));
}

std::size_t SequencePattern::length() const {
  const int hadamards = form == Form::OneH ? 1 : 2;
  return static_cast<std::size_t>(l1 + l2 + (form == Form::TwoH ? l3 : 0) + hadamards);
}

std::string SequencePattern::describe() const {
  std::ostringstream os;
  os << (prefixed ? "0+" : "") << (form == Form::OneH ? "1H(" : "2H(") << l1 << ',' << l2;
  if (form == Form::TwoH) os << ',' << l3;
  os << ')';
  return os.str();
}

std::optional<SequencePattern> match_pattern(const BitString& bits) {
  std::vector<int> runs{0};  // runs of 1s separated by zeros
  for (auto b : bits.bits()) {
    if (b == 0) {
      runs.push_back(0);
    } else {
      ++runs.back();
    }
  }
  const std::size_t zeros = runs.size() - 1;
  if (zeros == 1) return SequencePattern::one_h(runs[0], runs[1]);
  if (zeros == 2) return SequencePattern::two_h(runs[0], runs[1], runs[2]);
  if (zeros == 3 && runs[0] == 0) return SequencePattern::two_h(runs[1] + 1, runs[2], runs[3], true);
  return std::nullopt;
}

bool theorem_predicate(const SequencePattern& p) {
  if (p.form == SequencePattern::Form::OneH) {
    return p.l1 != 0 && p.l1 != p.l2 + 1;
  }
  // Each condition kills one surviving Fourier term of the k-averaged Bloch map.
  return p.l1 != p.l2 + 1 &&       // z <- a1 via sin(2 l1 k) sin(2 (l2+1) k)
         p.l2 != p.l3 &&           // x <- a3 via sin(2 (l2+1) k) sin(2 (l3+1) k)
         p.l1 != p.l3 + 1 &&       // x <- a1, y <- a2 via cos(2 l1 k) cos(2 (l3+1) k)
         p.l2 + p.l1 != p.l3 &&    // triple products cos*cos*cos, sin*cos*sin
         p.l2 - p.l1 != p.l3 &&
         p.l1 - p.l2 - p.l3 != 2;
}

BitString table_bits(std::size_t steps) {
  if (steps < 3) throw NoMegPossible("no {H, 1} sequence reaches fidelity 1 before step 3");
  const int t = static_cast<int>(steps);
  // 0 0 1^(T-2) is two_h(0, 0, T-2); 0 0 1 0 1^(T-4) is the prefixed two_h(1, 1, T-4).
  const SequencePattern pattern =
      steps <= 6 ? SequencePattern::two_h(0, 0, t - 2) : SequencePattern::two_h(1, 1, t - 4, true);
  if (!theorem_predicate(pattern)) {
    throw std::logic_error("table pattern " + pattern.describe() + " fails the optimality conditions");
  }
  return pattern.to_bits();
}

CoinSequence generate_table_sequence(std::size_t steps) {
  return CoinSequence(named_coin(NamedCoin::H), named_coin(NamedCoin::I), table_bits(steps));
}

BitString hadamard_f_table_bits(std::size_t steps) {
  static constexpr const char* kTable[] = {
      "110",         // F F H
      "0100",        // H F H H
      "01011",       // H F H F F
      "101001",      // F H F H H F
      "0010110",     // H H F H F F H
      "01111011",    // H F F F F H F F
      "101100001",   // F H F F H H H H F
      "1100011100",  // F F H H H F F F H H
  };
  if (steps < 3 || steps > 10) throw InvalidParameter("{H, F} reference sequences exist for 3 <= T <= 10");
  return BitString::parse(kTable[steps - 3]);
}

}  // namespace walkmeg
