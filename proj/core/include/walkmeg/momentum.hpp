#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "walkmeg/walk.hpp"

namespace walkmeg {

/// Coin state as the 4-vector (1/2, a1, a2, a3) with a_i = tr(rho sigma_i) / 2.
class AffineBlochVector {
 public:
  /// Throws InvalidParameter when a1^2 + a2^2 + a3^2 > 1/4 + 1e-9.
  AffineBlochVector(double a1, double a2, double a3);

  static AffineBlochVector from_coin_state(const InitialCoinState& coin);
  static AffineBlochVector from_density(const Matrix2c& rho);

  double a0() const { return 0.5; }
  double a1() const { return a_[0]; }
  double a2() const { return a_[1]; }
  double a3() const { return a_[2]; }

  Eigen::Vector4d as_vector() const { return {0.5, a_[0], a_[1], a_[2]}; }
  /// (a1, a2, a3) scaled by 2, i.e. the usual Bloch vector.
  Eigen::Vector3d bloch() const { return 2.0 * a_; }

 private:
  Eigen::Vector3d a_;
};

enum class SuperoperatorKind { Hadamard, Identity };

/// Single-step map of the affine Bloch vector at quasi-momentum k for the
/// {H, 1} coin set:
///   L_H(k): (a1, a2, a3) -> (a2 sin2k + a3 cos2k, -a2 cos2k + a3 sin2k, a1)
///   L_1(k): rotation by 2k in the (a1, a2) plane.
Eigen::Matrix4d superoperator_at(SuperoperatorKind kind, double k);

/// Number of uniform k-points used for a T-step product. The integrand is a
/// trigonometric polynomial of degree <= 2T, so 4T + 4 points integrate it exactly.
std::size_t momentum_grid_size(std::size_t steps);

/// (1/2pi) \int dk prod_t L(b_t, k) alpha_in over the {H, 1} coin set
/// (bit 0 = H, bit 1 = identity). `grid_points` = 0 selects momentum_grid_size().
AffineBlochVector momentum_final_bloch(const BitString& bits, const AffineBlochVector& initial,
                                       std::size_t grid_points = 0);

/// The k-averaged 4x4 map itself.
Eigen::Matrix4d momentum_averaged_map(const BitString& bits, std::size_t grid_points = 0);

/// Families of {H, 1} bit strings with closed-form optimality conditions.
///   OneH:  1^l1 0 1^l2
///   TwoH:  1^l1 0 1^l2 0 1^l3
/// With `prefixed`, the leading 1 is replaced by an extra Hadamard:
///   0 1^(l1-1) 0 1^l2          (prefixed OneH, l1 >= 1)
///   0 1^(l1-1) 0 1^l2 0 1^l3   (prefixed TwoH, l1 >= 1)
struct SequencePattern {
  enum class Form { OneH, TwoH };

  Form form = Form::OneH;
  int l1 = 0;
  int l2 = 0;
  int l3 = 0;
  bool prefixed = false;

  static SequencePattern one_h(int l1, int l2, bool prefixed = false);
  static SequencePattern two_h(int l1, int l2, int l3, bool prefixed = false);

  BitString to_bits() const;
  std::size_t length() const;
  std::string describe() const;

  friend bool operator==(const SequencePattern&, const SequencePattern&) = default;
};

/// Recognizes a bit string as one of the pattern families. Strings with one
/// Hadamard map to OneH; two Hadamards to TwoH (leading-0 strings included,
/// with l1 = 0); three Hadamards with a leading 0 to prefixed TwoH.
std::optional<SequencePattern> match_pattern(const BitString& bits);

/// True iff the sequence is MEG-optimal according to the integer selection
/// rules of the k-integral.
///   OneH  (l1, l2):     l1 != 0, l1 != l2 + 1
///   TwoH  (l1, l2, l3): l1 != l2 + 1, l1 != l3 + 1, l2 != l3, l2 + l1 != l3,
///                       l2 - l1 != l3, l1 - l2 - l3 != 2
/// Prefixed forms satisfy the same conditions as their unprefixed parents,
/// since the first coin only rotates the (arbitrary) initial state.
bool theorem_predicate(const SequencePattern& pattern);

/// {H, 1} sequence with fidelity 1 at T >= 3: 0 0 1^(T-2) for T <= 6 and
/// 0 0 1 0 1^(T-4) beyond. Throws NoMegPossible for T < 3.
CoinSequence generate_table_sequence(std::size_t steps);

/// Bits only, same construction as generate_table_sequence().
BitString table_bits(std::size_t steps);

/// Reference {H, F} sequences for 3 <= T <= 10 (bit 0 = H, bit 1 = F). These
/// do not reach fidelity 1; they are the experimental comparison set.
BitString hadamard_f_table_bits(std::size_t steps);

}  // namespace walkmeg
