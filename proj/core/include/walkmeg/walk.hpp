#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walkmeg/coin.hpp"

namespace walkmeg {

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct InitialCoinState {
  double theta = 0.0;
  double phi = 0.0;

  Complex amplitude0() const;
  Complex amplitude1() const;

  /// (sin theta cos phi, sin theta sin phi, cos theta).
  Eigen::Vector3d bloch() const;

  /// Polarization shorthands: H = |0>, V = |1>, + = (|0>+|1>)/sqrt2, L = (|0>+i|1>)/sqrt2.
  static InitialCoinState horizontal() { return {0.0, 0.0}; }
  static InitialCoinState vertical();
  static InitialCoinState diagonal();
  static InitialCoinState left_circular();
};

/// Bit string selecting one of two coins per step. Position 0 is the first step.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  static BitString parse(std::string_view text);

  /// Big-endian: the first step is the most significant of `length` bits, so
  /// numeric order of `value` equals lexicographic order of the rendered string.
  static BitString from_index(std::uint64_t value, std::size_t length);
  std::uint64_t to_index() const;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t count_zeros() const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Two coins plus a bit string: bit 0 selects coin0, bit 1 selects coin1.
/// Length is at least one step.
class CoinSequence {
 public:
  CoinSequence(CoinOperator coin0, CoinOperator coin1, BitString bits);

  const CoinOperator& coin0() const { return coin0_; }
  const CoinOperator& coin1() const { return coin1_; }
  const BitString& bits() const { return bits_; }
  std::size_t steps() const { return bits_.size(); }
  const CoinOperator& coin_at(std::size_t step) const { return bits_[step] ? coin1_ : coin0_; }

 private:
  CoinOperator coin0_;
  CoinOperator coin1_;
  BitString bits_;
};

/// Amplitudes over (coin c in {0,1}, position x in [-T, T]) after T steps from the origin.
/// Storage is dense: index c * (2T+1) + (x + T).
class WalkerState {
 public:
  WalkerState() = default;

  std::size_t steps() const { return steps_; }
  int min_position() const { return -static_cast<int>(steps_); }
  int max_position() const { return static_cast<int>(steps_); }
  std::size_t width() const { return 2 * steps_ + 1; }

  Complex amplitude(int coin, int position) const;
  std::span<const Complex> coin_row(int coin) const;

  double norm_squared() const;

 private:
  friend WalkerState initial_state(const InitialCoinState&);
  friend void step_into(const WalkerState&, const CoinOperator&, WalkerState&);

  std::size_t steps_ = 0;
  std::vector<Complex> amplitudes_;
};

/// P(x) for x in [-T, T].
class ProbabilityDistribution {
 public:
  ProbabilityDistribution(std::size_t steps, std::vector<double> probabilities);

  std::size_t steps() const { return steps_; }
  int min_position() const { return -static_cast<int>(steps_); }
  int max_position() const { return static_cast<int>(steps_); }
  double at(int position) const;
  std::span<const double> values() const { return probabilities_; }

 private:
  std::size_t steps_;
  std::vector<double> probabilities_;
};

WalkerState initial_state(const InitialCoinState& coin);

/// One step: C on the coin at every site, then |0> moves right and |1> moves left.
WalkerState step(const WalkerState& state, const CoinOperator& coin);

/// Same as step() but writes into `out`, reusing its storage. `out` must not alias `state`.
void step_into(const WalkerState& state, const CoinOperator& coin, WalkerState& out);

WalkerState evolve(const InitialCoinState& coin, const CoinSequence& sequence);

/// tr_w |psi><psi|: entry (c, c') = sum_x A(c,x) conj(A(c',x)).
Matrix2c reduced_coin_state(const WalkerState& state);

ProbabilityDistribution position_distribution(const WalkerState& state);

}  // namespace walkmeg
