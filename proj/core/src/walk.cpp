#include "walkmeg/walk.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "walkmeg/errors.hpp"

namespace walkmeg {

Complex InitialCoinState::amplitude0() const { return {std::cos(theta / 2.0), 0.0}; }

Complex InitialCoinState::amplitude1() const { return std::polar(std::sin(theta / 2.0), phi); }

Eigen::Vector3d InitialCoinState::bloch() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

InitialCoinState InitialCoinState::vertical() { return {std::numbers::pi, 0.0}; }
InitialCoinState InitialCoinState::diagonal() { return {std::numbers::pi / 2.0, 0.0}; }
InitialCoinState InitialCoinState::left_circular() {
  return {std::numbers::pi / 2.0, std::numbers::pi / 2.0};
}

// --- BitString ---

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidParameter("bit values must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw InvalidParameter("bit string may only contain '0' and '1': '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::from_index(std::uint64_t value, std::size_t length) {
  if (length > 64) throw InvalidParameter("bit string index limited to 64 bits");
  std::vector<std::uint8_t> bits(length);
  for (std::size_t t = 0; t < length; ++t) {
    bits[t] = static_cast<std::uint8_t>((value >> (length - 1 - t)) & 1u);
  }
  return BitString(std::move(bits));
}

std::uint64_t BitString::to_index() const {
  if (bits_.size() > 64) throw InvalidParameter("bit string index limited to 64 bits");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::size_t BitString::count_zeros() const {
  std::size_t n = 0;
  for (auto b : bits_) n += (b == 0);
  return n;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

// --- CoinSequence ---

CoinSequence::CoinSequence(CoinOperator coin0, CoinOperator coin1, BitString bits)
    : coin0_(std::move(coin0)), coin1_(std::move(coin1)), bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidParameter("coin sequence needs at least one step");
}

// --- WalkerState ---

Complex WalkerState::amplitude(int coin, int position) const {
  if (coin < 0 || coin > 1) throw InvalidParameter("coin index must be 0 or 1");
  const long offset = static_cast<long>(position) + static_cast<long>(steps_);
  if (offset < 0 || offset >= static_cast<long>(width())) return {0.0, 0.0};
  return amplitudes_[static_cast<std::size_t>(coin) * width() + static_cast<std::size_t>(offset)];
}

std::span<const Complex> WalkerState::coin_row(int coin) const {
  return std::span<const Complex>(amplitudes_).subspan(static_cast<std::size_t>(coin) * width(),
                                                       width());
}

double WalkerState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

WalkerState initial_state(const InitialCoinState& coin) {
  WalkerState s;
  s.steps_ = 0;
  s.amplitudes_ = {coin.amplitude0(), coin.amplitude1()};
  return s;
}

void step_into(const WalkerState& state, const CoinOperator& coin, WalkerState& out) {
  const std::size_t w_in = state.width();
  const std::size_t w_out = w_in + 2;
  out.steps_ = state.steps_ + 1;
  out.amplitudes_.assign(2 * w_out, Complex{0.0, 0.0});

  const Complex c00 = coin(0, 0), c01 = coin(0, 1), c10 = coin(1, 0), c11 = coin(1, 1);
  const Complex* up = state.amplitudes_.data();
  const Complex* down = up + w_in;
  Complex* right = out.amplitudes_.data();  // coin 0 after the step
  Complex* left = right + w_out;            // coin 1 after the step

  // Input site x (offset i = x + T) lands at x +/- 1; output offsets shift by one
  // more because the lattice widens by one site on each side.
  // Occupied sites satisfy x = T (mod 2), i.e. even offsets; odd offsets stay exactly zero.
  for (std::size_t i = 0; i < w_in; i += 2) {
    const Complex a = up[i];
    const Complex b = down[i];
    right[i + 2] = c00 * a + c01 * b;
    left[i] = c10 * a + c11 * b;
  }
}

WalkerState step(const WalkerState& state, const CoinOperator& coin) {
  WalkerState out;
  step_into(state, coin, out);
  return out;
}

WalkerState evolve(const InitialCoinState& coin, const CoinSequence& sequence) {
  WalkerState current = initial_state(coin);
  WalkerState next;
  for (std::size_t t = 0; t < sequence.steps(); ++t) {
    step_into(current, sequence.coin_at(t), next);
    std::swap(current, next);
  }
  return current;
}

Matrix2c reduced_coin_state(const WalkerState& state) {
  const auto up = state.coin_row(0);
  const auto down = state.coin_row(1);
  Complex r00{0.0, 0.0}, r01{0.0, 0.0}, r11{0.0, 0.0};
  for (std::size_t i = 0; i < up.size(); ++i) {
    r00 += up[i] * std::conj(up[i]);
    r01 += up[i] * std::conj(down[i]);
    r11 += down[i] * std::conj(down[i]);
  }
  Matrix2c rho;
  rho << Complex(r00.real(), 0.0), r01, std::conj(r01), Complex(r11.real(), 0.0);
  return rho;
}

ProbabilityDistribution::ProbabilityDistribution(std::size_t steps, std::vector<double> probabilities)
    : steps_(steps), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != 2 * steps_ + 1) {
    throw InvalidParameter("distribution must cover positions -T..T");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0)) throw InvalidParameter("probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) throw InvalidParameter("probabilities must sum to 1");
}

double ProbabilityDistribution::at(int position) const {
  const long offset = static_cast<long>(position) + static_cast<long>(steps_);
  if (offset < 0 || offset >= static_cast<long>(probabilities_.size())) return 0.0;
  return probabilities_[static_cast<std::size_t>(offset)];
}

ProbabilityDistribution position_distribution(const WalkerState& state) {
  const auto up = state.coin_row(0);
  const auto down = state.coin_row(1);
  std::vector<double> p(state.width());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(up[i]) + std::norm(down[i]);
  return ProbabilityDistribution(state.steps(), std::move(p));
}

}  // namespace walkmeg
