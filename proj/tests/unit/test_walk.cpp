#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "walkmeg/coin.hpp"
#include "walkmeg/errors.hpp"
#include "walkmeg/walk.hpp"

using namespace walkmeg;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CoinSequence hi_sequence(const std::string& bits) {
  return CoinSequence(named_coin(NamedCoin::H), named_coin(NamedCoin::I), BitString::parse(bits));
}

double max_abs_diff(const Matrix2c& a, const Matrix2c& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Coin, BuildCoinSpecialAngles) {
  const Matrix2c h = build_coin({0.0, kPi / 4, 0.0}).matrix();
  Matrix2c expected;
  expected << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  EXPECT_LT(max_abs_diff(h, expected), 1e-15);

  expected << 1, 0, 0, -1;
  EXPECT_LT(max_abs_diff(build_coin({0.0, 0.0, 0.0}).matrix(), expected), 1e-15);
  expected << 0, 1, 1, 0;
  EXPECT_LT(max_abs_diff(build_coin({0.0, kPi / 2, 0.0}).matrix(), expected), 1e-15);
}

TEST(Coin, NamedCoins) {
  Matrix2c f;
  f << Complex(kInvSqrt2, 0), Complex(0, kInvSqrt2), Complex(0, kInvSqrt2), Complex(kInvSqrt2, 0);
  EXPECT_LT(max_abs_diff(named_coin(NamedCoin::F).matrix(), f), 1e-15);
  EXPECT_EQ(named_coin(NamedCoin::I).matrix(), Matrix2c::Identity());
  EXPECT_EQ(named_coin("H"), named_coin(NamedCoin::H));
  EXPECT_EQ(named_coin("Z"), named_coin(NamedCoin::Z));
  EXPECT_THROW(named_coin("Q"), InvalidParameter);
}

TEST(Coin, RejectsNonFiniteAngles) {
  EXPECT_THROW(CoinParameters(0.0, std::nan(""), 0.0), InvalidParameter);
  EXPECT_THROW(CoinParameters(INFINITY, 0.0, 0.0), InvalidParameter);
}

TEST(Coin, RandomCoinsAreUnitary) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const CoinOperator c = build_coin({u(rng), u(rng), u(rng)});
    EXPECT_LT(c.unitarity_defect(), 1e-12);
  }
}

TEST(Coin, RejectsNonUnitaryMatrix) {
  Matrix2c m;
  m << 1, 1, 0, 1;
  EXPECT_THROW(CoinOperator{m}, InvalidParameter);
}

TEST(BitStringTest, ParseAndIndex) {
  const BitString b = BitString::parse("0011");
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(b.to_index(), 3u);
  EXPECT_EQ(BitString::from_index(3, 4), b);
  EXPECT_EQ(b.to_string(), "0011");
  EXPECT_EQ(b.count_zeros(), 2u);
  EXPECT_THROW(BitString::parse("012"), InvalidParameter);
}

TEST(BitStringTest, EmptySequenceRejected) {
  EXPECT_THROW(hi_sequence(""), InvalidParameter);
}

TEST(InitialState, Amplitudes) {
  const WalkerState a = initial_state({0.0, 0.0});
  EXPECT_EQ(a.amplitude(0, 0), Complex(1.0));
  EXPECT_EQ(a.amplitude(1, 0), Complex(0.0));
  const WalkerState b = initial_state({kPi, 0.0});
  EXPECT_NEAR(std::abs(b.amplitude(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(b.amplitude(0, 0)), 0.0, 1e-15);
  const WalkerState l = initial_state({kPi / 2, kPi / 2});
  EXPECT_NEAR(std::abs(l.amplitude(0, 0) - Complex(kInvSqrt2, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l.amplitude(1, 0) - Complex(0, kInvSqrt2)), 0.0, 1e-15);
}

TEST(Step, SingleHadamard) {
  const WalkerState s = step(initial_state({}), named_coin(NamedCoin::H));
  EXPECT_EQ(s.steps(), 1u);
  EXPECT_NEAR(std::abs(s.amplitude(0, 1) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(1, -1) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_EQ(s.amplitude(0, -1), Complex(0.0));
}

TEST(Step, IdentityDriftsRight) {
  const WalkerState s = step(initial_state({}), named_coin(NamedCoin::I));
  EXPECT_NEAR(std::abs(s.amplitude(0, 1)), 1.0, 1e-15);
  const WalkerState d = evolve({}, hi_sequence("1111111"));
  EXPECT_NEAR(position_distribution(d).at(7), 1.0, 1e-15);
}

TEST(Step, ThreeStepDistributionMatchesPathOracle) {
  // H, H, I from |0>: the oracle gives 1/4 at each of x = 3, 1, -1, -3.
  const auto ref = oracle::distribution(oracle::sequence({0, 0, 1}, oracle::hadamard(), oracle::identity()), 1.0, 0.0);
  const auto dist = position_distribution(evolve({}, hi_sequence("001")));
  for (int x = -3; x <= 3; ++x) {
    const double expected = ref.contains(x) ? ref.at(x) : 0.0;
    EXPECT_NEAR(dist.at(x), expected, 1e-12) << "x = " << x;
  }
  EXPECT_NEAR(dist.at(3), 0.25, 1e-12);
  EXPECT_NEAR(dist.at(1), 0.25, 1e-12);
  EXPECT_NEAR(dist.at(-1), 0.25, 1e-12);
  EXPECT_NEAR(dist.at(-3), 0.25, 1e-12);
}

TEST(Step, RandomSequencesMatchPathOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, kPi / 2);
  std::uniform_real_distribution<double> sph(0.0, 2 * kPi);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t steps = 1 + trial % 9;
    const double g0 = ang(rng);
    const double g1 = ang(rng);
    std::vector<int> bits(steps);
    for (auto& b : bits) b = static_cast<int>(rng() & 1u);
    const InitialCoinState init{sph(rng) / 2, sph(rng)};

    std::string text;
    for (int b : bits) text += b ? '1' : '0';
    const CoinSequence seq(build_coin(CoinParameters::from_gamma(g0)), build_coin(CoinParameters::from_gamma(g1)),
                           BitString::parse(text));
    const auto dist = position_distribution(evolve(init, seq));
    const auto ref = oracle::distribution(
        oracle::sequence(bits, oracle::gamma_coin(g0), oracle::gamma_coin(g1)), init.amplitude0(), init.amplitude1());
    for (int x = -static_cast<int>(steps); x <= static_cast<int>(steps); ++x) {
      const double expected = ref.contains(x) ? ref.at(x) : 0.0;
      ASSERT_NEAR(dist.at(x), expected, 1e-12);
    }
  }
}

TEST(Step, NormAndParityPreserved) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  WalkerState s = initial_state({1.1, 0.4});
  for (int t = 1; t <= 30; ++t) {
    s = step(s, build_coin({u(rng), u(rng), u(rng)}));
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    for (int x = -t; x <= t; ++x) {
      if ((x - t) % 2 != 0) {
        ASSERT_EQ(s.amplitude(0, x), Complex(0.0));
        ASSERT_EQ(s.amplitude(1, x), Complex(0.0));
      }
    }
  }
}

TEST(Evolve, EqualsComposedSteps) {
  const CoinSequence seq = hi_sequence("0010110");
  const InitialCoinState init{0.7, 2.1};
  WalkerState manual = initial_state(init);
  for (std::size_t t = 0; t < seq.steps(); ++t) manual = step(manual, seq.coin_at(t));
  const WalkerState direct = evolve(init, seq);
  for (int c = 0; c < 2; ++c) {
    for (int x = -7; x <= 7; ++x) EXPECT_EQ(manual.amplitude(c, x), direct.amplitude(c, x));
  }
}

TEST(ReducedState, Examples) {
  const Matrix2c product = reduced_coin_state(initial_state({}));
  EXPECT_LT(max_abs_diff(product, Matrix2c(Eigen::Vector2cd(1, 0).asDiagonal())), 1e-15);

  const Matrix2c one = reduced_coin_state(step(initial_state({}), named_coin(NamedCoin::H)));
  EXPECT_LT(max_abs_diff(one, Matrix2c::Identity() / 2.0), 1e-15);

  const Matrix2c rho = reduced_coin_state(evolve({}, hi_sequence("001")));
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(rho);
  EXPECT_NEAR(es.eigenvalues()[0], 0.5, 1e-10);
  EXPECT_NEAR(es.eigenvalues()[1], 0.5, 1e-10);
}

TEST(ReducedState, HermitianUnitTrace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BitString bits = BitString::from_index(rng() % 4096, 12);
    const Matrix2c rho = reduced_coin_state(
        evolve({1.0 + 0.01 * trial, 0.3 * trial}, CoinSequence(named_coin(NamedCoin::H), named_coin(NamedCoin::F), bits)));
    EXPECT_NEAR(std::abs(rho.trace() - Complex(1.0)), 0.0, 1e-10);
    EXPECT_LT(max_abs_diff(rho, rho.adjoint()), 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(rho);
    EXPECT_GE(es.eigenvalues()[0], -1e-12);
  }
}

TEST(Distribution, OneHadamardStep) {
  const auto d = position_distribution(step(initial_state({}), named_coin(NamedCoin::H)));
  EXPECT_NEAR(d.at(1), 0.5, 1e-15);
  EXPECT_NEAR(d.at(-1), 0.5, 1e-15);
  EXPECT_EQ(d.at(0), 0.0);
}

TEST(Distribution, ValidatesEntries) {
  EXPECT_THROW(ProbabilityDistribution(1, {0.5, 0.0, 0.6}), InvalidParameter);
  EXPECT_THROW(ProbabilityDistribution(1, {-0.1, 0.0, 1.1}), InvalidParameter);
}
