#include "walkmeg/channel.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "walkmeg/errors.hpp"
#include "walkmeg/sphere.hpp"

namespace walkmeg {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-10;
constexpr double kNotCpThreshold = -1e-6;
constexpr double kClipThreshold = -1e-9;
// Eigenvalues of a unit-trace chi below this are round-off and treated as zero.
constexpr double kRankCutoff = 1e-14;

double clipped_root(double lambda) { return lambda <= kRankCutoff ? 0.0 : std::sqrt(lambda); }

Matrix4c hermitian_part(const Matrix4c& m) { return 0.5 * (m + m.adjoint()); }

/// Eigen-decomposition based square root with clipping of tiny negative eigenvalues.
Matrix4c psd_sqrt(const Matrix4c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(hermitian_part(m));
  Eigen::Vector4d roots = solver.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (roots[i] < kClipThreshold) throw InvalidParameter("chi matrix is not positive semidefinite");
    roots[i] = clipped_root(roots[i]);
  }
  return solver.eigenvectors() * roots.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

const std::array<Matrix2c, 4>& pauli_basis() {
  static const std::array<Matrix2c, 4> basis = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix2c, 4> p;
    p[0] << 1.0, 0.0, 0.0, 1.0;
    p[1] << 0.0, 1.0, 1.0, 0.0;
    p[2] << 0.0, -i, i, 0.0;
    p[3] << 1.0, 0.0, 0.0, -1.0;
    return p;
  }();
  return basis;
}

bool PauliTransferMatrix::is_trace_preserving(double tol) const {
  return std::abs(entries_(0, 0) - 1.0) <= tol && std::abs(entries_(0, 1)) <= tol &&
         std::abs(entries_(0, 2)) <= tol && std::abs(entries_(0, 3)) <= tol;
}

Eigen::Vector3d PauliTransferMatrix::apply(const Eigen::Vector3d& bloch) const {
  const Eigen::Vector4d in(1.0, bloch.x(), bloch.y(), bloch.z());
  const Eigen::Vector4d out = entries_ * in;
  return out.tail<3>();
}

ChiMatrix::ChiMatrix(const Matrix4c& entries) : entries_(entries) {
  if (!entries_.allFinite()) throw InvalidParameter("chi matrix has non-finite entries");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw InvalidParameter("chi matrix is not Hermitian");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw InvalidParameter("chi matrix must have unit trace");
  }
  if (eigenvalues()[0] < kNotCpThreshold) {
    throw NotCompletelyPositive("chi matrix has a negative eigenvalue");
  }
}

Eigen::Vector4d ChiMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(hermitian_part(entries_), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

PauliTransferMatrix ptm_from_tomography(const TomographyOutputs& out) {
  const auto& p = pauli_basis();
  std::array<Matrix2c, 4> images;
  images[0] = out.horizontal + out.vertical;
  images[3] = out.horizontal - out.vertical;
  images[1] = 2.0 * out.diagonal - images[0];
  images[2] = 2.0 * out.left_circular - images[0];

  Matrix4d r;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      r(m, n) = 0.5 * (p[m] * images[n]).trace().real();
    }
  }
  return PauliTransferMatrix(r);
}

PauliTransferMatrix coin_channel_ptm(const CoinSequence& sequence) {
  TomographyOutputs out;
  out.horizontal = reduced_coin_state(evolve(InitialCoinState::horizontal(), sequence));
  out.vertical = reduced_coin_state(evolve(InitialCoinState::vertical(), sequence));
  out.diagonal = reduced_coin_state(evolve(InitialCoinState::diagonal(), sequence));
  out.left_circular = reduced_coin_state(evolve(InitialCoinState::left_circular(), sequence));
  return ptm_from_tomography(out);
}

ChiMatrix ptm_to_chi(const PauliTransferMatrix& ptm) {
  if (!ptm.is_trace_preserving(1e-9)) {
    throw InvalidParameter("Pauli transfer matrix is not trace preserving");
  }
  const auto& p = pauli_basis();
  const Matrix4d& r = ptm.matrix();

  // eps(sigma_n) = sum_m R_mn sigma_m
  std::array<Matrix2c, 4> images;
  for (int n = 0; n < 4; ++n) {
    images[n].setZero();
    for (int m = 0; m < 4; ++m) images[n] += r(m, n) * p[m];
  }

  // Choi matrix J = sum_ij |i><j| (x) eps(|i><j|), index (i, a) -> 2i + a.
  Matrix4c choi = Matrix4c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix2c image = Matrix2c::Zero();
      // |i><j| = sum_n (1/2) (sigma_n)_{ji} sigma_n
      for (int n = 0; n < 4; ++n) image += 0.5 * p[n](j, i) * images[n];
      choi.block<2, 2>(2 * i, 2 * j) = image;
    }
  }

  // chi_mn = <v_m| J |v_n> / 4 with v_m = (1 (x) sigma_m) sum_i |ii>.
  Eigen::Matrix4cd v;
  for (int m = 0; m < 4; ++m) {
    for (int i = 0; i < 2; ++i) {
      for (int a = 0; a < 2; ++a) v(2 * i + a, m) = p[m](a, i);
    }
  }
  const Matrix4c chi = v.adjoint() * choi * v / 4.0;
  return ChiMatrix(hermitian_part(chi));
}

PauliTransferMatrix chi_to_ptm(const ChiMatrix& chi) {
  const auto& p = pauli_basis();
  Matrix4d r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
          acc += chi(m, n) * (p[i] * p[m] * p[j] * p[n]).trace();
        }
      }
      r(i, j) = 0.5 * acc.real();
    }
  }
  return PauliTransferMatrix(r);
}

ChiMatrix depolarizing_chi(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidParameter("depolarizing strength must lie in [0, 1]");
  Eigen::Vector4cd diag(1.0 - 0.75 * eta, 0.25 * eta, 0.25 * eta, 0.25 * eta);
  return ChiMatrix(diag.asDiagonal());
}

double process_fidelity(const ChiMatrix& a, const ChiMatrix& b) {
  if (b.eigenvalues()[0] < kClipThreshold) {
    throw InvalidParameter("chi matrix is not positive semidefinite");
  }
  const Matrix4c root_a = psd_sqrt(a.matrix());
  const Matrix4c inner = hermitian_part(root_a * b.matrix() * root_a);
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(inner, Eigen::EigenvaluesOnly);
  double trace_root = 0.0;
  for (int i = 0; i < 4; ++i) trace_root += clipped_root(solver.eigenvalues()[i]);
  return std::clamp(trace_root * trace_root, 0.0, 1.0);
}

double depolarizing_fidelity(const PauliTransferMatrix& ptm) {
  static const ChiMatrix target = depolarizing_chi(1.0);
  return process_fidelity(ptm_to_chi(ptm), target);
}

double sequence_fidelity(const CoinSequence& sequence) {
  return depolarizing_fidelity(coin_channel_ptm(sequence));
}

BlochImage bloch_image(const PauliTransferMatrix& ptm, std::size_t samples) {
  if (samples == 0) throw InvalidParameter("bloch_image needs at least one sample");
  BlochImage image;
  image.reserve(samples);
  for (const auto& point : fibonacci_sphere(samples)) {
    image.push_back({point, ptm.apply(point)});
  }
  return image;
}

BlochImage bloch_image(const CoinSequence& sequence, std::size_t samples) {
  return bloch_image(coin_channel_ptm(sequence), samples);
}

}  // namespace walkmeg
