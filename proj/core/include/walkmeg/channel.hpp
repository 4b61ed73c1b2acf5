#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "walkmeg/walk.hpp"

namespace walkmeg {

using Matrix4d = Eigen::Matrix4d;
using Matrix4c = Eigen::Matrix4cd;

/// Pauli matrices in the order (1, X, Y, Z).
const std::array<Matrix2c, 4>& pauli_basis();

/// R[m][n] = (1/2) tr(sigma_m eps(sigma_n)).
class PauliTransferMatrix {
 public:
  explicit PauliTransferMatrix(const Matrix4d& entries) : entries_(entries) {}

  const Matrix4d& matrix() const { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }

  /// First row equals (1, 0, 0, 0) within `tol`.
  bool is_trace_preserving(double tol = 1e-10) const;

  /// Image of a Bloch vector under the channel (affine part included).
  Eigen::Vector3d apply(const Eigen::Vector3d& bloch) const;

 private:
  Matrix4d entries_;
};

/// eps(rho) = sum_{mn} chi_{mn} sigma_m rho sigma_n, trace-1 normalization
/// (identity channel <-> diag(1,0,0,0)).
///
/// Construction checks Hermiticity (1e-10), unit trace (1e-10) and that no
/// eigenvalue falls below -1e-6; the latter raises NotCompletelyPositive.
class ChiMatrix {
 public:
  explicit ChiMatrix(const Matrix4c& entries);

  const Matrix4c& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  /// Ascending eigenvalues.
  Eigen::Vector4d eigenvalues() const;

 private:
  Matrix4c entries_;
};

/// Input Bloch point on the unit sphere paired with its channel image.
struct BlochPair {
  Eigen::Vector3d input;
  Eigen::Vector3d output;
};

using BlochImage = std::vector<BlochPair>;

/// Reduced coin states for the four tomography inputs |H>, |V>, |+>, |L>.
struct TomographyOutputs {
  Matrix2c horizontal;
  Matrix2c vertical;
  Matrix2c diagonal;
  Matrix2c left_circular;
};

/// Linear inversion of the coin channel from its action on |H>, |V>, |+>, |L>.
PauliTransferMatrix ptm_from_tomography(const TomographyOutputs& outputs);

PauliTransferMatrix coin_channel_ptm(const CoinSequence& sequence);

ChiMatrix ptm_to_chi(const PauliTransferMatrix& ptm);
PauliTransferMatrix chi_to_ptm(const ChiMatrix& chi);

/// chi of (1 - eta) rho + eta 1/2: diag(1 - 3 eta/4, eta/4, eta/4, eta/4).
ChiMatrix depolarizing_chi(double eta);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2 between trace-1 PSD matrices.
/// Eigenvalues in (-1e-9, 0) are clipped; anything lower is InvalidParameter.
double process_fidelity(const ChiMatrix& a, const ChiMatrix& b);

/// Fidelity of the sequence's coin channel against the fully depolarizing channel.
double sequence_fidelity(const CoinSequence& sequence);

/// Fidelity against the fully depolarizing channel for an already reconstructed PTM.
double depolarizing_fidelity(const PauliTransferMatrix& ptm);

BlochImage bloch_image(const PauliTransferMatrix& ptm, std::size_t samples);
BlochImage bloch_image(const CoinSequence& sequence, std::size_t samples);

}  // namespace walkmeg
