#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <vector>

#include "polariton/material.hpp"

namespace polariton {

enum class ModeKind { transverse, longitudinal, gauge };

struct ModeClassification {
  ModeKind kind = ModeKind::transverse;
  /// 1 or 2 for transverse modes, 0 for longitudinal, -1 for the gauge mode.
  int sigma = 1;
  /// Branch index for transverse modes (ascending omega), resonance index for
  /// longitudinal ones.
  std::size_t mu = 0;

  bool is_longitudinal() const { return kind == ModeKind::longitudinal; }
  bool is_physical() const { return kind != ModeKind::gauge; }
};

/// Eigenpairs of M, which is not hermitian although G M is. Unknowns are
/// ordered (Lambda, p_1, ..., p_N), each a 3-vector in 3D. Eigenvectors are
/// stored G-orthonormal, ascending in eigenvalue (omega^2).
struct EigenSystem {
  int dimension = 1;
  Eigen::Vector3d k_vector = Eigen::Vector3d::Zero();
  double k = 0.0;
  Eigen::MatrixXcd M;
  Eigen::VectorXd G;  ///< diagonal of the metric
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  std::vector<ModeClassification> modes;

  Eigen::MatrixXcd GM() const { return G.asDiagonal() * M; }
  /// ||GM - (GM)^H||_inf / ||GM||_inf.
  double hermiticity_residual() const;
  /// lambda^H G lambda over all eigenvector pairs.
  Eigen::MatrixXcd gram() const;
  std::size_t block_size() const { return dimension == 3 ? 3 : 1; }
};

EigenSystem build_1d(const MaterialSpec& spec, double k);
EigenSystem build_3d(const MaterialSpec& spec, const Eigen::Vector3d& k_vector);

/// Cross-product matrix: K a = k x a.
Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& k);
/// Longitudinal projector k k^T / |k|^2 applied to every 3-block.
Eigen::MatrixXd longitudinal_projector(const Eigen::Vector3d& k, std::size_t resonances);

/// Transverse unit vectors {u1, u2}: u1 = unit(k_hat x e_min) with e_min the
/// axis least parallel to k_hat, u2 = k_hat x u1.
std::array<Eigen::Vector3d, 2> polarization_basis(const Eigen::Vector3d& k_vector);

/// Splits degenerate eigenspaces of a 3D system into gauge, longitudinal and
/// transverse modes, rotating eigenvectors in place so that transverse mode
/// sigma has its field along u_sigma. build_3d already calls this.
std::vector<ModeClassification> classify_modes(EigenSystem& es);

struct NormalizationCheck {
  std::size_t column = 0;
  ModeClassification mode;
  double residual = 0.0;
};

/// For every physical mode, rescales the eigenvector to the quantized
/// amplitude and returns |c (lambda^H G lambda) omega / hbar - 1| where
/// c = 4 pi mu A in 1D and 2 (2 pi)^n mu A in 3D.
std::vector<NormalizationCheck> verify_normalization(const EigenSystem& es, const MaterialSpec& spec);

}  // namespace polariton
