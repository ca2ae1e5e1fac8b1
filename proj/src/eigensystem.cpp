#include "polariton/eigensystem.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "polariton/dispersion.hpp"
#include "polariton/error.hpp"
#include "polariton/mode_quantizer.hpp"
#include "jacobi.hpp"

namespace polariton {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

double inf_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

// Diagonalizes M through the hermitian matrix H = S M S^-1, S = G^(1/2).
void solve(EigenSystem& es) {
  const Eigen::VectorXd s = es.G.cwiseSqrt();
  Eigen::MatrixXcd h = s.asDiagonal() * es.M * s.cwiseInverse().asDiagonal();
  h = 0.5 * (h + h.adjoint()).eval();
  const auto solved = detail::jacobi_eigen(h);
  if (!solved.converged) throw Error(ErrorCode::DegenerateSpectrum, "Jacobi iteration did not converge");
  es.eigenvalues = solved.values;
  es.eigenvectors = s.cwiseInverse().asDiagonal() * solved.vectors;
}

// Rotates the phase so that entry `index` (or the largest entry when that one
// vanishes) is real and positive.
void fix_phase(Eigen::Ref<Eigen::VectorXcd> v, Eigen::Index index) {
  Eigen::Index pivot = index;
  if (std::abs(v(index)) <= 1e-12 * v.norm()) v.cwiseAbs().maxCoeff(&pivot);
  const cd z = v(pivot);
  if (std::abs(z) > 0.0) v *= std::conj(z) / std::abs(z);
}

Eigen::MatrixXd field_projector(std::size_t dim) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  f.topLeftCorner<3, 3>().setIdentity();
  return f;
}

// Orthonormal basis of the eigenvectors of the hermitian restriction V^H A V
// with eigenvalue above (upper = true) or below one half.
Eigen::MatrixXcd split(const Eigen::MatrixXcd& v, const Eigen::MatrixXd& a, bool upper) {
  if (v.cols() == 0) return v;
  Eigen::MatrixXcd r = v.adjoint() * a * v;
  r = 0.5 * (r + r.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    if ((solver.eigenvalues()(i) > 0.5) == upper) keep.push_back(i);
  Eigen::MatrixXcd out(v.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = v * solver.eigenvectors().col(keep[j]);
  return out;
}

}  // namespace

double EigenSystem::hermiticity_residual() const {
  const Eigen::MatrixXcd gm = GM();
  const double norm = inf_norm(gm);
  return norm > 0.0 ? inf_norm(gm - gm.adjoint()) / norm : 0.0;
}

Eigen::MatrixXcd EigenSystem::gram() const { return eigenvectors.adjoint() * G.asDiagonal() * eigenvectors; }

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& k) {
  Eigen::Matrix3d m;
  m << 0.0, -k(2), k(1), k(2), 0.0, -k(0), -k(1), k(0), 0.0;
  return m;
}

Eigen::MatrixXd longitudinal_projector(const Eigen::Vector3d& k, std::size_t resonances) {
  const Eigen::Index blocks = static_cast<Eigen::Index>(resonances) + 1;
  const Eigen::Vector3d khat = k.normalized();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(3 * blocks, 3 * blocks);
  for (Eigen::Index b = 0; b < blocks; ++b) p.block<3, 3>(3 * b, 3 * b) = khat * khat.transpose();
  return p;
}

std::array<Eigen::Vector3d, 2> polarization_basis(const Eigen::Vector3d& k_vector) {
  const double norm = k_vector.norm();
  if (!(norm > 0.0)) throw Error(ErrorCode::ZeroWaveVector, "polarization basis needs k != 0");
  const Eigen::Vector3d khat = k_vector / norm;
  Eigen::Index axis = 0;
  khat.cwiseAbs().minCoeff(&axis);
  const Eigen::Vector3d u1 = khat.cross(Eigen::Vector3d::Unit(axis)).normalized();
  return {u1, khat.cross(u1)};
}

EigenSystem build_1d(const MaterialSpec& spec, double k) {
  require_valid(spec);
  const auto n = static_cast<Eigen::Index>(spec.size());
  const double c = spec.units.c;
  EigenSystem es;
  es.dimension = 1;
  es.k = k;
  es.k_vector = Eigen::Vector3d(k, 0.0, 0.0);
  es.M = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  es.G = Eigen::VectorXd::Ones(n + 1);
  es.M(0, 0) = c * c * k * k;
  for (Eigen::Index nu = 0; nu < n; ++nu) {
    const auto& r = spec.resonances[static_cast<std::size_t>(nu)];
    es.M(0, nu + 1) = I * k * c * c;
    es.M(nu + 1, 0) = -I * k * r.g;
    es.M(nu + 1, nu + 1) = r.omega2_at(k);
    es.G(nu + 1) = c * c / r.g;
  }
  solve(es);
  for (Eigen::Index j = 0; j <= n; ++j) {
    fix_phase(es.eigenvectors.col(j), 0);
    es.modes.push_back({ModeKind::transverse, 1, static_cast<std::size_t>(j)});
  }
  return es;
}

EigenSystem build_3d(const MaterialSpec& spec, const Eigen::Vector3d& k_vector) {
  require_valid(spec);
  const double k = k_vector.norm();
  if (!(k > 0.0)) throw Error(ErrorCode::ZeroWaveVector, "3D system needs a nonzero k vector");
  const auto n = static_cast<Eigen::Index>(spec.size());
  const double c = spec.units.c;
  const Eigen::Matrix3cd kx = cross_matrix(k_vector).cast<cd>();

  EigenSystem es;
  es.dimension = 3;
  es.k = k;
  es.k_vector = k_vector;
  const Eigen::Index dim = 3 * (n + 1);
  es.M = Eigen::MatrixXcd::Zero(dim, dim);
  es.G = Eigen::VectorXd::Ones(dim);
  es.M.topLeftCorner<3, 3>() = Eigen::Matrix3cd::Identity() * (c * c * k * k);
  for (Eigen::Index nu = 0; nu < n; ++nu) {
    const auto& r = spec.resonances[static_cast<std::size_t>(nu)];
    const Eigen::Index o = 3 * (nu + 1);
    es.M.block<3, 3>(0, o) = -I * c * c * kx;
    es.M.block<3, 3>(o, 0) = -I * r.g * kx;
    es.M.block<3, 3>(o, o) = Eigen::Matrix3cd::Identity() * r.omega2_at(k);
    es.G.segment<3>(o).setConstant(c * c / r.g);
  }
  solve(es);
  classify_modes(es);
  return es;
}

std::vector<ModeClassification> classify_modes(EigenSystem& es) {
  if (es.dimension != 3) throw Error(ErrorCode::UnsupportedDimension, "mode classification is defined in 3D");
  const Eigen::Index dim = es.M.rows();
  const std::size_t resonances = static_cast<std::size_t>(dim / 3 - 1);
  const Eigen::VectorXd s = es.G.cwiseSqrt();
  const Eigen::MatrixXcd y = s.asDiagonal() * es.eigenvectors;  // orthonormal columns

  const Eigen::Vector3d khat = es.k_vector.normalized();
  const auto basis = polarization_basis(es.k_vector);
  const Eigen::MatrixXd p_long = longitudinal_projector(es.k_vector, resonances);
  const Eigen::MatrixXd p_field = field_projector(static_cast<std::size_t>(dim));
  Eigen::MatrixXd block_index = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) block_index(i, i) = static_cast<double>(i / 3);

  const double tol = 1e-9 * std::max(es.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::MatrixXcd out(dim, dim);
  std::vector<ModeClassification> modes;
  Eigen::Index col = 0;
  std::size_t branch = 0;
  auto emit = [&](const Eigen::VectorXcd& v, ModeClassification m) {
    out.col(col++) = v;
    modes.push_back(m);
  };

  for (Eigen::Index start = 0; start < dim;) {
    Eigen::Index end = start + 1;
    while (end < dim && es.eigenvalues(end) - es.eigenvalues(end - 1) <= tol) ++end;
    const Eigen::MatrixXcd cluster = y.middleCols(start, end - start);

    const Eigen::MatrixXcd along = split(cluster, p_long, true);
    const Eigen::MatrixXcd gauge = split(along, p_field, true);
    const Eigen::MatrixXcd longitudinal = split(along, p_field, false);
    const Eigen::MatrixXcd transverse = split(cluster, p_long, false);

    for (Eigen::Index j = 0; j < gauge.cols(); ++j) {
      Eigen::VectorXcd v = gauge.col(j);
      const cd lambda = khat.cast<cd>().dot(v.head<3>());
      if (std::abs(lambda) > 0.0) v *= std::conj(lambda) / std::abs(lambda);
      emit(v, {ModeKind::gauge, -1, 0});
    }

    if (longitudinal.cols() > 0) {
      // Separate coinciding resonances by the block each vector lives in.
      Eigen::MatrixXcd r = longitudinal.adjoint() * block_index * longitudinal;
      r = 0.5 * (r + r.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r);
      for (Eigen::Index j = 0; j < longitudinal.cols(); ++j) {
        Eigen::VectorXcd v = longitudinal * solver.eigenvectors().col(j);
        Eigen::Index block = 1;
        double best = -1.0;
        for (Eigen::Index b = 1; b < dim / 3; ++b)
          if (v.segment<3>(3 * b).norm() > best) {
            best = v.segment<3>(3 * b).norm();
            block = b;
          }
        const cd pk = khat.cast<cd>().dot(v.segment<3>(3 * block));
        if (std::abs(pk) > 0.0) v *= std::conj(pk) / std::abs(pk);
        emit(v, {ModeKind::longitudinal, 0, static_cast<std::size_t>(block - 1)});
      }
    }

    if (transverse.cols() == 2) {
      Eigen::Matrix2cd t;
      for (int sigma = 0; sigma < 2; ++sigma)
        for (int j = 0; j < 2; ++j) t(sigma, j) = basis[static_cast<std::size_t>(sigma)].cast<cd>().dot(transverse.col(j).head<3>());
      Eigen::JacobiSVD<Eigen::Matrix2cd> svd(t);
      const auto sv = svd.singularValues();
      if (!(sv(1) > 1e-10 * sv(0)))
        throw Error(ErrorCode::DegenerateAmbiguity, "transverse pair has no resolvable field component");
      const Eigen::MatrixXcd aligned = transverse * t.inverse();
      Eigen::VectorXcd x1 = aligned.col(0).normalized();
      Eigen::VectorXcd x2 = aligned.col(1) - x1 * x1.dot(aligned.col(1));
      if (x2.norm() < 1e-6 * aligned.col(1).norm())
        throw Error(ErrorCode::DegenerateAmbiguity, "transverse pair cannot be orthogonalized");
      x2.normalize();
      emit(x1, {ModeKind::transverse, 1, branch});
      emit(x2, {ModeKind::transverse, 2, branch});
      ++branch;
    } else if (transverse.cols() != 0) {
      throw Error(ErrorCode::DegenerateAmbiguity,
                  "transverse eigenspace of dimension " + std::to_string(transverse.cols()) + " at one eigenvalue");
    }
    start = end;
  }

  std::size_t n_gauge = 0, n_long = 0;
  for (const auto& m : modes) {
    n_gauge += m.kind == ModeKind::gauge;
    n_long += m.kind == ModeKind::longitudinal;
  }
  if (col != dim || n_gauge != 1 || n_long != resonances || branch != resonances + 1)
    throw Error(ErrorCode::DegenerateAmbiguity, "mode counts do not match 1 gauge + N longitudinal + 2(N+1) transverse");

  // Rotations only mixed columns within a cluster, so the eigenvalues stay put.
  es.eigenvectors = s.cwiseInverse().asDiagonal() * out;
  es.modes = modes;
  return modes;
}

std::vector<NormalizationCheck> verify_normalization(const EigenSystem& es, const MaterialSpec& spec) {
  const auto& u = spec.units;
  std::vector<NormalizationCheck> out;
  if (es.dimension == 1) {
    const auto branches = solve_branches(spec, es.k);
    for (Eigen::Index j = 0; j < es.eigenvectors.cols(); ++j) {
      const auto& bp = branches[static_cast<std::size_t>(j)];
      const double lambda = mode_coefficients_1d(spec, bp).Lambda;
      const double metric = lambda * lambda / std::norm(es.eigenvectors(0, j));
      const double lhs = 4.0 * std::numbers::pi * u.mu * u.area * metric * bp.omega;
      out.push_back({static_cast<std::size_t>(j), es.modes[static_cast<std::size_t>(j)], std::abs(lhs / u.hbar - 1.0)});
    }
    return out;
  }

  if (u.dimension != 3) throw Error(ErrorCode::UnsupportedDimension, "3D normalization needs dimension = 3");
  const Eigen::Vector3d khat = es.k_vector.normalized();
  const auto basis = polarization_basis(es.k_vector);
  const auto branches = solve_branches(spec, es.k);
  const double prefactor = 2.0 * std::pow(2.0 * std::numbers::pi, 3) * u.mu * u.area;
  for (Eigen::Index j = 0; j < es.eigenvectors.cols(); ++j) {
    const auto& mode = es.modes[static_cast<std::size_t>(j)];
    if (!mode.is_physical()) continue;
    const Eigen::VectorXcd v = es.eigenvectors.col(j);
    double metric = 0.0, omega = 0.0;
    if (mode.is_longitudinal()) {
      BranchPoint at_k;
      at_k.k = es.k;
      at_k.branch = mode.mu;
      const auto coeffs = mode_coefficients_3d(spec, at_k, 0, khat);
      const cd numeric = khat.cast<cd>().dot(v.segment<3>(3 * static_cast<Eigen::Index>(mode.mu + 1)));
      metric = std::norm(coeffs.p[mode.mu]) / std::norm(numeric);
      omega = coeffs.omega;
    } else {
      const auto& bp = branches[mode.mu];
      const auto coeffs = mode_coefficients_3d(spec, bp, mode.sigma, khat);
      const cd numeric = basis[static_cast<std::size_t>(mode.sigma - 1)].cast<cd>().dot(v.head<3>());
      metric = coeffs.Lambda * coeffs.Lambda / std::norm(numeric);
      omega = bp.omega;
    }
    out.push_back({static_cast<std::size_t>(j), mode, std::abs(prefactor * metric * omega / u.hbar - 1.0)});
  }
  return out;
}

}  // namespace polariton
