#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "polariton/dispersion.hpp"
#include "polariton/material.hpp"

namespace polariton {

using complex = std::complex<double>;

/// Expansion coefficients of one quantized mode (branch mu, polarization
/// sigma, wavenumber k). In 3D the vector directions are `u` for Lambda and B,
/// `e` for p, pi, D and E; scalars are the components along them.
struct ModeCoefficients {
  std::size_t branch = 0;
  int sigma = 1;
  double k = 0.0;
  double omega = 0.0;
  double v = 0.0;     ///< total group velocity
  double v_em = 0.0;  ///< velocity entering the normalization
  double Lambda = 0.0;
  complex Pi;
  std::vector<complex> p;
  std::vector<complex> pi;
  /// c^2 k^2 eps0 / omega^2, the permittivity seen by this branch.
  double eps_branch = 0.0;
  complex D;
  complex E;
  complex B;
  Eigen::Vector3d u = Eigen::Vector3d::UnitX();
  Eigen::Vector3d e = Eigen::Vector3d::UnitY();
};

/// Lambda = [hbar v eps / (4 pi A |k|)]^(1/2), p_nu = i k g_nu Lambda / D_nu,
/// pi_nu = k omega Lambda / (eps0 D_nu), D = i k Lambda, E = D / eps, B = Pi.
ModeCoefficients mode_coefficients_1d(const MaterialSpec& spec, const BranchPoint& point);

/// sigma = 1, 2: transverse branch `point` with Lambda along u_sigma.
/// sigma = 0: longitudinal mode of resonance point.branch, polarization along
/// k_hat; `point` then only supplies k.
/// sigma = -1 (gauge) raises UnphysicalMode. Needs dimension 3.
ModeCoefficients mode_coefficients_3d(const MaterialSpec& spec, const BranchPoint& point, int sigma,
                                      const Eigen::Vector3d& k_hat = Eigen::Vector3d::UnitZ());

enum class Field { D, E, B };

/// Scalar amplitude of D, E or B for the mode (component along e or u in 3D).
complex field_expansion_coefficient(const MaterialSpec& spec, const BranchPoint& point, Field field, int sigma = 1);

/// 1 / sqrt|v|, converting a k-normalized mode operator to an omega-normalized one.
double frequency_domain_rescale(const BranchPoint& point);

enum class KernelPair { lambda_pi, p_pi, lambda_pi_nu, d_b };

/// Gaussian test function exp(-(x - center)^2 / (2 width^2)).
struct GaussianTest {
  double center = 0.0;
  double width = 1.0;

  double operator()(double x) const;
  double derivative(double x) const;
};

struct KernelOptions {
  std::size_t nu = 0;
  std::size_t nu_prime = 0;
  int panels = 64;
  double rel_tol = 1e-10;
  bool parallel = true;
};

struct KernelSample {
  double x0 = 0.0;
  double cutoff = 0.0;
  complex value;
  /// (i hbar / A) times f(x0), delta f(x0), 0 or f'(x0) depending on the pair.
  complex target;
};

/// Integrates the 1D equal-time commutator of the chosen field pair, summed
/// over branches and k in [-cutoff, cutoff], against the test function in x',
/// with the first field at x0.
KernelSample kernel_reconstruction(const MaterialSpec& spec, KernelPair pair, const GaussianTest& test, double x0,
                                   double cutoff, const KernelOptions& options = {});

}  // namespace polariton
