#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polariton/material.hpp"
#include "polariton/polynomial.hpp"

namespace polariton {

/// p(z) = b(z) - kappa a(z) with z = omega^2 and kappa = c^2 k^2, where
///   a(z) = prod (W_nu - z) - sum_nu g_nu prod_{nu' != nu} (W_nu' - z)
///   b(z) = z prod (W_nu - z)
/// and W_nu = omega2_nu(k).
struct CharPolynomial {
  double kappa = 0.0;
  std::vector<double> omega2_k;
  Polynomial a;
  Polynomial b;
  Polynomial p;

  /// |p(z)| relative to the rounding scale of Horner's rule at z.
  double residual(double z) const;
};

CharPolynomial char_polynomial(const MaterialSpec& spec, double k);

struct BranchPoint {
  std::size_t branch = 0;
  double k = 0.0;
  double omega = 0.0;
  double z = 0.0;
  /// Total slope d omega / dk, including the k-dependence of omega2_nu(k).
  double v_group = 0.0;
  /// Electromagnetic group velocity (resonances frozen at their value at k).
  double v_em = 0.0;
  /// omega2_nu(k) - z in resonance order, carried with full relative precision.
  std::vector<double> detuning;
  std::optional<int> sigma;
};

/// All N+1 branches at k, ascending in omega. k may be negative; omega is
/// even in k and the velocities are odd.
std::vector<BranchPoint> solve_branches(const MaterialSpec& spec, double k);

/// (omega/k) / (1 + kappa sum g / D^2). Requires alpha = 0.
double group_velocity(const MaterialSpec& spec, const BranchPoint& point);
/// Same expression with D = omega2_nu(k) - omega^2; valid for any alpha.
double em_group_velocity(const MaterialSpec& spec, const BranchPoint& point);
/// d omega_mu / dk by implicit differentiation. Defined at k = 0 as its limit.
double total_group_velocity(const MaterialSpec& spec, std::size_t branch, double k);

/// (+k, -k) with k = omega n(omega) / c. Requires alpha = 0.
std::pair<double, double> k_of_omega(const MaterialSpec& spec, double omega);

struct ForbiddenBand {
  double omega_lo = 0.0;
  double omega_hi = 0.0;
};

/// The N intervals (shifted pole, bare pole) where n^2 < 0. Requires alpha = 0.
std::vector<ForbiddenBand> forbidden_bands(const MaterialSpec& spec);

/// d^2 k / d omega^2, differentiated analytically from n^2(omega). Requires alpha = 0.
double beta2(const MaterialSpec& spec, double omega);

/// Sign changes of beta2 inside the finite transmission bands (below the first
/// forbidden band and between consecutive ones), each refined by bisection.
std::vector<double> zero_dispersion_points(const MaterialSpec& spec);

}  // namespace polariton
