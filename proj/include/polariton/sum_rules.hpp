#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "polariton/material.hpp"
#include "polariton/polynomial.hpp"

namespace polariton {

/// Which power of omega_mu multiplies (omega_mu^2 - W_nu) in the S3 sum. The
/// single power is the consistent one; the squared form exists only as a
/// diagnostic and does not vanish.
enum class S3Form { single_power, squared };

/// sum_mu k v_mu / omega_mu; equals 1.
double condition_I(const MaterialSpec& spec, double k);
/// S2(nu, nu') = sum_mu c^2 k^3 v_mu g_nu' / [omega_mu (omega_mu^2 - W_nu)(omega_mu^2 - W_nu')]; equals identity.
Eigen::MatrixXd condition_II(const MaterialSpec& spec, double k);
/// S3(nu) = sum_mu k v_mu / [omega_mu (omega_mu^2 - W_nu)]; equals zero.
Eigen::VectorXd condition_V(const MaterialSpec& spec, double k, S3Form form = S3Form::single_power);

struct SumRuleReport {
  double k = 0.0;
  double s1 = 0.0;
  Eigen::MatrixXd s2;
  Eigen::VectorXd s3;
  /// sum of residues of f1 at the dispersion roots, from the factored rational function.
  double residue_s1 = 0.0;
  double max_abs_residual = 0.0;
  /// max |S3| with the squared omega power.
  double erratum_variant_s3 = 0.0;

  double s2_max_offdiag() const;
  double s2_max_diag_err() const;
  double s3_max() const;
  bool pass(double tolerance) const { return max_abs_residual < tolerance; }
};

SumRuleReport sum_rule_report(const MaterialSpec& spec, double k);

struct Pole {
  double z = 0.0;
  int order = 1;
};

/// Real rational function held two ways:
///   monomial:  f(z) = gain * num(z/scale) / den(z/scale)
///   factored:  f(z) = factored_gain * prod (z - zeros_j) / prod (z - poles_i)^m_i
/// The factored form gives accurate residues; the monomial form is the
/// independent path used for contour integration.
struct RationalFn {
  double scale = 1.0;
  double gain = 1.0;
  Polynomial num;
  Polynomial den;
  double factored_gain = 1.0;
  std::vector<double> zeros;
  std::vector<Pole> poles;

  int decay_order() const { return den.degree() - num.degree(); }
  std::complex<double> operator()(std::complex<double> z) const;
  double factored(double z) const;
};

/// kappa a(z) / (z [b(z) - kappa a(z)]).
RationalFn build_f1(const MaterialSpec& spec, double k);
/// kappa g_nu' f1(z) / ((z - W_nu)(z - W_nu')); double pole at W_nu when nu == nu'.
RationalFn build_f2(const MaterialSpec& spec, double k, std::size_t nu, std::size_t nu_prime);
/// f1(z) / (z - W_nu).
RationalFn build_f3(const MaterialSpec& spec, double k, std::size_t nu);

/// Residue at each pole of fn, in pole order.
std::vector<double> residues(const RationalFn& fn);

struct ResidueSum {
  std::vector<double> residues;
  double sum = 0.0;
  /// sum |residue|, the scale against which `sum` should be judged.
  double magnitude = 0.0;
  /// |contour integral| / 2 pi on the circle |z| = radius.
  double contour = 0.0;
  double radius = 0.0;
};

/// Sums all residues and, independently, integrates fn around |z| = radius
/// (default 10 max |pole|) with the trapezoid rule.
ResidueSum residue_sum_check(const RationalFn& fn, std::optional<double> radius = std::nullopt, int nodes = 256);

/// Closed-form two-branch solution for one resonance; index 0 is the lower branch.
struct SingleOscillator {
  double delta = 0.0;
  std::array<double, 2> z{};
  std::array<double, 2> omega{};
  std::array<double, 2> kv_over_omega{};
  std::array<double, 2> v{};
};

SingleOscillator single_oscillator_oracle(double omega2, double g, double c, double k);

}  // namespace polariton
