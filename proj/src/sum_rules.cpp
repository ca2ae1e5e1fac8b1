#include "polariton/sum_rules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polariton/dispersion.hpp"
#include "polariton/error.hpp"

namespace polariton {

namespace {

// k v / omega per branch, with the resonances frozen at their value at k.
std::vector<double> kv_over_omega(const std::vector<BranchPoint>& branches) {
  std::vector<double> out;
  out.reserve(branches.size());
  for (const auto& b : branches) out.push_back(b.k * b.v_em / b.omega);
  return out;
}

Eigen::VectorXd s3_from(const MaterialSpec& spec, const std::vector<BranchPoint>& branches, S3Form form) {
  const auto ratio = kv_over_omega(branches);
  Eigen::VectorXd s3 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.size()));
  for (std::size_t nu = 0; nu < spec.size(); ++nu)
    for (std::size_t mu = 0; mu < branches.size(); ++mu) {
      double term = -ratio[mu] / branches[mu].detuning[nu];
      if (form == S3Form::squared) term /= branches[mu].omega;
      s3(static_cast<Eigen::Index>(nu)) += term;
    }
  return s3;
}

Eigen::MatrixXd s2_from(const MaterialSpec& spec, const std::vector<BranchPoint>& branches) {
  const auto ratio = kv_over_omega(branches);
  const auto n = static_cast<Eigen::Index>(spec.size());
  Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(n, n);
  if (branches.empty()) return s2;
  const double c = spec.units.c;
  const double kappa = c * c * branches.front().k * branches.front().k;
  for (Eigen::Index nu = 0; nu < n; ++nu)
    for (Eigen::Index nup = 0; nup < n; ++nup) {
      const double g = spec.resonances[static_cast<std::size_t>(nup)].g;
      double sum = 0.0;
      for (std::size_t mu = 0; mu < branches.size(); ++mu) {
        const auto& d = branches[mu].detuning;
        sum += kappa * ratio[mu] * g / (d[static_cast<std::size_t>(nu)] * d[static_cast<std::size_t>(nup)]);
      }
      s2(nu, nup) = sum;
    }
  return s2;
}

struct F1Parts {
  double kappa = 0.0;
  double scale = 1.0;
  std::vector<double> w;  // omega2_nu(k)
  std::vector<double> roots;
  std::vector<double> zeros;
  Polynomial num;
  Polynomial den;
};

F1Parts f1_parts(const MaterialSpec& spec, double k) {
  const auto branches = solve_branches(spec, k);
  F1Parts parts;
  const double c = spec.units.c;
  parts.kappa = c * c * k * k;
  parts.w = spec.omega2_at(k);
  parts.scale = parts.kappa;
  for (double w : parts.w) parts.scale = std::max(parts.scale, w);
  for (const auto& b : branches) parts.roots.push_back(b.z);

  MaterialSpec frozen = spec;
  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    frozen.resonances[nu].omega2 = parts.w[nu];
    frozen.resonances[nu].alpha = 0.0;
  }
  parts.zeros = multipolar_to_sellmeir(frozen).poles;

  // a, b and p in w = z / scale, each divided by the matching power of scale.
  const double s = parts.scale;
  Polynomial full = Polynomial::constant(1.0);
  for (double w : parts.w) full = full * Polynomial::shifted_root(w / s);
  Polynomial a = full;
  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    Polynomial others = Polynomial::constant(spec.resonances[nu].g / s);
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (j != nu) others = others * Polynomial::shifted_root(parts.w[j] / s);
    a -= others;
  }
  const Polynomial b = Polynomial::identity() * full;
  const Polynomial p = b - (parts.kappa / s) * a;
  parts.num = a;
  parts.den = Polynomial::identity() * p;
  return parts;
}

RationalFn f1_from(const F1Parts& parts) {
  RationalFn fn;
  fn.scale = parts.scale;
  fn.gain = parts.kappa / (parts.scale * parts.scale);
  fn.num = parts.num;
  fn.den = parts.den;
  fn.factored_gain = parts.kappa;
  fn.zeros = parts.zeros;
  fn.poles.push_back({0.0, 1});
  for (double z : parts.roots) fn.poles.push_back({z, 1});
  return fn;
}

void check_index(const MaterialSpec& spec, std::size_t nu) {
  if (nu >= spec.size()) throw Error(ErrorCode::InvalidArgument, "resonance index out of range");
}

}  // namespace

double condition_I(const MaterialSpec& spec, double k) {
  double sum = 0.0;
  for (double r : kv_over_omega(solve_branches(spec, k))) sum += r;
  return sum;
}

Eigen::MatrixXd condition_II(const MaterialSpec& spec, double k) { return s2_from(spec, solve_branches(spec, k)); }

Eigen::VectorXd condition_V(const MaterialSpec& spec, double k, S3Form form) {
  return s3_from(spec, solve_branches(spec, k), form);
}

double SumRuleReport::s2_max_offdiag() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < s2.rows(); ++i)
    for (Eigen::Index j = 0; j < s2.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(s2(i, j)));
  return m;
}

double SumRuleReport::s2_max_diag_err() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < s2.rows(); ++i) m = std::max(m, std::abs(s2(i, i) - 1.0));
  return m;
}

double SumRuleReport::s3_max() const { return s3.size() ? s3.cwiseAbs().maxCoeff() : 0.0; }

SumRuleReport sum_rule_report(const MaterialSpec& spec, double k) {
  const auto branches = solve_branches(spec, k);
  SumRuleReport r;
  r.k = k;
  for (double x : kv_over_omega(branches)) r.s1 += x;
  r.s2 = s2_from(spec, branches);
  r.s3 = s3_from(spec, branches, S3Form::single_power);
  const Eigen::VectorXd erratum = s3_from(spec, branches, S3Form::squared);
  r.erratum_variant_s3 = erratum.size() ? erratum.cwiseAbs().maxCoeff() : 0.0;

  const auto res = residues(build_f1(spec, k));
  for (std::size_t i = 1; i < res.size(); ++i) r.residue_s1 += res[i];

  const auto n = r.s2.rows();
  const double s2_err = n ? (r.s2 - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  r.max_abs_residual = std::max({std::abs(r.s1 - 1.0), s2_err, r.s3_max()});
  return r;
}

std::complex<double> RationalFn::operator()(std::complex<double> z) const {
  const std::complex<double> w = z / scale;
  return gain * num(w) / den(w);
}

double RationalFn::factored(double z) const {
  double v = factored_gain;
  for (double zero : zeros) v *= z - zero;
  for (const auto& p : poles) v /= std::pow(z - p.z, p.order);
  return v;
}

RationalFn build_f1(const MaterialSpec& spec, double k) { return f1_from(f1_parts(spec, k)); }

RationalFn build_f2(const MaterialSpec& spec, double k, std::size_t nu, std::size_t nu_prime) {
  check_index(spec, nu);
  check_index(spec, nu_prime);
  const auto parts = f1_parts(spec, k);
  auto fn = f1_from(parts);
  const double g = spec.resonances[nu_prime].g;
  const double s = parts.scale;
  fn.gain *= parts.kappa * g / (s * s);
  fn.factored_gain *= parts.kappa * g;
  fn.den = fn.den * Polynomial{-parts.w[nu] / s, 1.0} * Polynomial{-parts.w[nu_prime] / s, 1.0};
  if (nu == nu_prime) {
    fn.poles.push_back({parts.w[nu], 2});
  } else {
    fn.poles.push_back({parts.w[nu], 1});
    fn.poles.push_back({parts.w[nu_prime], 1});
  }
  return fn;
}

RationalFn build_f3(const MaterialSpec& spec, double k, std::size_t nu) {
  check_index(spec, nu);
  const auto parts = f1_parts(spec, k);
  auto fn = f1_from(parts);
  fn.gain /= parts.scale;
  fn.den = fn.den * Polynomial{-parts.w[nu] / parts.scale, 1.0};
  fn.poles.push_back({parts.w[nu], 1});
  return fn;
}

std::vector<double> residues(const RationalFn& fn) {
  std::vector<double> out;
  out.reserve(fn.poles.size());
  for (std::size_t i = 0; i < fn.poles.size(); ++i) {
    const double zi = fn.poles[i].z;
    double rest = 1.0;        // prod_{j != i} (zi - zj)^mj
    double log_slope = 0.0;   // sum_{j != i} mj / (zi - zj)
    for (std::size_t j = 0; j < fn.poles.size(); ++j) {
      if (j == i) continue;
      const double d = zi - fn.poles[j].z;
      rest *= std::pow(d, fn.poles[j].order);
      log_slope += fn.poles[j].order / d;
    }
    double numer = 1.0;
    double numer_slope = 0.0;  // derivative of prod (z - zero)
    for (std::size_t j = 0; j < fn.zeros.size(); ++j) {
      double others = 1.0;
      for (std::size_t l = 0; l < fn.zeros.size(); ++l)
        if (l != j) others *= zi - fn.zeros[l];
      numer_slope += others;
      numer *= zi - fn.zeros[j];
    }
    switch (fn.poles[i].order) {
      case 1: out.push_back(fn.factored_gain * numer / rest); break;
      case 2: out.push_back(fn.factored_gain * (numer_slope - numer * log_slope) / rest); break;
      default: throw Error(ErrorCode::InvalidArgument, "poles of order > 2 are not supported");
    }
  }
  return out;
}

ResidueSum residue_sum_check(const RationalFn& fn, std::optional<double> radius, int nodes) {
  if (fn.decay_order() < 2) throw Error(ErrorCode::InvalidArgument, "residue sum needs decay order >= 2");
  if (nodes < 8) throw Error(ErrorCode::InvalidArgument, "too few contour nodes");
  ResidueSum out;
  double max_pole = 0.0;
  for (const auto& p : fn.poles) max_pole = std::max(max_pole, std::abs(p.z));
  out.radius = radius.value_or(10.0 * (max_pole > 0.0 ? max_pole : 1.0));
  for (const auto& p : fn.poles)
    if (std::abs(std::abs(p.z) - out.radius) < 1e-6 * out.radius)
      throw Error(ErrorCode::PoleOnContour, "pole at " + std::to_string(p.z) + " lies on the contour");

  out.residues = residues(fn);
  for (double r : out.residues) {
    out.sum += r;
    out.magnitude += std::abs(r);
  }

  // (1 / 2 pi i) closed integral of f dz = mean of f(z_j) z_j over equispaced nodes.
  std::complex<double> acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 0.5) / nodes;
    const std::complex<double> z = std::polar(out.radius, theta);
    acc += fn(z) * z;
  }
  out.contour = std::abs(acc) / nodes;
  return out;
}

SingleOscillator single_oscillator_oracle(double omega2, double g, double c, double k) {
  if (!(g > 0.0) || !(omega2 > g))
    throw Error(ErrorCode::InvalidMaterial, "single oscillator needs omega2 > g > 0");
  if (k == 0.0) throw Error(ErrorCode::InvalidArgument, "single oscillator oracle needs k != 0");
  const double kappa = c * c * k * k;
  SingleOscillator s;
  s.delta = std::sqrt((kappa - omega2) * (kappa - omega2) + 4.0 * kappa * g);
  s.z[1] = 0.5 * (kappa + omega2 + s.delta);
  s.z[0] = kappa * (omega2 - g) / s.z[1];

  // Delta -/+ r without cancellation, using (Delta - r)(Delta + r) = 4 g (omega2 - g).
  const double r = kappa - omega2 + 2.0 * g;
  const double product = 4.0 * g * (omega2 - g);
  const double minus = r >= 0.0 ? product / (s.delta + r) : s.delta - r;
  const double plus = r >= 0.0 ? s.delta + r : product / (s.delta - r);
  s.kv_over_omega[0] = 0.5 * kappa / s.z[0] * minus / s.delta;
  s.kv_over_omega[1] = 0.5 * kappa / s.z[1] * plus / s.delta;
  for (std::size_t i = 0; i < 2; ++i) {
    s.omega[i] = std::sqrt(s.z[i]);
    s.v[i] = s.kv_over_omega[i] * s.omega[i] / k;
  }
  return s;
}

}  // namespace polariton
