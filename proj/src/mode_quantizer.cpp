#include "polariton/mode_quantizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polariton/eigensystem.hpp"
#include "polariton/error.hpp"
#include "polariton/sweep.hpp"

namespace polariton {

namespace {

constexpr complex I{0.0, 1.0};

std::vector<double> detunings(const MaterialSpec& spec, const BranchPoint& point) {
  std::vector<double> d = point.detuning;
  if (d.size() != spec.size()) {
    d = spec.omega2_at(point.k);
    for (auto& x : d) x -= point.z;
  }
  for (std::size_t nu = 0; nu < d.size(); ++nu)
    if (d[nu] == 0.0) throw Error(ErrorCode::OnResonance, "omega^2 coincides with resonance " + std::to_string(nu));
  return d;
}

// Fills every coefficient that follows from Lambda for a transverse mode.
void fill_transverse(const MaterialSpec& spec, const BranchPoint& point, double lambda, ModeCoefficients& m) {
  const auto& u = spec.units;
  const auto d = detunings(spec, point);
  const double k = point.k;
  m.Lambda = lambda;
  m.Pi = -I * m.omega * u.mu * lambda;
  m.p.resize(spec.size());
  m.pi.resize(spec.size());
  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    m.p[nu] = I * k * spec.resonances[nu].g * lambda / d[nu];
    m.pi[nu] = k * m.omega * lambda / (u.eps0 * d[nu]);
  }
  m.D = I * k * lambda;
  m.E = m.D / m.eps_branch;
  m.B = m.Pi;
}

void require_k(const BranchPoint& point) {
  if (point.k == 0.0 || !(point.z > 0.0))
    throw Error(ErrorCode::InvalidArgument, "mode coefficients need a solved branch point with k != 0");
}

}  // namespace

ModeCoefficients mode_coefficients_1d(const MaterialSpec& spec, const BranchPoint& point) {
  require_k(point);
  const auto& u = spec.units;
  ModeCoefficients m;
  m.branch = point.branch;
  m.k = point.k;
  m.omega = point.omega;
  m.v = point.v_group;
  m.v_em = point.v_em;
  m.eps_branch = u.c * u.c * point.k * point.k * u.eps0 / point.z;
  const double lambda2 = u.hbar * (point.v_em / point.k) * m.eps_branch / (4.0 * std::numbers::pi * u.area);
  fill_transverse(spec, point, std::sqrt(lambda2), m);
  return m;
}

ModeCoefficients mode_coefficients_3d(const MaterialSpec& spec, const BranchPoint& point, int sigma,
                                      const Eigen::Vector3d& k_hat) {
  const auto& u = spec.units;
  if (u.dimension != 3) throw Error(ErrorCode::UnsupportedDimension, "3D coefficients need dimension = 3");
  if (sigma == -1) throw Error(ErrorCode::UnphysicalMode, "the gauge mode carries no physical coefficients");
  if (sigma < 0 || sigma > 2) throw Error(ErrorCode::InvalidArgument, "sigma must be 0, 1 or 2");
  const double volume = std::pow(2.0 * std::numbers::pi, 3);
  const Eigen::Vector3d khat = k_hat.normalized();

  ModeCoefficients m;
  m.branch = point.branch;
  m.sigma = sigma;
  m.k = point.k;

  if (sigma == 0) {
    if (point.branch >= spec.size()) throw Error(ErrorCode::InvalidArgument, "longitudinal mode index out of range");
    const auto& r = spec.resonances[point.branch];
    const double w = r.omega2_at(point.k);
    m.omega = std::sqrt(w);
    m.v = r.alpha * point.k / m.omega;
    m.u = khat;
    m.e = khat;
    m.p.assign(spec.size(), 0.0);
    m.pi.assign(spec.size(), 0.0);
    const double amplitude = std::sqrt(u.hbar * r.g * u.eps0 / (2.0 * u.area * volume * m.omega));
    m.p[point.branch] = amplitude;
    m.pi[point.branch] = -I * m.omega * amplitude / (r.g * u.eps0);
    m.E = -amplitude / u.eps0;
    return m;
  }

  require_k(point);
  const auto basis = polarization_basis(khat);
  m.u = basis[static_cast<std::size_t>(sigma - 1)];
  m.e = khat.cross(m.u);
  m.omega = point.omega;
  m.v = point.v_group;
  m.v_em = point.v_em;
  m.eps_branch = u.c * u.c * point.k * point.k * u.eps0 / point.z;
  const double lambda2 = u.hbar * (point.v_em / point.k) * m.eps_branch / (2.0 * u.area * volume);
  fill_transverse(spec, point, std::sqrt(lambda2), m);
  return m;
}

complex field_expansion_coefficient(const MaterialSpec& spec, const BranchPoint& point, Field field, int sigma) {
  if (refractive_index_sq(spec, point.omega, point.k) < 0.0)
    throw Error(ErrorCode::ForbiddenBand, "omega lies in a forbidden band");
  const auto m = spec.units.dimension == 3 ? mode_coefficients_3d(spec, point, sigma)
                                           : mode_coefficients_1d(spec, point);
  switch (field) {
    case Field::D: return m.D;
    case Field::E: return m.E;
    case Field::B: return m.B;
  }
  return {};
}

double frequency_domain_rescale(const BranchPoint& point) {
  if (point.v_group == 0.0 || !std::isfinite(point.v_group))
    throw Error(ErrorCode::ZeroGroupVelocity, "group velocity vanishes");
  return 1.0 / std::sqrt(std::abs(point.v_group));
}

double GaussianTest::operator()(double x) const {
  const double t = (x - center) / width;
  return std::exp(-0.5 * t * t);
}

double GaussianTest::derivative(double x) const { return -(x - center) / (width * width) * (*this)(x); }

KernelSample kernel_reconstruction(const MaterialSpec& spec, KernelPair pair, const GaussianTest& test, double x0,
                                   double cutoff, const KernelOptions& options) {
  require_valid(spec);
  if (!(cutoff > 0.0) || !(test.width > 0.0))
    throw Error(ErrorCode::InvalidArgument, "cutoff and test-function width must be positive");
  const double tail = std::exp(-0.5 * cutoff * cutoff * test.width * test.width);
  if (tail > 1e-6)
    throw Error(ErrorCode::CutoffTooSmall, "test-function spectrum at the cutoff is " + std::to_string(tail) +
                                               " of its peak");
  const bool needs_nu = pair == KernelPair::p_pi || pair == KernelPair::lambda_pi_nu;
  if (needs_nu && (options.nu >= spec.size() || (pair == KernelPair::p_pi && options.nu_prime >= spec.size())))
    throw Error(ErrorCode::InvalidArgument, "resonance index out of range");

  const double s = test.width;
  const double shift = x0 - test.center;
  // Im[c(k) W(k)], where c = sum over branches of a b* and W is the Fourier
  // weight of the test function seen from x0.
  auto integrand = [&](double k) {
    complex c = 0.0;
    for (const auto& bp : solve_branches(spec, k)) {
      const auto m = mode_coefficients_1d(spec, bp);
      switch (pair) {
        case KernelPair::lambda_pi: c += m.Lambda * std::conj(m.Pi); break;
        case KernelPair::p_pi: c += m.p[options.nu] * std::conj(m.pi[options.nu_prime]); break;
        case KernelPair::lambda_pi_nu: c += m.Lambda * std::conj(m.pi[options.nu]); break;
        case KernelPair::d_b: c += m.D * std::conj(m.B); break;
      }
    }
    const complex w = s * std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * k * k * s * s) *
                      std::exp(I * k * shift);
    return (c * w).imag();
  };

  // The integrand is even in k, so [-K, K] folds onto [0, K]. The sliver
  // [0, k_min] is taken as a rectangle since the lowest branch degenerates at k = 0.
  const double k_min = 1e-8 * cutoff;
  // Cross pairs cancel between branches, so the tolerance is tied to the
  // size of the target rather than to the integrand.
  const double floor = 0.25 * spec.units.hbar / spec.units.area;
  double integral = integrate_panels(integrand, k_min, cutoff, options.panels, options.rel_tol,
                                     options.parallel ? Execution::parallel : Execution::serial, floor);
  integral += k_min * integrand(k_min);

  KernelSample out;
  out.x0 = x0;
  out.cutoff = cutoff;
  out.value = I * 4.0 * integral;
  const complex unit = I * spec.units.hbar / spec.units.area;
  switch (pair) {
    case KernelPair::lambda_pi: out.target = unit * test(x0); break;
    case KernelPair::p_pi: out.target = options.nu == options.nu_prime ? unit * test(x0) : complex{}; break;
    case KernelPair::lambda_pi_nu: out.target = 0.0; break;
    case KernelPair::d_b: out.target = unit * test.derivative(x0); break;
  }
  return out;
}

}  // namespace polariton
