#include "polariton/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "polariton/error.hpp"
#include "pole_roots.hpp"

namespace polariton {

double CharPolynomial::residual(double z) const {
  const double scale = p.magnitude_at(z);
  return scale > 0.0 ? std::abs(p(z)) / scale : 0.0;
}

CharPolynomial char_polynomial(const MaterialSpec& spec, double k) {
  CharPolynomial cp;
  const double c = spec.units.c;
  cp.kappa = c * c * k * k;
  cp.omega2_k = spec.omega2_at(k);

  Polynomial full = Polynomial::constant(1.0);
  for (double w : cp.omega2_k) full = full * Polynomial::shifted_root(w);

  Polynomial a = full;
  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    Polynomial others = Polynomial::constant(spec.resonances[nu].g);
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (j != nu) others = others * Polynomial::shifted_root(cp.omega2_k[j]);
    a -= others;
  }
  cp.a = a;
  cp.b = Polynomial::identity() * full;
  cp.p = cp.b - cp.kappa * cp.a;
  return cp;
}

namespace {

struct Velocities {
  double em = 0.0;
  double total = 0.0;
};

Velocities velocities(const MaterialSpec& spec, double k, double omega, const std::vector<double>& detuning) {
  const double c = spec.units.c;
  const double kappa = c * c * k * k;
  double s = 0.0, s_alpha = 0.0;
  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    const double d = detuning[nu];
    if (d == 0.0) throw Error(ErrorCode::OnResonance, "omega^2 coincides with resonance " + std::to_string(nu));
    const double w = spec.resonances[nu].g / (d * d);
    s += w;
    s_alpha += w * spec.resonances[nu].alpha;
  }
  if (!std::isfinite(s)) throw Error(ErrorCode::OnResonance, "detuning underflow");
  const double denom = 1.0 + kappa * s;
  return {omega / k / denom, (omega / k + c * c * k * k * k * s_alpha / omega) / denom};
}

std::vector<double> detunings_of(const MaterialSpec& spec, const BranchPoint& point) {
  if (point.detuning.size() == spec.size()) return point.detuning;
  auto w = spec.omega2_at(point.k);
  for (auto& d : w) d -= point.z;
  return w;
}

}  // namespace

std::vector<BranchPoint> solve_branches(const MaterialSpec& spec, double k) {
  require_valid(spec);
  if (k == 0.0 || !std::isfinite(k))
    throw Error(ErrorCode::NonPositiveRoot, "k = 0 puts the lowest branch at omega = 0");

  const std::size_t n = spec.size();
  const auto cp = char_polynomial(spec, k);
  const double kappa = cp.kappa;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return cp.omega2_k[i] < cp.omega2_k[j]; });
  std::vector<double> poles(n), weights(n);
  double total_g = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    poles[i] = cp.omega2_k[order[i]];
    weights[i] = -kappa * spec.resonances[order[i]].g;
    total_g += spec.resonances[order[i]].g;
  }
  const double scale = std::max(n ? poles.back() : 0.0, kappa);
  const double tol = kDistinctTolerance * scale;
  for (std::size_t i = 1; i < n; ++i)
    if (poles[i] - poles[i - 1] <= tol)
      throw Error(ErrorCode::DegenerateSpectrum, "two resonances coincide at this k");

  // kappa (1 - sum g / (W - z)) - z, strictly decreasing between poles.
  const detail::PoleFunction h{kappa, -1.0, poles, weights};
  const double top = (n ? poles.back() : 0.0) + 2.0 * (kappa + std::sqrt(kappa * total_g));

  std::vector<double> guesses;
  for (const auto& r : cp.p.companion_roots(scale)) guesses.push_back(r.real());

  std::vector<BranchPoint> out;
  out.reserve(n + 1);
  for (std::size_t mu = 0; mu <= n; ++mu) {
    const double lo = mu == 0 ? 0.0 : poles[mu - 1];
    const double hi = mu == n ? top : poles[mu];
    const double guess = guesses.size() == n + 1 ? guesses[mu] : 0.5 * (lo + hi);
    const auto root = detail::bracketed_root(h, lo, true, hi, mu < n, guess);

    BranchPoint bp;
    bp.branch = mu;
    bp.k = k;
    bp.z = root.z();
    if (!(bp.z > 0.0)) throw Error(ErrorCode::NonPositiveRoot, "branch " + std::to_string(mu) + " has z <= 0");
    bp.omega = std::sqrt(bp.z);
    bp.detuning.resize(n);
    for (std::size_t nu = 0; nu < n; ++nu) bp.detuning[nu] = root.detuning(cp.omega2_k[nu]);
    const auto v = velocities(spec, k, bp.omega, bp.detuning);
    bp.v_em = v.em;
    bp.v_group = v.total;
    out.push_back(std::move(bp));
  }
  for (std::size_t mu = 1; mu <= n; ++mu)
    if (out[mu].z - out[mu - 1].z <= tol)
      throw Error(ErrorCode::DegenerateSpectrum, "branches " + std::to_string(mu - 1) + " and " + std::to_string(mu) +
                                                     " coincide");
  return out;
}

double group_velocity(const MaterialSpec& spec, const BranchPoint& point) {
  if (spec.has_spatial_dispersion())
    throw Error(ErrorCode::InvalidArgument, "group_velocity needs alpha = 0; use total_group_velocity");
  return em_group_velocity(spec, point);
}

double em_group_velocity(const MaterialSpec& spec, const BranchPoint& point) {
  if (point.k == 0.0) throw Error(ErrorCode::InvalidArgument, "group velocity formula needs k != 0");
  return velocities(spec, point.k, point.omega, detunings_of(spec, point)).em;
}

double total_group_velocity(const MaterialSpec& spec, std::size_t branch, double k) {
  require_valid(spec);
  if (branch > spec.size()) throw Error(ErrorCode::InvalidArgument, "branch index out of range");
  if (k == 0.0) {
    if (branch > 0) return 0.0;
    double loading = 0.0;
    for (const auto& r : spec.resonances) loading += r.g / r.omega2;
    return spec.units.c * std::sqrt(1.0 - loading);
  }
  return solve_branches(spec, k)[branch].v_group;
}

std::pair<double, double> k_of_omega(const MaterialSpec& spec, double omega) {
  if (spec.has_spatial_dispersion()) throw Error(ErrorCode::InvalidArgument, "k_of_omega needs alpha = 0");
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidArgument, "omega must be positive");
  const double n2 = refractive_index_sq(spec, omega);
  if (n2 < 0.0) throw Error(ErrorCode::ForbiddenBand, "n^2 < 0 at omega = " + std::to_string(omega));
  const double k = omega * std::sqrt(n2) / spec.units.c;
  return {k, -k};
}

std::vector<ForbiddenBand> forbidden_bands(const MaterialSpec& spec) {
  if (spec.has_spatial_dispersion())
    throw Error(ErrorCode::InvalidArgument, "forbidden bands are k-independent only for alpha = 0");
  const auto form = multipolar_to_sellmeir(spec);
  auto bare = spec.omega2_at(0.0);
  std::sort(bare.begin(), bare.end());
  std::vector<ForbiddenBand> bands;
  for (std::size_t i = 0; i < bare.size(); ++i) bands.push_back({std::sqrt(form.poles[i]), std::sqrt(bare[i])});
  return bands;
}

double beta2(const MaterialSpec& spec, double omega) {
  if (spec.has_spatial_dispersion())
    throw Error(ErrorCode::InvalidArgument, "beta2 needs alpha = 0 for every resonance");
  // With q(z) = 1 - sum g / (Omega^2 - z) = 1 / n^2 and z = omega^2,
  // k = omega q^(-1/2) / c, differentiated twice in closed form.
  const double z = omega * omega;
  double q = 1.0, q1 = 0.0, q2 = 0.0;
  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    const auto& r = spec.resonances[nu];
    const double d = r.omega2 - z;
    if (d == 0.0) throw Error(ErrorCode::SingularPoint, "omega on resonance " + std::to_string(nu));
    q -= r.g / d;
    q1 -= r.g / (d * d);
    q2 -= 2.0 * r.g / (d * d * d);
  }
  if (!(q > 0.0)) throw Error(ErrorCode::ForbiddenBand, "omega lies in a forbidden band");
  const double s = 1.0 / std::sqrt(q);  // q^(-1/2)
  const double s3 = s * s * s;
  const double s5 = s3 * s * s;
  const double dA = -1.5 * s3 * q1 + 1.5 * z * s5 * q1 * q1 - z * s3 * q2;
  return 2.0 * omega * dA / spec.units.c;
}

std::vector<double> zero_dispersion_points(const MaterialSpec& spec) {
  const auto bands = forbidden_bands(spec);
  std::vector<double> roots;
  if (bands.empty()) return roots;

  constexpr int kGrid = 400;
  constexpr double kEdge = 1e-3;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const double lo = i == 0 ? 1e-3 * bands[0].omega_lo : bands[i - 1].omega_hi * (1.0 + kEdge);
    const double hi = bands[i].omega_lo * (1.0 - kEdge);
    if (!(hi > lo)) continue;

    const double ratio = std::log(hi / lo);
    double w_prev = lo;
    double b_prev = beta2(spec, lo);
    for (int j = 1; j <= kGrid; ++j) {
      const double w = lo * std::exp(ratio * j / kGrid);
      const double b = beta2(spec, w);
      if ((b_prev < 0.0) != (b < 0.0)) {
        double a = w_prev, c = w, fa = b_prev;
        for (int it = 0; it < 200 && c - a > 1e-13 * c; ++it) {
          const double m = std::sqrt(a * c);
          const double fm = beta2(spec, m);
          if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
          } else {
            c = m;
          }
        }
        roots.push_back(std::sqrt(a * c));
      }
      w_prev = w;
      b_prev = b;
    }
  }
  return roots;
}

}  // namespace polariton
