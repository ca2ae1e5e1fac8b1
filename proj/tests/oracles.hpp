#pragma once

// Reference computations for the tests. Nothing here calls into the library
// apart from reading MaterialSpec fields: roots come from long-double
// bisection, derivatives from finite differences, the rest from closed forms.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "polariton/material.hpp"

namespace oracle {

using real = long double;

// Values computed offline to 40 digits for Omega^2 = 4, g = 1, c = 1, k = 1.
namespace sosc {
inline constexpr double z_lo = 0.6972243622680054;
inline constexpr double z_hi = 4.302775637731995;
inline constexpr double omega_lo = 0.8349996181244668;
inline constexpr double omega_hi = 2.074313293051943;
inline constexpr double delta = 3.605551275463989;
inline constexpr double v_lo = 0.7648806480784582;
inline constexpr double v_hi = 0.1741901535095860;
inline constexpr double kv_lo = 0.9160251471689218;
inline constexpr double kv_hi = 0.08397485283107816;
inline constexpr double lambda_lo = 0.2954647175339885;
inline constexpr double lambda2_lo = 0.0872993993074396;
inline constexpr double lambda_hi = 0.05675871027397441;
inline constexpr double p_abs_lo = 0.08945951827865702;
inline constexpr double p_hi = -0.1874612855219714;
inline constexpr double eps_lo = 1.434258545910665;
inline constexpr double eps_hi = 0.2324081207560018;
inline constexpr double rescale_lo = 1.143413099560365;
inline constexpr double rescale_hi = 2.396007642904845;
inline constexpr double s3_term = 0.2773500981126146;
inline constexpr double s3_squared_lo = -0.3321559580297583;
inline constexpr double s3_squared_hi = 0.1337069472782236;
// longitudinal |p| in 3D, Omega(k) = 2
inline constexpr double p_longitudinal = 0.03174681796712048;
}  // namespace sosc

inline polariton::MaterialSpec sosc_material(double alpha = 0.0, int dimension = 1) {
  polariton::MaterialSpec s;
  s.name = "sosc";
  s.units = polariton::UnitSystem::natural(dimension);
  s.resonances = {{4.0, 1.0, alpha, std::nullopt}};
  return s;
}

inline polariton::MaterialSpec duo_material(int dimension = 1) {
  polariton::MaterialSpec s;
  s.name = "duo";
  s.units = polariton::UnitSystem::natural(dimension);
  s.resonances = {{4.0, 1.0, 0.0, std::nullopt}, {25.0, 2.0, 0.0, std::nullopt}};
  return s;
}

inline polariton::MaterialSpec vacuum(int dimension = 1) {
  polariton::MaterialSpec s;
  s.name = "vacuum";
  s.units = polariton::UnitSystem::natural(dimension);
  return s;
}

// Fused silica, three-term wavelength-form coefficients (lambda in um).
inline constexpr double silica_B[3] = {0.6961663, 0.4079426, 0.8974794};
inline constexpr double silica_C_um[3] = {0.0684043, 0.1162414, 9.896161};

inline std::vector<double> silica_C_um2() {
  std::vector<double> c;
  for (double x : silica_C_um) c.push_back(x * x);
  return c;
}

inline real silica_n2(real lambda_um) {
  real n2 = 1;
  for (int i = 0; i < 3; ++i) {
    const real c = static_cast<real>(silica_C_um[i]) * silica_C_um[i];
    n2 += silica_B[i] * lambda_um * lambda_um / (lambda_um * lambda_um - c);
  }
  return n2;
}

// k(omega) in 1/um with omega in rad/um (so omega = 2 pi / lambda_um).
inline real silica_k(real omega) {
  const real lambda = 2 * 3.14159265358979323846264338327950288L / omega;
  return omega * std::sqrt(silica_n2(lambda));
}

inline real silica_beta2(real omega) {
  auto second = [omega](real h) {
    return (silica_k(omega + h) - 2 * silica_k(omega) + silica_k(omega - h)) / (h * h);
  };
  const real h = 1e-3L * omega;
  return (4 * second(h / 2) - second(h)) / 3;
}

// Zero of beta2 between two wavelengths (um), by bisection in omega.
inline double silica_zero_dispersion_um(double lambda_a, double lambda_b) {
  const real two_pi = 2 * 3.14159265358979323846264338327950288L;
  real lo = two_pi / lambda_b, hi = two_pi / lambda_a;
  const bool up = silica_beta2(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const real mid = 0.5L * (lo + hi);
    if ((silica_beta2(mid) < 0) == up)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>(two_pi / (0.5L * (lo + hi)));
}

// Quad precision for the finite-difference velocity: flat branches have
// v ~ 1e-12 and need the extra digits to survive the difference.
using quad = __float128;

// kappa (1 - sum g / (W - z)) - z, decreasing between consecutive poles W.
template <typename T = real>
T dispersion_h(const polariton::MaterialSpec& s, T k, T z) {
  const T c = s.units.c;
  const T kappa = c * c * k * k;
  T sum = 0;
  for (const auto& r : s.resonances) sum += static_cast<T>(r.g) / (r.omega2 + r.alpha * k * k - z);
  return kappa * (1 - sum) - z;
}

// All N+1 roots z = omega^2, ascending, by bisection in each pole interval.
template <typename T = real>
std::vector<T> roots(const polariton::MaterialSpec& s, T k) {
  std::vector<T> poles;
  T gsum = 0;
  for (const auto& r : s.resonances) {
    poles.push_back(r.omega2 + r.alpha * k * k);
    gsum += r.g;
  }
  std::sort(poles.begin(), poles.end());
  const T c = s.units.c;
  const T kappa = c * c * k * k;
  T top = (poles.empty() ? T(0) : poles.back()) + kappa + gsum + 1;
  while (dispersion_h<T>(s, k, top) > 0) top *= 2;

  std::vector<T> edges{T(0)};
  edges.insert(edges.end(), poles.begin(), poles.end());
  edges.push_back(top);
  std::vector<T> out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    T lo = edges[i], hi = edges[i + 1];
    for (int it = 0; it < 600 && lo < hi; ++it) {
      const T mid = (lo + hi) / 2;
      if (mid == lo || mid == hi) break;
      if (dispersion_h<T>(s, k, mid) > 0)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back((lo + hi) / 2);
  }
  return out;
}

inline std::vector<real> roots(const polariton::MaterialSpec& s, double k) { return roots<real>(s, k); }

inline quad sqrt_q(quad x) {
  if (x <= 0) return 0;
  quad y = std::sqrt(static_cast<long double>(x));
  for (int i = 0; i < 3; ++i) y = (y + x / y) / 2;
  return y;
}

inline std::vector<double> omegas(const polariton::MaterialSpec& s, double k) {
  std::vector<double> w;
  for (real z : roots(s, k)) w.push_back(static_cast<double>(std::sqrt(z)));
  return w;
}

// d omega_mu / dk by central differences on quad-precision bisection roots,
// with one Richardson step.
inline double fd_velocity(const polariton::MaterialSpec& s, std::size_t branch, double k, double rel_step = 1e-4) {
  auto central = [&](quad h) {
    const quad wp = sqrt_q(roots<quad>(s, static_cast<quad>(k) + h)[branch]);
    const quad wm = sqrt_q(roots<quad>(s, static_cast<quad>(k) - h)[branch]);
    return (wp - wm) / (2 * h);
  };
  const quad h = static_cast<quad>(rel_step) * k;
  return static_cast<double>((4 * central(h / 2) - central(h)) / 3);
}

inline double n2(const polariton::MaterialSpec& s, double omega) {
  real sum = 0;
  for (const auto& r : s.resonances) sum += static_cast<real>(r.g) / (r.omega2 - static_cast<real>(omega) * omega);
  return static_cast<double>(1 / (1 - sum));
}

// Shifted-pole form 1 + sum strengths / (poles - z).
inline double n2_sellmeir(const std::vector<double>& poles, const std::vector<double>& strengths, double z) {
  real n2 = 1;
  for (std::size_t i = 0; i < poles.size(); ++i) n2 += strengths[i] / (poles[i] - static_cast<real>(z));
  return static_cast<double>(n2);
}

// Quadratic closed forms for one resonance.
struct TwoBranch {
  double z[2];
  double delta;
  double kv_over_omega[2];
};

inline TwoBranch single_oscillator(double omega2, double g, double c, double k) {
  const real kappa = static_cast<real>(c) * c * k * k;
  const real sum = kappa + omega2;
  const real delta = std::sqrt((kappa - omega2) * (kappa - omega2) + 4 * kappa * g);
  TwoBranch t{};
  t.delta = static_cast<double>(delta);
  const real zlo = 2 * kappa * (omega2 - g) / (sum + delta);
  const real zhi = 0.5L * (sum + delta);
  t.z[0] = static_cast<double>(zlo);
  t.z[1] = static_cast<double>(zhi);
  // k v / omega = (d z / d kappa) kappa / z with z(kappa) from the quadratic
  const real zs[2] = {zlo, zhi};
  for (int b = 0; b < 2; ++b) {
    const real z = zs[b];
    const real dz = (omega2 - g - z) / (omega2 + kappa - 2 * z);
    t.kv_over_omega[b] = static_cast<double>(dz * kappa / z);
  }
  return t;
}

// Randomized valid materials: N in [0, 5], Omega^2 log-uniform in [1, 1e3],
// total sum g / Omega^2 in (0.05, 0.8), alpha either 0 or small.
inline polariton::MaterialSpec random_material(std::mt19937_64& rng, bool allow_alpha = true) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  polariton::MaterialSpec s;
  s.units = polariton::UnitSystem::natural();
  const int n = count(rng);
  std::vector<double> w2;
  while (static_cast<int>(w2.size()) < n) {
    const double x = std::pow(10.0, 3.0 * unit(rng));
    bool distinct = true;
    for (double y : w2) distinct = distinct && std::abs(x - y) > 1e-3 * std::max(x, y);
    if (distinct) w2.push_back(x);
  }
  const double total = 0.05 + 0.75 * unit(rng);
  std::vector<double> weights(n);
  for (auto& w : weights) w = 0.05 + unit(rng);
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double alpha_scale = allow_alpha && unit(rng) < 0.5 ? 1e-3 : 0.0;
  for (int i = 0; i < n; ++i)
    s.resonances.push_back({w2[i], w2[i] * total * weights[i] / wsum, alpha_scale * w2[i] / 1e3, std::nullopt});
  return s;
}

inline std::vector<double> log_grid(std::mt19937_64& rng, int count, double lo, double hi) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> ks(count);
  for (auto& k : ks) k = lo * std::pow(hi / lo, unit(rng));
  std::sort(ks.begin(), ks.end());
  return ks;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
