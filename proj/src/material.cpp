#include "polariton/material.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "polariton/error.hpp"
#include "pole_roots.hpp"

namespace polariton {

double Resonance::coupling_from_raw(const RawCoupling& raw, double eps0) {
  return raw.charge * raw.charge * raw.density / (raw.mass * eps0);
}

Resonance Resonance::from_raw(double omega2, const RawCoupling& raw, double eps0, double alpha) {
  return Resonance{omega2, coupling_from_raw(raw, eps0), alpha, raw};
}

UnitSystem UnitSystem::natural(int dimension) {
  UnitSystem u;
  u.dimension = dimension;
  return u;
}

UnitSystem UnitSystem::si(int dimension, double area) {
  return si(299792458.0, 1.054571817e-34, 8.8541878128e-12, area, dimension);
}

UnitSystem UnitSystem::si(double c, double hbar, double eps0, double area, int dimension) {
  UnitSystem u;
  u.c = c;
  u.hbar = hbar;
  u.eps0 = eps0;
  u.mu = 1.0 / (eps0 * c * c);
  u.area = area;
  u.dimension = dimension;
  u.mode = UnitMode::si;
  return u;
}

bool MaterialSpec::has_spatial_dispersion() const {
  return std::any_of(resonances.begin(), resonances.end(), [](const Resonance& r) { return r.alpha != 0.0; });
}

double MaterialSpec::reference_omega2() const {
  double ref = 0.0;
  for (const auto& r : resonances) ref = std::max(ref, r.omega2);
  return ref > 0.0 ? ref : 1.0;
}

std::vector<double> MaterialSpec::omega2_at(double k) const {
  std::vector<double> out;
  out.reserve(resonances.size());
  for (const auto& r : resonances) out.push_back(r.omega2_at(k));
  return out;
}

std::vector<double> MaterialSpec::couplings() const {
  std::vector<double> out;
  out.reserve(resonances.size());
  for (const auto& r : resonances) out.push_back(r.g);
  return out;
}

double SellmeirForm::n2_at_z(double z) const {
  double n2 = 1.0;
  for (std::size_t i = 0; i < poles.size(); ++i) n2 += strengths[i] / (poles[i] - z);
  return n2;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

void check_units(const UnitSystem& u, ValidationReport& report) {
  auto fail = [&](std::string code, std::string msg) { report.violations.push_back({std::move(code), std::nullopt, std::move(msg)}); };
  if (u.dimension < 1 || u.dimension > 3) fail("units.dimension", "dimension must be 1, 2 or 3");
  if (u.mode == UnitMode::natural) {
    if (u.c != 1.0 || u.hbar != 1.0 || u.eps0 != 1.0 || u.mu != 1.0 || u.area != 1.0)
      fail("units.natural", "natural units require c = hbar = eps0 = mu = area = 1");
    return;
  }
  if (!(u.c > 0.0) || !(u.hbar > 0.0) || !(u.eps0 > 0.0) || !(u.area > 0.0))
    fail("units.positive", "c, hbar, eps0 and area must be positive");
  else if (std::abs(u.mu * u.eps0 * u.c * u.c - 1.0) > 1e-12)
    fail("units.permeability", "mu * eps0 * c^2 = " + fmt(u.mu * u.eps0 * u.c * u.c) + " != 1");
}

}  // namespace

ValidationReport validate(const MaterialSpec& spec) {
  ValidationReport report;
  check_units(spec.units, report);

  const double ref = spec.reference_omega2();
  double loading = 0.0;
  bool loading_defined = true;
  for (std::size_t i = 0; i < spec.resonances.size(); ++i) {
    const auto& r = spec.resonances[i];
    if (!(r.omega2 > 0.0) || !std::isfinite(r.omega2)) {
      report.violations.push_back({"omega2.nonpositive", i, "omega2 = " + fmt(r.omega2) + " must be > 0"});
      loading_defined = false;
    }
    if (!(r.g > 0.0) || !std::isfinite(r.g))
      report.violations.push_back({"g.nonpositive", i, "g = " + fmt(r.g) + " must be > 0"});
    if (!(r.alpha >= 0.0) || !std::isfinite(r.alpha))
      report.violations.push_back({"alpha.negative", i, "alpha = " + fmt(r.alpha) + " must be >= 0"});
    if (r.raw) {
      const double from_raw = Resonance::coupling_from_raw(*r.raw, spec.units.eps0);
      if (from_raw != r.g)
        report.warnings.push_back("resonance " + std::to_string(i) + ": g = " + fmt(r.g) +
                                  " differs from q^2 rho / (m eps0) = " + fmt(from_raw) + "; using g");
    }
    if (loading_defined) loading += r.g / r.omega2;
  }
  if (loading_defined && !(loading < 1.0))
    report.violations.push_back({"sum_rule", std::nullopt, "sum g/omega2 = " + fmt(loading) + " >= 1"});

  for (std::size_t i = 0; i < spec.resonances.size(); ++i)
    for (std::size_t j = i + 1; j < spec.resonances.size(); ++j)
      if (std::abs(spec.resonances[i].omega2 - spec.resonances[j].omega2) <= kDistinctTolerance * ref)
        report.violations.push_back({"omega2.duplicate", j,
                                     "omega2 of resonances " + std::to_string(i) + " and " + std::to_string(j) +
                                         " coincide"});
  return report;
}

void require_valid(const MaterialSpec& spec) {
  const auto report = validate(spec);
  if (report.valid()) return;
  const auto& v = report.violations.front();
  std::string where = v.index ? " (resonance " + std::to_string(*v.index) + ")" : "";
  throw Error(ErrorCode::InvalidMaterial, v.code + where + ": " + v.message);
}

double refractive_index_sq(const MaterialSpec& spec, double omega, std::optional<double> k) {
  require_valid(spec);
  if (spec.has_spatial_dispersion() && !k)
    throw Error(ErrorCode::InvalidArgument, "refractive_index_sq: k is required when alpha != 0");
  const double kk = k.value_or(0.0);
  const double z = omega * omega;
  const double tol = kDistinctTolerance * spec.reference_omega2();
  double bracket = 1.0;
  for (const auto& r : spec.resonances) {
    const double d = r.omega2_at(kk) - z;
    if (std::abs(d) <= tol) throw Error(ErrorCode::SingularPoint, "omega^2 = " + fmt(z) + " is on a resonance");
    bracket -= r.g / d;
  }
  if (std::abs(bracket) <= kDistinctTolerance)
    throw Error(ErrorCode::SingularPoint, "omega^2 = " + fmt(z) + " is a zero of the inverse index");
  return 1.0 / bracket;
}

namespace {

struct SortedPoles {
  std::vector<double> poles;
  std::vector<double> weights;
};

SortedPoles sorted_by_pole(std::vector<double> poles, std::vector<double> weights) {
  std::vector<std::size_t> order(poles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return poles[a] < poles[b]; });
  SortedPoles out;
  for (auto i : order) {
    out.poles.push_back(poles[i]);
    out.weights.push_back(weights[i]);
  }
  return out;
}

}  // namespace

SellmeirForm multipolar_to_sellmeir(const MaterialSpec& spec) {
  require_valid(spec);
  if (spec.has_spatial_dispersion())
    throw Error(ErrorCode::InvalidArgument, "multipolar_to_sellmeir: defined only for alpha = 0");
  SellmeirForm form;
  if (spec.resonances.empty()) return form;

  std::vector<double> g = spec.couplings();
  for (auto& w : g) w = -w;
  const auto sorted = sorted_by_pole(spec.omega2_at(0.0), g);
  const detail::PoleFunction inverse_index{1.0, 0.0, sorted.poles, sorted.weights};

  const std::size_t n = sorted.poles.size();
  for (std::size_t mu = 0; mu < n; ++mu) {
    const double lo = mu == 0 ? 0.0 : sorted.poles[mu - 1];
    const auto root = detail::bracketed_root(inverse_index, lo, mu > 0, sorted.poles[mu], true, 0.5 * (lo + sorted.poles[mu]));
    double curvature = 0.0;
    for (std::size_t nu = 0; nu < n; ++nu) {
      const double d = root.detuning(sorted.poles[nu]);
      curvature += -sorted.weights[nu] / (d * d);
    }
    form.poles.push_back(root.z());
    form.strengths.push_back(1.0 / curvature);
  }
  const double tol = kDistinctTolerance * spec.reference_omega2();
  for (std::size_t mu = 0; mu < n; ++mu) {
    const double lo = mu == 0 ? 0.0 : sorted.poles[mu - 1];
    if (form.poles[mu] - lo <= tol || sorted.poles[mu] - form.poles[mu] <= tol)
      throw Error(ErrorCode::DegenerateRoots, "shifted pole " + std::to_string(mu) + " coincides with a bare pole");
  }
  return form;
}

MaterialSpec sellmeir_to_multipolar(const SellmeirForm& form, const UnitSystem& units, std::string name) {
  if (form.poles.size() != form.strengths.size())
    throw Error(ErrorCode::InvalidArgument, "Sellmeir form: poles and strengths differ in length");
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (!(form.poles[i] > 0.0) || !(form.strengths[i] > 0.0))
      throw Error(ErrorCode::InvalidArgument, "Sellmeir form: poles and strengths must be positive");
    if (i > 0 && !(form.poles[i] > form.poles[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "Sellmeir form: poles must be distinct and ascending");
  }

  MaterialSpec spec;
  spec.name = std::move(name);
  spec.units = units;
  const std::size_t n = form.size();
  if (n == 0) return spec;

  const detail::PoleFunction index{1.0, 0.0, form.poles, form.strengths};
  const double total = std::accumulate(form.strengths.begin(), form.strengths.end(), 0.0);
  for (std::size_t nu = 0; nu < n; ++nu) {
    const bool top = nu + 1 == n;
    const double hi = top ? form.poles[nu] + 2.0 * total : form.poles[nu + 1];
    const auto root = detail::bracketed_root(index, form.poles[nu], true, hi, !top, 0.5 * (form.poles[nu] + hi));
    double curvature = 0.0;
    for (std::size_t mu = 0; mu < n; ++mu) {
      const double d = root.detuning(form.poles[mu]);
      curvature += form.strengths[mu] / (d * d);
    }
    spec.resonances.push_back(Resonance{root.z(), 1.0 / curvature, 0.0, std::nullopt});
  }

  double loading = 0.0;
  for (const auto& r : spec.resonances) {
    if (!(r.g > 0.0) || !std::isfinite(r.g))
      throw Error(ErrorCode::NotRepresentable, "recovered coupling is not positive");
    loading += r.g / r.omega2;
  }
  if (!(loading < 1.0)) throw Error(ErrorCode::NotRepresentable, "recovered sum g/omega2 = " + fmt(loading) + " >= 1");
  return spec;
}

SellmeirForm sellmeir_from_wavelength_form(std::span<const double> B, std::span<const double> C_um2,
                                           const UnitSystem& units) {
  if (units.mode != UnitMode::si)
    throw Error(ErrorCode::UnitMismatch, "wavelength-form coefficients in um^2 need SI units");
  if (B.size() != C_um2.size()) throw Error(ErrorCode::InvalidArgument, "B and C lists differ in length");
  std::vector<double> poles, strengths;
  const double two_pi_c = 2.0 * std::numbers::pi * units.c;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (!(B[i] > 0.0) || !(C_um2[i] > 0.0))
      throw Error(ErrorCode::InvalidArgument, "wavelength-form coefficients must be positive");
    const double pole = two_pi_c * two_pi_c / (C_um2[i] * 1e-12);
    poles.push_back(pole);
    strengths.push_back(B[i] * pole);
  }
  const auto sorted = sorted_by_pole(poles, strengths);
  for (std::size_t i = 1; i < sorted.poles.size(); ++i)
    if (!(sorted.poles[i] > sorted.poles[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "wavelength-form resonances must be distinct");
  return SellmeirForm{sorted.poles, sorted.weights};
}

}  // namespace polariton
