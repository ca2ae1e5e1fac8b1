#include "polariton/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polariton::io {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_dispersion_csv(std::ostream& out, std::span<const std::vector<BranchPoint>> sweep) {
  out << "k,branch,omega,v_group,v_em,z\n";
  for (const auto& row : sweep)
    for (const auto& bp : row)
      out << format_double(bp.k) << ',' << bp.branch << ',' << format_double(bp.omega) << ','
          << format_double(bp.v_group) << ',' << format_double(bp.v_em) << ',' << format_double(bp.z) << '\n';
}

json dispersion_json(std::span<const std::vector<BranchPoint>> sweep) {
  json rows = json::array();
  for (const auto& row : sweep)
    for (const auto& bp : row)
      rows.push_back({{"k", bp.k}, {"branch", bp.branch}, {"omega", bp.omega}, {"v_group", bp.v_group},
                      {"v_em", bp.v_em}, {"z", bp.z}});
  return rows;
}

json sum_rule_json(const SumRuleReport& r, double tolerance) {
  return {{"k", r.k},
          {"s1", r.s1},
          {"s2_max_offdiag", r.s2_max_offdiag()},
          {"s2_max_diag_err", r.s2_max_diag_err()},
          {"s3_max", r.s3_max()},
          {"residue_s1", r.residue_s1},
          {"max_abs_residual", r.max_abs_residual},
          {"pass", r.pass(tolerance)},
          {"erratum_variant_s3", r.erratum_variant_s3}};
}

namespace {

bool si(const MaterialSpec& spec) { return spec.units.mode == UnitMode::si; }

// Vacuum wavelength in micrometres.
double wavelength_um(const MaterialSpec& spec, double omega) {
  return 2.0 * 3.14159265358979323846 * spec.units.c / omega * 1e6;
}

}  // namespace

json bands_json(const MaterialSpec& spec, std::span<const ForbiddenBand> bands) {
  json out = json::array();
  for (const auto& b : bands) {
    json entry = {{"omega_lo", b.omega_lo}, {"omega_hi", b.omega_hi}};
    if (si(spec)) {
      entry["wavelength_hi_um"] = wavelength_um(spec, b.omega_lo);
      entry["wavelength_lo_um"] = wavelength_um(spec, b.omega_hi);
    }
    out.push_back(entry);
  }
  return out;
}

json zdp_json(const MaterialSpec& spec, std::span<const double> omegas) {
  json out = json::array();
  for (double w : omegas) {
    json entry = {{"omega", w}};
    if (si(spec)) entry["wavelength_um"] = wavelength_um(spec, w);
    out.push_back(entry);
  }
  return out;
}

json sellmeir_json(const SellmeirForm& form) { return {{"poles", form.poles}, {"strengths", form.strengths}}; }

EigenDiagnostics eigen_diagnostics(const EigenSystem& es, const MaterialSpec& spec) {
  EigenDiagnostics d;
  d.hermiticity = es.hermiticity_residual();
  const Eigen::MatrixXcd gram = es.gram();
  const auto n = gram.rows();
  d.gram_error = (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  for (const auto& c : verify_normalization(es, spec)) d.max_normalization = std::max(d.max_normalization, c.residual);
  return d;
}

json eigen_json(const EigenSystem& es, const MaterialSpec& spec) {
  const auto d = eigen_diagnostics(es, spec);
  json modes = json::array();
  std::size_t transverse = 0, longitudinal = 0, gauge = 0;
  for (std::size_t i = 0; i < es.modes.size(); ++i) {
    const auto& m = es.modes[i];
    const char* kind = "transverse";
    if (m.kind == ModeKind::longitudinal) {
      kind = "longitudinal";
      ++longitudinal;
    } else if (m.kind == ModeKind::gauge) {
      kind = "gauge";
      ++gauge;
    } else {
      ++transverse;
    }
    modes.push_back({{"eigenvalue", es.eigenvalues[static_cast<Eigen::Index>(i)]},
                     {"kind", kind},
                     {"sigma", m.sigma},
                     {"mu", m.mu}});
  }
  json residuals = json::array();
  for (const auto& c : verify_normalization(es, spec)) residuals.push_back(c.residual);
  return {{"dimension", es.dimension},
          {"k", es.k},
          {"hermiticity_residual", d.hermiticity},
          {"gram_error", d.gram_error},
          {"normalization_residuals", residuals},
          {"counts", {{"transverse", transverse}, {"longitudinal", longitudinal}, {"gauge", gauge}}},
          {"modes", modes}};
}

json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

json mode_json(const ModeCoefficients& m) {
  json p = json::array(), pi = json::array();
  for (auto x : m.p) p.push_back(complex_json(x));
  for (auto x : m.pi) pi.push_back(complex_json(x));
  return {{"k", m.k},
          {"branch", m.branch},
          {"sigma", m.sigma},
          {"omega", m.omega},
          {"v", m.v},
          {"v_em", m.v_em},
          {"Lambda", m.Lambda},
          {"Pi_im", m.Pi.imag()},
          {"p", p},
          {"pi", pi},
          {"D_coef", complex_json(m.D)},
          {"E_coef", complex_json(m.E)},
          {"B_coef", complex_json(m.B)}};
}

json kernel_json(const KernelSample& s) {
  const double err = std::abs(s.value - s.target);
  return {{"x0", s.x0}, {"cutoff", s.cutoff}, {"value", complex_json(s.value)},
          {"target", complex_json(s.target)}, {"abs_error", err}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace polariton::io
