#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polariton/dispersion.hpp"
#include "polariton/eigensystem.hpp"
#include "polariton/error.hpp"
#include "polariton/io.hpp"
#include "polariton/material.hpp"
#include "polariton/material_io.hpp"
#include "polariton/mode_quantizer.hpp"
#include "polariton/sum_rules.hpp"
#include "polariton/sweep.hpp"

namespace polariton {

namespace {

using io::json;

// Problems with the request itself, as opposed to the physics.
struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string material;
  std::string out;
  std::string format;
  double tolerance = 1e-8;

  std::vector<double> ks;
  std::optional<double> kmin, kmax;
  int count = 0;
  std::string spacing = "linear";

  std::vector<double> omegas;
  std::optional<double> index_k;
  std::string to = "sellmeier";
  bool erratum = false;
  std::vector<double> kvec;

  std::string pair = "lambda_pi";
  std::size_t nu = 0, nu_prime = 0;
  double center = 0.0, width = 1.0, cutoff = 10.0;
  std::vector<double> x0 = {0.0};
  int panels = 64;
  bool serial = false;
};

std::vector<double> k_grid(const Options& o) {
  const bool range = o.kmin || o.kmax || o.count != 0;
  if (!o.ks.empty() && range) throw BadRequest("give either --k or a --kmin/--kmax/--count range");
  std::vector<double> ks = o.ks;
  if (range) {
    if (!o.kmin || !o.kmax || o.count == 0) throw BadRequest("a k range needs --kmin, --kmax and --count");
    if (!(*o.kmin < *o.kmax)) throw BadRequest("--kmin must be below --kmax");
    if (o.count < 2) throw BadRequest("--count must be at least 2");
    const bool log = o.spacing == "log";
    if (log && !(*o.kmin > 0.0)) throw BadRequest("log spacing needs --kmin > 0");
    const double a = log ? std::log(*o.kmin) : *o.kmin;
    const double b = log ? std::log(*o.kmax) : *o.kmax;
    for (int i = 0; i < o.count; ++i) {
      double t = a + (b - a) * i / (o.count - 1);
      if (i == o.count - 1) t = b;
      ks.push_back(log ? std::exp(t) : t);
    }
    if (log) {
      ks.front() = *o.kmin;
      ks.back() = *o.kmax;
    }
  }
  if (ks.empty()) throw BadRequest("no wavenumbers given");
  std::sort(ks.begin(), ks.end());
  return ks;
}

std::string format_of(const Options& o, bool tabular) {
  if (o.format.empty()) return tabular ? "csv" : "json";
  if (o.format == "csv" && !tabular) throw BadRequest("this command only writes json");
  return o.format;
}

int cmd_validate(const MaterialSpec& spec, std::ostream& out) {
  const auto report = validate(spec);
  json v = json::array();
  for (const auto& x : report.violations) {
    json entry = {{"code", x.code}, {"message", x.message}};
    if (x.index) entry["index"] = *x.index;
    v.push_back(entry);
  }
  io::write_json(out, {{"name", spec.name}, {"valid", report.valid()}, {"violations", v},
                       {"warnings", report.warnings}});
  return report.valid() ? 0 : 1;
}

int cmd_dispersion(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  const auto ks = k_grid(o);
  const auto sweep = dispersion_sweep(spec, ks);
  if (format_of(o, true) == "csv")
    io::write_dispersion_csv(out, sweep);
  else
    io::write_json(out, io::dispersion_json(sweep));
  return 0;
}

int cmd_index(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  if (o.omegas.empty()) throw BadRequest("index needs --omega");
  std::vector<std::pair<double, double>> rows;
  for (double w : o.omegas) rows.emplace_back(w, refractive_index_sq(spec, w, o.index_k));
  if (format_of(o, true) == "csv") {
    out << "omega,n2\n";
    for (auto [w, n2] : rows) out << io::format_double(w) << ',' << io::format_double(n2) << '\n';
    return 0;
  }
  json doc = json::array();
  for (auto [w, n2] : rows) {
    json entry = {{"omega", w}, {"n2", n2}};
    entry["n"] = n2 >= 0.0 ? json(std::sqrt(n2)) : json(nullptr);
    doc.push_back(entry);
  }
  io::write_json(out, doc);
  return 0;
}

int cmd_sumrules(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  std::vector<double> ks = o.ks;
  if (ks.empty()) ks = k_grid(o);
  auto reports = sum_rule_sweep(spec, ks);
  bool all = true;
  json rows = json::array();
  for (auto& r : reports) {
    if (o.erratum) {
      // diagnostic only: S3 with omega^2 in place of omega
      r.s3 = condition_V(spec, r.k, S3Form::squared);
      r.max_abs_residual = std::max(r.max_abs_residual, r.s3_max());
    }
    all = all && r.pass(o.tolerance);
    rows.push_back(io::sum_rule_json(r, o.tolerance));
  }
  io::write_json(out, {{"tolerance", o.tolerance}, {"pass", all}, {"reports", rows}});
  return all ? 0 : 1;
}

int cmd_bands(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  const auto bands = forbidden_bands(spec);
  io::write_json(out, {{"bands", io::bands_json(spec, bands)}});
  return 0;
}

int cmd_zdp(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  const auto zdp = zero_dispersion_points(spec);
  io::write_json(out, {{"zero_dispersion", io::zdp_json(spec, zdp)}});
  return 0;
}

int cmd_convert(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  if (o.to == "sellmeier")
    io::write_json(out, io::sellmeir_json(multipolar_to_sellmeir(spec)));
  else
    io::write_json(out, material_to_json(spec));
  return 0;
}

int cmd_eigen(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  json rows = json::array();
  if (!o.kvec.empty()) {
    if (o.kvec.size() != 3) throw BadRequest("--kvec takes three components");
    if (spec.units.dimension != 3) throw BadRequest("--kvec needs a material with dimension 3");
    const auto es = build_3d(spec, Eigen::Vector3d(o.kvec[0], o.kvec[1], o.kvec[2]));
    rows.push_back(io::eigen_json(es, spec));
  } else {
    if (o.ks.empty()) throw BadRequest("eigen needs --k or --kvec");
    for (double k : o.ks) {
      const auto es = spec.units.dimension == 3 ? build_3d(spec, Eigen::Vector3d(0.0, 0.0, k)) : build_1d(spec, k);
      rows.push_back(io::eigen_json(es, spec));
    }
  }
  io::write_json(out, rows);
  return 0;
}

int cmd_modes(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  const auto ks = k_grid(o);
  json rows = json::array();
  for (double k : ks) {
    for (const auto& bp : solve_branches(spec, k)) {
      if (spec.units.dimension != 3) {
        rows.push_back(io::mode_json(mode_coefficients_1d(spec, bp)));
        continue;
      }
      for (int sigma : {1, 2}) rows.push_back(io::mode_json(mode_coefficients_3d(spec, bp, sigma)));
    }
    if (spec.units.dimension == 3) {
      for (std::size_t nu = 0; nu < spec.size(); ++nu) {
        BranchPoint lp;
        lp.branch = nu;
        lp.k = k;
        rows.push_back(io::mode_json(mode_coefficients_3d(spec, lp, 0)));
      }
    }
  }
  io::write_json(out, rows);
  return 0;
}

int cmd_kernel(const MaterialSpec& spec, const Options& o, std::ostream& out) {
  require_valid(spec);
  format_of(o, false);
  KernelPair pair;
  if (o.pair == "lambda_pi")
    pair = KernelPair::lambda_pi;
  else if (o.pair == "p_pi")
    pair = KernelPair::p_pi;
  else if (o.pair == "lambda_pi_nu")
    pair = KernelPair::lambda_pi_nu;
  else
    pair = KernelPair::d_b;
  KernelOptions opt;
  opt.nu = o.nu;
  opt.nu_prime = o.nu_prime;
  opt.panels = o.panels;
  opt.parallel = !o.serial;
  const GaussianTest test{o.center, o.width};
  json rows = json::array();
  for (double x0 : o.x0) rows.push_back(io::kernel_json(kernel_reconstruction(spec, pair, test, x0, o.cutoff, opt)));
  io::write_json(out, {{"pair", o.pair}, {"samples", rows}});
  return 0;
}

int report(std::ostream& err, const std::string& code, const std::string& message, int status) {
  io::write_json(err, io::error_json(code, message));
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dispersive polariton modes: dispersion, sum rules, eigensystems, quantized coefficients"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--material", o.material, "material JSON file")->check(CLI::ExistingFile);
  app.add_option("--out", o.out, "write output here instead of stdout");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tolerance", o.tolerance, "sum-rule pass threshold")->capture_default_str();

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", o.ks, "wavenumbers")->delimiter(',');
    sub->add_option("--kmin", o.kmin);
    sub->add_option("--kmax", o.kmax);
    sub->add_option("--count", o.count);
    sub->add_option("--spacing", o.spacing)->check(CLI::IsMember({"linear", "log"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a material file");
  auto* dispersion_cmd = app.add_subcommand("dispersion", "branch frequencies and velocities over k");
  add_k(dispersion_cmd);
  auto* index_cmd = app.add_subcommand("index", "squared refractive index at given frequencies");
  index_cmd->add_option("--omega", o.omegas)->delimiter(',')->required();
  index_cmd->add_option("--k", o.index_k, "wavenumber, needed when resonances disperse");
  auto* bands_cmd = app.add_subcommand("bands", "forbidden bands");
  auto* zdp_cmd = app.add_subcommand("zdp", "zero group-velocity-dispersion points");
  auto* convert_cmd = app.add_subcommand("convert", "switch between resonance and shifted-pole forms");
  convert_cmd->add_option("--to", o.to)->check(CLI::IsMember({"sellmeier", "multipolar"}));
  auto* sumrules_cmd = app.add_subcommand("sumrules", "check the branch sum rules");
  add_k(sumrules_cmd);
  sumrules_cmd->add_flag("--use-erratum-vform", o.erratum, "diagnostic: use omega^2 in the third sum rule");
  auto* eigen_cmd = app.add_subcommand("eigen", "diagonalize the mode equations");
  eigen_cmd->add_option("--k", o.ks)->delimiter(',');
  eigen_cmd->add_option("--kvec", o.kvec)->delimiter(',')->expected(3);
  auto* modes_cmd = app.add_subcommand("modes", "quantized mode coefficients");
  add_k(modes_cmd);
  auto* kernel_cmd = app.add_subcommand("kernel", "smeared equal-time commutator");
  kernel_cmd->add_option("--pair", o.pair)->check(CLI::IsMember({"lambda_pi", "p_pi", "lambda_pi_nu", "d_b"}));
  kernel_cmd->add_option("--nu", o.nu);
  kernel_cmd->add_option("--nu-prime", o.nu_prime);
  kernel_cmd->add_option("--center", o.center);
  kernel_cmd->add_option("--width", o.width);
  kernel_cmd->add_option("--x0", o.x0)->delimiter(',');
  kernel_cmd->add_option("--cutoff", o.cutoff);
  kernel_cmd->add_option("--panels", o.panels)->check(CLI::PositiveNumber);
  kernel_cmd->add_flag("--serial", o.serial, "single-threaded quadrature");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report(err, "InvalidArgument", e.what(), 2);
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (o.material.empty()) throw BadRequest("--material is required");
    const MaterialSpec spec = load_material(o.material);
    auto* sub = app.get_subcommands().front();
    if (sub == validate_cmd)
      status = cmd_validate(spec, buffer);
    else if (sub == dispersion_cmd)
      status = cmd_dispersion(spec, o, buffer);
    else if (sub == index_cmd)
      status = cmd_index(spec, o, buffer);
    else if (sub == bands_cmd)
      status = cmd_bands(spec, o, buffer);
    else if (sub == zdp_cmd)
      status = cmd_zdp(spec, o, buffer);
    else if (sub == convert_cmd)
      status = cmd_convert(spec, o, buffer);
    else if (sub == sumrules_cmd)
      status = cmd_sumrules(spec, o, buffer);
    else if (sub == eigen_cmd)
      status = cmd_eigen(spec, o, buffer);
    else if (sub == modes_cmd)
      status = cmd_modes(spec, o, buffer);
    else
      status = cmd_kernel(spec, o, buffer);
  } catch (const BadRequest& e) {
    return report(err, "InvalidArgument", e.what(), 2);
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    const std::string message = colon == std::string::npos ? what : what.substr(colon + 2);
    return report(err, std::string(to_string(e.code())), message, e.code() == ErrorCode::ParseError ? 2 : 1);
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << buffer.str();
    if (!file) return report(err, "ParseError", "cannot write " + o.out, 2);
  }
  return status;
}

}  // namespace polariton
