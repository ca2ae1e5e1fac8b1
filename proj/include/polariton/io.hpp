#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "polariton/dispersion.hpp"
#include "polariton/eigensystem.hpp"
#include "polariton/material.hpp"
#include "polariton/mode_quantizer.hpp"
#include "polariton/sum_rules.hpp"

namespace polariton::io {

using nlohmann::json;

/// Shortest text that reads back to the same double.
std::string format_double(double x);

/// Header k,branch,omega,v_group,v_em,z then one row per branch per k.
void write_dispersion_csv(std::ostream& out, std::span<const std::vector<BranchPoint>> sweep);
json dispersion_json(std::span<const std::vector<BranchPoint>> sweep);

json sum_rule_json(const SumRuleReport& report, double tolerance);
json bands_json(const MaterialSpec& spec, std::span<const ForbiddenBand> bands);
json zdp_json(const MaterialSpec& spec, std::span<const double> omegas);
json sellmeir_json(const SellmeirForm& form);

struct EigenDiagnostics {
  double hermiticity = 0.0;
  double gram_error = 0.0;
  double max_normalization = 0.0;
};
EigenDiagnostics eigen_diagnostics(const EigenSystem& es, const MaterialSpec& spec);
json eigen_json(const EigenSystem& es, const MaterialSpec& spec);

/// Complex values are written as [re, im].
json complex_json(complex z);
json mode_json(const ModeCoefficients& m);
json kernel_json(const KernelSample& sample);

json error_json(const std::string& code, const std::string& message);

/// Writes a JSON document with 2-space indent and a trailing newline.
void write_json(std::ostream& out, const json& doc);

}  // namespace polariton::io
