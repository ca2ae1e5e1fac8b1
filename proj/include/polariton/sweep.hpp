#pragma once

#include <functional>
#include <span>
#include <vector>

#include "polariton/dispersion.hpp"
#include "polariton/material.hpp"
#include "polariton/sum_rules.hpp"

namespace polariton {

enum class Execution { serial, parallel };

/// One entry per k, in input order, each holding all N+1 branches.
std::vector<std::vector<BranchPoint>> dispersion_sweep(const MaterialSpec& spec, std::span<const double> ks,
                                                       Execution execution = Execution::parallel);

std::vector<SumRuleReport> sum_rule_sweep(const MaterialSpec& spec, std::span<const double> ks,
                                          Execution execution = Execution::parallel);

/// Integral of f over [a, b], split into equal panels that are each refined by
/// adaptive Simpson until the total error estimate is below rel_tol times
/// max(integral of |f|, abs_scale). abs_scale keeps the tolerance finite when
/// f cancels to rounding noise. Panels are summed in order, so the result does not depend
/// on the execution mode beyond rounding of the individual panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels, double rel_tol,
                        Execution execution = Execution::parallel, double abs_scale = 0.0);

// The two implementations behind the dispatchers above. The serial versions
// are the reference the parallel ones are tested against.
namespace serial {
std::vector<std::vector<BranchPoint>> dispersion_sweep(const MaterialSpec& spec, std::span<const double> ks);
std::vector<SumRuleReport> sum_rule_sweep(const MaterialSpec& spec, std::span<const double> ks);
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels, double rel_tol, double abs_scale = 0.0);
}  // namespace serial

namespace omp {
std::vector<std::vector<BranchPoint>> dispersion_sweep(const MaterialSpec& spec, std::span<const double> ks);
std::vector<SumRuleReport> sum_rule_sweep(const MaterialSpec& spec, std::span<const double> ks);
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels, double rel_tol, double abs_scale = 0.0);
}  // namespace omp

}  // namespace polariton
