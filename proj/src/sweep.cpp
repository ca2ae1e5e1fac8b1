#include "polariton/sweep.hpp"

namespace polariton {

std::vector<std::vector<BranchPoint>> dispersion_sweep(const MaterialSpec& spec, std::span<const double> ks,
                                                       Execution execution) {
  return execution == Execution::serial ? serial::dispersion_sweep(spec, ks) : omp::dispersion_sweep(spec, ks);
}

std::vector<SumRuleReport> sum_rule_sweep(const MaterialSpec& spec, std::span<const double> ks, Execution execution) {
  return execution == Execution::serial ? serial::sum_rule_sweep(spec, ks) : omp::sum_rule_sweep(spec, ks);
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels, double rel_tol,
                        Execution execution, double abs_scale) {
  return execution == Execution::serial ? serial::integrate_panels(f, a, b, panels, rel_tol, abs_scale)
                                        : omp::integrate_panels(f, a, b, panels, rel_tol, abs_scale);
}

}  // namespace polariton
