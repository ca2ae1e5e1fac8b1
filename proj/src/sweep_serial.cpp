#include <algorithm>
#include <cmath>
#include <vector>

#include "polariton/sweep.hpp"
#include "quadrature.hpp"

namespace polariton::serial {

std::vector<std::vector<BranchPoint>> dispersion_sweep(const MaterialSpec& spec, std::span<const double> ks) {
  std::vector<std::vector<BranchPoint>> out;
  out.reserve(ks.size());
  for (double k : ks) out.push_back(solve_branches(spec, k));
  return out;
}

std::vector<SumRuleReport> sum_rule_sweep(const MaterialSpec& spec, std::span<const double> ks) {
  std::vector<SumRuleReport> out;
  out.reserve(ks.size());
  for (double k : ks) out.push_back(sum_rule_report(spec, k));
  return out;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels, double rel_tol, double abs_scale) {
  const int n = std::max(panels, 1);
  const double h = (b - a) / n;
  std::vector<detail::SimpsonPanel> coarse;
  coarse.reserve(static_cast<std::size_t>(n));
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lo = a + i * h;
    const double hi = i + 1 == n ? b : lo + h;
    const auto p = detail::simpson_panel(f, lo, hi);
    scale += (hi - lo) / 6.0 * (std::abs(p.fa) + 4.0 * std::abs(p.fm) + std::abs(p.fb));
    coarse.push_back(p);
  }
  const double tol = rel_tol * std::max(scale, abs_scale) / n;
  double total = 0.0;
  for (const auto& p : coarse) total += detail::adaptive_simpson(f, p, tol, detail::kMaxSimpsonDepth);
  return total;
}

}  // namespace polariton::serial
