#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <vector>

#include "polariton/sweep.hpp"
#include "quadrature.hpp"

namespace polariton::omp {

namespace {

// Runs body(i) for i in [0, n) across threads. The first exception thrown by
// any iteration is rethrown on the calling thread once the loop finishes.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(polariton_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<std::vector<BranchPoint>> dispersion_sweep(const MaterialSpec& spec, std::span<const double> ks) {
  std::vector<std::vector<BranchPoint>> out(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) { out[i] = solve_branches(spec, ks[i]); });
  return out;
}

std::vector<SumRuleReport> sum_rule_sweep(const MaterialSpec& spec, std::span<const double> ks) {
  std::vector<SumRuleReport> out(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) { out[i] = sum_rule_report(spec, ks[i]); });
  return out;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels, double rel_tol, double abs_scale) {
  const int n = std::max(panels, 1);
  const double h = (b - a) / n;
  std::vector<detail::SimpsonPanel> coarse(static_cast<std::size_t>(n));
  std::vector<double> magnitude(static_cast<std::size_t>(n));
  parallel_for(coarse.size(), [&](std::size_t i) {
    const double lo = a + static_cast<double>(i) * h;
    const double hi = i + 1 == coarse.size() ? b : lo + h;
    coarse[i] = detail::simpson_panel(f, lo, hi);
    magnitude[i] = (hi - lo) / 6.0 * (std::abs(coarse[i].fa) + 4.0 * std::abs(coarse[i].fm) + std::abs(coarse[i].fb));
  });
  double scale = 0.0;
  for (double m : magnitude) scale += m;
  const double tol = rel_tol * std::max(scale, abs_scale) / n;

  std::vector<double> refined(coarse.size());
  parallel_for(coarse.size(), [&](std::size_t i) {
    refined[i] = detail::adaptive_simpson(f, coarse[i], tol, detail::kMaxSimpsonDepth);
  });
  double total = 0.0;
  for (double r : refined) total += r;
  return total;
}

}  // namespace polariton::omp
