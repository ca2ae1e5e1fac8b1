#pragma once

#include <cmath>
#include <functional>

namespace polariton::detail {

struct SimpsonPanel {
  double a, b;
  double fa, fm, fb;
  double whole;
};

inline SimpsonPanel simpson_panel(const std::function<double(double)>& f, double a, double b) {
  const double m = 0.5 * (a + b);
  SimpsonPanel p{a, b, f(a), f(m), f(b), 0.0};
  p.whole = (b - a) / 6.0 * (p.fa + 4.0 * p.fm + p.fb);
  return p;
}

// Recursive adaptive Simpson with Richardson correction.
inline double adaptive_simpson(const std::function<double(double)>& f, const SimpsonPanel& p, double tol,
                               int depth) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
  const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

inline constexpr int kMaxSimpsonDepth = 30;

}  // namespace polariton::detail
