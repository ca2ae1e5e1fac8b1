#pragma once

// Root finding for functions of the form
//
//   F(z) = offset + slope * z + sum_j w_j / (s_j - z)
//
// which are strictly monotone between consecutive poles s_j whenever all
// weights share the sign of `slope` (or slope == 0). Every dispersion-type
// equation in the library reduces to this shape, so the roots can always be
// bracketed by poles and polished without ever leaving their interval.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace polariton::detail {

struct PoleFunction {
  double offset = 0.0;
  double slope = 0.0;
  std::span<const double> poles;
  std::span<const double> weights;
};

/// Root stored relative to an anchor (an interval end point). Distances to the
/// anchor pole are then carried with full relative precision.
struct AnchoredRoot {
  double anchor = 0.0;
  double delta = 0.0;
  int iterations = 0;
  double z() const { return anchor + delta; }
  /// s - z evaluated without cancellation when s is the anchor.
  double detuning(double pole) const { return (pole - anchor) - delta; }
};

inline void evaluate(const PoleFunction& f, double anchor, double delta, double& value, double& slope) {
  value = f.offset + f.slope * (anchor + delta);
  slope = f.slope;
  for (std::size_t j = 0; j < f.poles.size(); ++j) {
    const double d = (f.poles[j] - anchor) - delta;
    value += f.weights[j] / d;
    slope += f.weights[j] / (d * d);
  }
}

/// Unique root of a monotone PoleFunction inside the open interval (lo, hi).
/// Newton steps are safeguarded by the shrinking bracket, so the iteration
/// cannot escape to a neighbouring branch.
inline AnchoredRoot monotone_root(const PoleFunction& f, double lo, double hi, double anchor, double guess) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  AnchoredRoot root{anchor, 0.0, 0};
  double blo = lo - anchor;
  double bhi = hi - anchor;

  auto bisect = [&] {
    if (blo > 0.0 && bhi / blo > 1e3) return std::sqrt(blo * bhi);
    if (bhi < 0.0 && blo / bhi > 1e3) return -std::sqrt(blo * bhi);
    return 0.5 * (blo + bhi);
  };

  double d = guess - anchor;
  if (!(d > blo && d < bhi)) d = bisect();

  // Direction of monotonicity, from the sign of the pole weights.
  bool increasing = f.slope > 0.0;
  for (double w : f.weights) {
    if (w != 0.0) {
      increasing = w > 0.0;
      break;
    }
  }

  for (int it = 0; it < 500; ++it) {
    root.iterations = it + 1;
    double value = 0.0, fp = 0.0;
    evaluate(f, anchor, d, value, fp);
    if (value == 0.0) break;
    const bool root_above = increasing ? value < 0.0 : value > 0.0;
    (root_above ? blo : bhi) = d;

    double next = d - value / fp;
    if (!(next > blo && next < bhi)) next = bisect();
    const double step = std::abs(next - d);
    d = next;
    if (step <= 2.0 * eps * std::abs(d)) break;
    if (bhi - blo <= 4.0 * eps * std::max(std::abs(blo), std::abs(bhi))) break;
  }
  root.delta = d;
  return root;
}

/// monotone_root anchored at whichever allowed end point the root lies
/// closer to. An end point should be allowed when it is a pole (or zero), so
/// that the distance to it keeps full relative precision.
inline AnchoredRoot bracketed_root(const PoleFunction& f, double lo, bool anchor_lo, double hi, bool anchor_hi,
                                   double guess) {
  if (!(guess > lo && guess < hi)) guess = 0.5 * (lo + hi);
  const bool near_lo = guess - lo < hi - guess;
  double anchor = (anchor_lo && (near_lo || !anchor_hi)) ? lo : (anchor_hi ? hi : lo);
  auto root = monotone_root(f, lo, hi, anchor, guess);
  if (anchor_lo && anchor_hi) {
    const bool root_near_lo = root.z() - lo < hi - root.z();
    const double better = root_near_lo ? lo : hi;
    if (better != anchor) root = monotone_root(f, lo, hi, better, root.z());
  }
  return root;
}

}  // namespace polariton::detail
