#pragma once

// Cyclic two-sided Jacobi for small hermitian matrices. Unlike QR on the
// tridiagonal form, Jacobi resolves tiny eigenvalues of graded positive
// definite matrices to high relative accuracy, which is what the lowest
// polariton branch at small k needs.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

namespace polariton::detail {

struct HermitianEigen {
  Eigen::VectorXd values;     // ascending
  Eigen::MatrixXcd vectors;   // orthonormal columns
  bool converged = false;
};

inline HermitianEigen jacobi_eigen(Eigen::MatrixXcd a, int max_sweeps = 60) {
  using cd = std::complex<double>;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  HermitianEigen out;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p < n - 1; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        const double app = a(p, p).real(), aqq = a(q, q).real();
        if (r <= eps * std::sqrt(std::abs(app * aqq)) || r == 0.0) continue;
        rotated = true;
        const cd phase = a(p, q) / r;
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = [[c, s], [-s conj(phase), c conj(phase)]] acting on (p, q).
        const cd u_qp = -s * std::conj(phase), u_qq = c * std::conj(phase);
        for (Eigen::Index i = 0; i < n; ++i) {
          const cd aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * c + aiq * u_qp;
          a(i, q) = aip * s + aiq * u_qq;
          const cd vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * c + viq * u_qp;
          v(i, q) = vip * s + viq * u_qq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const cd apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + std::conj(u_qp) * aqj;
          a(q, j) = s * apj + std::conj(u_qq) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    if (!rotated) {
      out.converged = true;
      break;
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]).real();
    out.vectors.col(j) = v.col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace polariton::detail
