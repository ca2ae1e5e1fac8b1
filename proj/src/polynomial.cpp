#include "polariton/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "polariton/error.hpp"

namespace polariton {

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<double> coefficients) : coefficients_(coefficients) {
  trim();
}

Polynomial Polynomial::shifted_root(double root) { return Polynomial{root, -1.0}; }
Polynomial Polynomial::constant(double value) { return Polynomial{value}; }
Polynomial Polynomial::identity() { return Polynomial{0.0, 1.0}; }

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0.0) coefficients_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(coefficients_.size()) - 1; }

double Polynomial::leading() const { return coefficients_.empty() ? 0.0 : coefficients_.back(); }

double Polynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::magnitude_at(double z) const {
  double acc = 0.0;
  const double az = std::abs(z);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * az + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<double> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) d[i - 1] = static_cast<double>(i) * coefficients_[i];
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& c : coefficients_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coefficients_.empty() || rhs.coefficients_.empty()) return {};
  std::vector<double> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
  return Polynomial(std::move(out));
}

std::vector<std::complex<double>> Polynomial::companion_roots(double scale) const {
  const int n = degree();
  if (n < 1) return {};
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "companion_roots: scale must be positive");

  // q(w) = p(scale * w) / (lead * scale^n), monic in w.
  std::vector<double> monic(static_cast<std::size_t>(n));
  const double lead = coefficients_.back();
  for (int i = 0; i < n; ++i) monic[static_cast<std::size_t>(i)] = coefficients_[static_cast<std::size_t>(i)] / lead * std::pow(scale, i - n);

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic[static_cast<std::size_t>(i)];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()[i] * scale;
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.real() < b.real(); });
  return roots;
}

}  // namespace polariton
