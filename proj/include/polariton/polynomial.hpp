#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace polariton {

/// Dense real polynomial in the monomial basis, coefficients stored in
/// ascending order: c[0] + c[1] z + ... + c[n] z^n.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  /// (root - z), the building block of every product form used here.
  static Polynomial shifted_root(double root);
  static Polynomial constant(double value);
  /// The monomial z.
  static Polynomial identity();

  int degree() const;
  std::span<const double> coefficients() const { return coefficients_; }
  double operator[](std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : 0.0; }
  double leading() const;

  double operator()(double z) const;
  std::complex<double> operator()(std::complex<double> z) const;

  /// Sum of |c_i| |z|^i; the natural scale of rounding error in Horner's rule.
  double magnitude_at(double z) const;

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  /// All complex roots from the eigenvalues of the companion matrix. The
  /// polynomial is rescaled by `scale` (z = scale * w) before the companion
  /// matrix is formed so that coefficients stay O(1).
  std::vector<std::complex<double>> companion_roots(double scale = 1.0) const;

 private:
  void trim();
  std::vector<double> coefficients_;
};

}  // namespace polariton
