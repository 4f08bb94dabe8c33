#pragma once

#include <vector>

#include "uext/matrix.hpp"
#include "uext/rational.hpp"

namespace uext {

/// Polynomial over the rationals, coefficients stored by ascending degree.
/// The zero polynomial has an empty coefficient list (degree -1).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k <= degree() ? c_[k] : Rational(0); }

  Rational eval(const Rational& t) const;
  Matrix eval(const Matrix& m) const; // Horner over square matrices

  /// Quotient and remainder of division by (t - root).
  std::pair<Polynomial, Rational> divide_linear(const Rational& root) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void normalize();
  std::vector<Rational> c_;
};

/// det(tI - M) by the Faddeev-LeVerrier recursion, exact.
Polynomial char_poly(const Matrix& m);

/// All rational roots with exact multiplicities, sorted ascending.
/// Candidates come from the rational root theorem on the integer-cleared
/// polynomial; multiplicities from repeated synthetic division.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

/// Canonical basis of ker((M - lambda I)^n); empty when lambda is not an
/// eigenvalue.
std::vector<Vector> generalized_eigenspace(const Matrix& m, const Rational& lambda);

} // namespace uext
