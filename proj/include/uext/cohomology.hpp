#pragma once

#include <optional>
#include <vector>

#include "uext/algebra.hpp"
#include "uext/matrix.hpp"
#include "uext/tensor.hpp"

namespace uext {

/// Scalar p-cochain: a multilinear map on p algebra arguments, stored as a
/// dense array over basis multi-indices (each axis 1..n). Degree 0 is a
/// single scalar.
class Cochain {
public:
  Cochain(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }

  /// idx holds `degree` basis indices, each 1-based.
  Rational& at(const std::vector<int>& idx);
  const Rational& at(const std::vector<int>& idx) const;

  const std::vector<Rational>& values() const { return values_; }
  std::vector<Rational>& values() { return values_; }

  bool is_zero() const;

private:
  size_t offset(const std::vector<int>& idx) const;

  int n_;
  int degree_;
  std::vector<Rational> values_;
};

/// (dw)(a_1,...,a_{p+1}) = sum_{k=1}^{p} (-1)^k w(a_1,...,a_k*a_{k+1},...,a_{p+1}).
/// Degree-0 cochains map to the zero 1-cochain. Input degree is capped at 4.
Cochain coboundary(const CommAlgebra& a, const Cochain& w);

/// Symmetric matrix R with sum_s (R^{is} W^{jk}_s - R^{js} W^{ik}_s) = 0 for
/// all i, j, k; the data of a one-dimensional extension. Construction
/// verifies both conditions.
class Cocycle2 {
public:
  Cocycle2(const ExtensionTensor& w, Matrix r);

  const Matrix& mat() const { return r_; }

private:
  Matrix r_;
};

std::vector<Matrix> cocycle_space2(const ExtensionTensor& w);
std::vector<Matrix> coboundary_space2(const ExtensionTensor& w);

struct H2Report {
  int dim_Z2 = 0;
  int dim_B2 = 0;
  int dim_H2 = 0;
  std::vector<Matrix> representatives;   // one cocycle per H^2 basis class
  std::vector<Matrix> coboundary_basis;  // canonical basis of B^2
};

/// Representatives are the rref-canonical basis of the image of Z^2 after
/// eliminating the pivot coordinates of B^2, so output is deterministic.
H2Report h2(const ExtensionTensor& w);

/// (n+1)-dimensional tensor with W'^{ij}_{n+1} = R^{ij} and index n+1
/// annihilating everything. Keeps the labeling of the input.
ExtensionTensor extend_with_cocycle(const ExtensionTensor& w, const Cocycle2& r);

/// One extension per H^2 representative; just the trivial (zero-padded)
/// extension when H^2 = 0.
std::vector<ExtensionTensor> enumerate_extensions(const ExtensionTensor& w);

/// Diagnostic for the coarser equivalence that allows rescaling the added
/// basis vector: the scalar c with r1 = c*r2 modulo coboundaries, if one
/// exists. Returns nullopt otherwise; c = 0 means r1 is itself a coboundary.
std::optional<Rational> scalar_equivalent(const ExtensionTensor& w,
                                          const Matrix& r1, const Matrix& r2);

} // namespace uext
