#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uext/matrix.hpp"
#include "uext/tensor.hpp"

namespace uext {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c^k_{ij} e_k, antisymmetric in (i, j).
/// Construction paths verify antisymmetry (by storage) and the Jacobi
/// identity on all basis triples.
class LieAlgebra {
public:
  using Key = std::array<int, 3>; // (i, j, k) with i < j

  LieAlgebra(int dim, std::string name);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::map<Key, Rational>& constants() const { return c_; }

  /// Antisymmetric store: set_bracket(i,j,k,v) implies c^k_{ji} = -v.
  /// Diagonal (i == j) values must be zero.
  void set_bracket(int i, int j, int k, const Rational& v);

  Rational c(int i, int j, int k) const;

  Vector bracket_basis(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Throws DomainError when the Jacobi identity fails on a basis triple.
  void check_jacobi() const;

  /// Named carriers: "sl2", "so3", "heis3", "gl2", "abelian-k" (k <= 8).
  static LieAlgebra preset(const std::string& name);

private:
  int dim_;
  std::string name_;
  std::map<Key, Rational> c_;
};

/// Element of the extended space: n carrier-dimensional parts.
using ExtElement = std::vector<Vector>;

ExtElement ext_zero(int n, int dim);

/// ([x,y]_W)_s = sum_{i,j} W^{ij}_s [x_i, y_j].
ExtElement extension_bracket(const ExtensionTensor& w, const LieAlgebra& carrier,
                             const ExtElement& x, const ExtElement& y);

struct JacobiReport {
  bool holds = true;
  enum class Failure { none, antisymmetry, jacobi };
  Failure failure = Failure::none;
  // Basis elements as (slot, carrier index) pairs, 1-based; the third is
  // meaningful only for jacobi failures.
  std::array<std::pair<int, int>, 3> witness{};
};

/// Brute-force antisymmetry and Jacobi over all basis triples of the
/// extended space. The basis has n * dim elements; the check is refused
/// above max_dim (CapExceeded) since it enumerates (n*dim)^3 triples.
JacobiReport jacobi_check(const ExtensionTensor& w, const LieAlgebra& carrier,
                          int max_dim = 24);

} // namespace uext
