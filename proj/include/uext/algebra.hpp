#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uext/matrix.hpp"
#include "uext/polynomial.hpp"
#include "uext/tensor.hpp"

namespace uext {

/// Element of the algebra, as coordinates in the basis {e^i}.
using AlgElement = Vector;

/// The commutative associative algebra attached to a valid extension
/// tensor: e^i * e^j = sum_s W^{ij}_s e^s. Construction re-validates the
/// tensor; the product of a valid tensor is commutative and associative on
/// all basis triples.
class CommAlgebra {
public:
  explicit CommAlgebra(ExtensionTensor w);

  int n() const { return w_.n(); }
  const ExtensionTensor& tensor() const { return w_; }

  AlgElement multiply(const AlgElement& x, const AlgElement& y) const;

  /// Matrix of left multiplication by x; for x = e^i this is the slice
  /// matrix W^{(i)} exactly.
  Matrix regular_rep(const AlgElement& x) const;

  AlgElement basis_product(int i, int j) const; // e^i * e^j

private:
  ExtensionTensor w_;
};

/// Bases of A, A^2, A^3, ... until the dimension stabilizes or reaches
/// zero (the terminal basis is included). Each basis is rref-canonical.
std::vector<std::vector<Vector>> power_filtration(const CommAlgebra& a);

/// (true, least m with A^m = 0) when the power filtration reaches zero,
/// (false, nullopt) otherwise.
std::pair<bool, std::optional<int>> is_nilpotent(const CommAlgebra& a);

/// The unique unit element, or nullopt when the algebra has none.
std::optional<AlgElement> find_unit(const CommAlgebra& a);

struct CanonicalForm {
  BasisChange change;
  ExtensionTensor tensor;
};

/// Basis adapted to the power filtration: first a complement of A^2 in A,
/// then a complement of A^3 in A^2, and so on, each chosen greedily from
/// the canonical layer basis. The transformed tensor satisfies
/// is_canonical_solvable. Throws NotNilpotent when a unit exists or the
/// filtration does not reach zero.
CanonicalForm canonicalize(const CommAlgebra& a);

struct SplitBlock {
  int dim;
  ExtensionTensor tensor;
};

struct SplitReport {
  std::vector<SplitBlock> blocks;
  BasisChange change; // rows are the concatenated block bases
  bool complete;      // false when some restricted slice's char poly does
                      // not factor fully over the rationals
};

/// Common refinement of the generalized eigenspace decompositions of all
/// slice matrices over the rationals. Each block is a two-sided ideal;
/// products across distinct blocks vanish. Children of a refined block are
/// ordered by ascending eigenvalue, with the rationally unsplittable
/// remainder last.
SplitReport split(const CommAlgebra& a);

} // namespace uext
