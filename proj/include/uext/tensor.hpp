#pragma once

#include <array>
#include <map>
#include <vector>

#include "uext/matrix.hpp"
#include "uext/rational.hpp"

namespace uext {

/// Display convention for tensor indices in files and reports.
/// Internal indices are always 1..n; semisimple tensors are shown 0-based
/// (index 1, the unit slot, prints as 0).
enum class Labeling { solvable, semisimple };

/// The symmetric (2,1) extension tensor W^{ij}_k on an n-dimensional index
/// space. Only triples with i <= j and nonzero value are stored; the (j,i,k)
/// entry is implied. Operations on tensors are pure; set() exists for
/// construction.
class ExtensionTensor {
public:
  using Key = std::array<int, 3>; // (i, j, k) with i <= j, 1-based

  explicit ExtensionTensor(int n, Labeling labeling = Labeling::solvable);

  int n() const { return n_; }
  Labeling labeling() const { return labeling_; }
  void set_labeling(Labeling l) { labeling_ = l; }

  /// Symmetric lookup, 1-based indices. Missing entries are zero.
  Rational at(int i, int j, int k) const;

  /// Symmetric store; setting zero removes the entry.
  void set(int i, int j, int k, const Rational& value);

  const std::map<Key, Rational>& entries() const { return entries_; }

  /// Slice matrix W^{(i)}: entry (row k, col j) = W^{ij}_k, as a 0-based
  /// n x n matrix.
  Matrix slice(int i) const;

  /// Row matrix W_{(k)}: symmetric, entry (i, j) = W^{ij}_k.
  Matrix row_matrix(int k) const;

  /// Mathematical identity: dimension and entries. Labeling is display
  /// metadata and does not participate.
  friend bool operator==(const ExtensionTensor& a, const ExtensionTensor& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExtensionTensor& a, const ExtensionTensor& b) {
    return !(a == b);
  }

private:
  void check_indices(int i, int j, int k) const;

  int n_;
  Labeling labeling_;
  std::map<Key, Rational> entries_;
};

/// Invertible basis change. mat()(new, old) is the coefficient of old basis
/// vector e^old in the new basis vector: rows are the new basis written in
/// old coordinates.
class BasisChange {
public:
  explicit BasisChange(Matrix a);
  static BasisChange from_rows(const std::vector<Vector>& new_basis);

  int n() const { return a_.rows(); }
  const Matrix& mat() const { return a_; }
  const Matrix& inv() const { return inv_; }
  BasisChange inverse() const;

private:
  BasisChange(Matrix a, Matrix inv) : a_(std::move(a)), inv_(std::move(inv)) {}
  Matrix a_;
  Matrix inv_;
};

struct Violation {
  enum class Kind { symmetry, commutation };
  Kind kind;
  // symmetry: (idx[0], idx[1] -> idx[2]) with lhs = W^{ij}_k, rhs = W^{ji}_k.
  // commutation: (i, s, q, p) with lhs = sum_k W^{sk}_i W^{qp}_k and
  // rhs = sum_k W^{qk}_i W^{sp}_k.
  std::array<int, 4> idx{};
  Rational lhs, rhs;
};

struct ValidationReport {
  bool symmetric = true;
  bool commuting = true;
  std::vector<Violation> violations;
  bool valid() const { return symmetric && commuting; }
};

/// Tensor data as read from a file, orientation preserved, for validation
/// that must report asymmetric input instead of refusing to load it.
struct RawEntry {
  int i, j, k; // internal 1-based
  Rational value;
};
struct RawTensor {
  int n = 0;
  Labeling labeling = Labeling::solvable;
  std::vector<RawEntry> entries;
};

/// Checks the two validity conditions: symmetry (trivially true for the
/// symmetric storage) and pairwise commutation of the slice matrices.
ValidationReport validate(const ExtensionTensor& w);

/// Validation of raw file data: conflicting mirror orientations become
/// symmetry violations; the commutation check runs on the symmetrized
/// tensor. Exact duplicate (i,j,k) keys are a file error, not a violation.
ValidationReport validate(const RawTensor& raw);

/// Strict conversion: errors on duplicate or mirror-conflicting entries.
ExtensionTensor symmetrize_strict(const RawTensor& raw);

/// W'^{i'j'}_{k'} = sum A(i',i) A(j',j) Ainv(k,k') W^{ij}_k.
ExtensionTensor transform(const ExtensionTensor& w, const BasisChange& b);

/// Quotient by the abelian tail: restrict all indices to 1..n-k.
/// Requires canonical solvable form.
ExtensionTensor reduce(const ExtensionTensor& w, int k);

/// Adjoin a unit at internal index 1; result is (n+1)-dimensional,
/// semisimple-labeled.
ExtensionTensor unitize(const ExtensionTensor& w);

/// Remove the unit at internal index 1 (slice must be the identity),
/// cutting that row and column of every slice; result solvable-labeled.
ExtensionTensor deunitize(const ExtensionTensor& w);

/// True iff every stored triple has k > max(i,j).
bool is_canonical_solvable(const ExtensionTensor& w);

/// Largest k such that all products of basis vectors with indices
/// >= n-k+1 vanish. Requires canonical solvable form.
int abelian_tail_depth(const ExtensionTensor& w);

/// Restriction to the index range lo..hi (1-based, inclusive), reindexed
/// from 1. Throws DomainError when entries couple the range to its
/// complement (the range is not a closed block).
ExtensionTensor subtensor(const ExtensionTensor& w, int lo, int hi);

} // namespace uext
