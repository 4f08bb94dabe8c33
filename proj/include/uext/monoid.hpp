#pragma once

#include <optional>
#include <vector>

#include "uext/rational.hpp"
#include "uext/tensor.hpp"

namespace uext {

/// Multiplication table of a commutative monoid-like structure on the
/// labels 0..n. Kind E demands symmetry and associativity only; kind SE
/// additionally demands f(i,0) = 0 and f(i,j) > max(i,j) whenever
/// f(i,j) != 0 (so 0 is an absorbing element and products climb).
struct MonoidTable {
  enum class Kind { E, SE };

  int n = 0;
  Kind kind = Kind::E;
  std::vector<std::vector<int>> f; // (n+1) x (n+1), row i column j

  static MonoidTable zero(int n, Kind kind);

  int at(int i, int j) const;

  friend bool operator==(const MonoidTable& a, const MonoidTable& b) {
    return a.n == b.n && a.kind == b.kind && a.f == b.f;
  }
};

/// Symmetry and associativity on all triples.
bool validate_efunction(const MonoidTable& t);

/// E-function conditions plus the absorbing zero and the climbing
/// property f(i,j) > max(i,j) for nonzero products.
bool validate_sefunction(const MonoidTable& t);

/// E kind: (n+1)-dimensional tensor W^{ij}_k = delta_k^{f(i,j)} over all
/// labels (semisimple labeling). SE kind: n-dimensional quotient on labels
/// 1..n with f = 0 products mapped to zero (solvable labeling). Throws
/// InvalidTable when the table fails its kind's validator.
ExtensionTensor monoid_to_tensor(const MonoidTable& t);

MonoidTable zp_additive(int p);
MonoidTable zp_multiplicative(int p);

/// f(i,j) = i+j while it fits, else 0. The default keeps the boundary
/// product i+j = n; `strict` zeroes it.
MonoidTable leibnitz_table(int n, bool strict = false);

/// W^{ij}_k = lambda1 for k = i+j <= n, solvable labeling.
ExtensionTensor leibnitz(int n, const Rational& lambda1);

/// (n+1)-dimensional tensor with unit label 0, a lambda1 band at
/// k = i+j <= n-1 and lambda2 on the top layer i+j = n. Semisimple
/// labeling; requires n >= 2.
ExtensionTensor lambda_family(int n, const Rational& lambda1, const Rational& lambda2);

/// The 4-dimensional magnetohydrodynamics bracket tensor: unit label 0
/// and W^{12}_3 = -beta_e.
ExtensionTensor crmhd(const Rational& beta_e);

/// Drop the top label: products equal to n become 0. Output is again an
/// SE table, on labels 0..n-1.
MonoidTable restrict_se(const MonoidTable& t);

struct SECensus {
  int n = 0;
  std::vector<MonoidTable> tables;
};

/// Exhaustive duplicate-free enumeration of SE tables on labels 0..n by
/// backtracking over the free entries (i <= j <= n-1) in lexicographic
/// order with incremental associativity pruning. Deterministic output.
SECensus enumerate_se(int n, int cap = 6);

/// Census post-pass keeping one table per monoid isomorphism class
/// (relabelings fixing 0), the first of each class in enumeration order.
SECensus iso_reduce(const SECensus& census);

/// Search diagnostic: the census table whose tensor equals w, if any.
std::optional<MonoidTable> find_se_match(const ExtensionTensor& w, int cap = 6);

} // namespace uext
