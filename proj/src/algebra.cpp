#include "uext/algebra.hpp"

#include <algorithm>

#include "uext/errors.hpp"

namespace uext {

CommAlgebra::CommAlgebra(ExtensionTensor w) : w_(std::move(w)) {
  ValidationReport rep = validate(w_);
  if (!rep.valid())
    throw DomainError("tensor does not define a commutative associative algebra (" +
                      std::to_string(rep.violations.size()) + " violation(s))");
}

AlgElement CommAlgebra::multiply(const AlgElement& x, const AlgElement& y) const {
  int n = w_.n();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw DimensionMismatch("element coordinate length");
  AlgElement z(n);
  for (const auto& [key, v] : w_.entries()) {
    auto [i, j, s] = key;
    Rational c = x[i - 1] * y[j - 1];
    if (i != j) c += x[j - 1] * y[i - 1];
    if (!c.is_zero()) z[s - 1] += v * c;
  }
  return z;
}

Matrix CommAlgebra::regular_rep(const AlgElement& x) const {
  int n = w_.n();
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("element coordinate length");
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i)
    if (!x[i - 1].is_zero()) m = m + w_.slice(i).scaled(x[i - 1]);
  return m;
}

AlgElement CommAlgebra::basis_product(int i, int j) const {
  int n = w_.n();
  AlgElement z(n);
  for (int s = 1; s <= n; ++s) z[s - 1] = w_.at(i, j, s);
  return z;
}

std::vector<std::vector<Vector>> power_filtration(const CommAlgebra& a) {
  int n = a.n();
  std::vector<Vector> current;
  for (int i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    current.push_back(std::move(e));
  }
  std::vector<std::vector<Vector>> result{current};
  while (true) {
    std::vector<Vector> products;
    for (const Vector& b : current)
      for (int j = 1; j <= n; ++j) {
        Vector ej(n);
        ej[j - 1] = 1;
        products.push_back(a.multiply(b, ej));
      }
    std::vector<Vector> next = span_basis(products);
    size_t next_dim = next.size();
    result.push_back(next);
    if (next_dim == current.size() || next_dim == 0) break;
    current = std::move(next);
  }
  return result;
}

std::pair<bool, std::optional<int>> is_nilpotent(const CommAlgebra& a) {
  auto filt = power_filtration(a);
  if (filt.back().empty()) return {true, static_cast<int>(filt.size())};
  return {false, std::nullopt};
}

std::optional<AlgElement> find_unit(const CommAlgebra& a) {
  int n = a.n();
  // Rows indexed by (j,k): sum_i x_i W^{ij}_k = delta^j_k.
  Matrix sys(n * n, n);
  Vector rhs(static_cast<size_t>(n) * n);
  for (int j = 1; j <= n; ++j) {
    Matrix sj = a.tensor().slice(j); // (k, i) entry would be W^{ji}_k = W^{ij}_k
    for (int k = 1; k <= n; ++k) {
      int row = (j - 1) * n + (k - 1);
      for (int i = 1; i <= n; ++i) sys(row, i - 1) = sj(k - 1, i - 1);
      rhs[row] = (j == k) ? 1 : 0;
    }
  }
  return solve(sys, rhs);
}

namespace {

// Matrix of the action of S on the invariant subspace spanned by `basis`,
// in the coordinates of that basis.
Matrix restrict_to(const Matrix& s, const std::vector<Vector>& basis) {
  int d = static_cast<int>(basis.size());
  Matrix cols = Matrix::from_rows(basis).transpose(); // n x d
  Matrix r(d, d);
  for (int t = 0; t < d; ++t) {
    Vector image = s.apply(basis[t]);
    auto coords = solve(cols, image);
    if (!coords)
      throw Error("internal: subspace is not invariant under a slice matrix");
    for (int u = 0; u < d; ++u) r(u, t) = (*coords)[u];
  }
  return r;
}

Vector to_global(const std::vector<Vector>& basis, const Vector& coords) {
  Vector v(basis.empty() ? 0 : basis[0].size());
  for (size_t u = 0; u < basis.size(); ++u)
    if (!coords[u].is_zero())
      for (size_t t = 0; t < v.size(); ++t) v[t] += coords[u] * basis[u][t];
  return v;
}

// Primary decomposition of a block under one restricted slice: one piece
// per rational eigenvalue (ascending), plus the kernel of the rationally
// rootless cofactor, if any.
std::vector<std::vector<Vector>> refine_block(const Matrix& restricted,
                                              const std::vector<Vector>& basis) {
  Polynomial cp = char_poly(restricted);
  auto roots = rational_roots(cp);
  int covered = 0;
  for (const auto& [root, mult] : roots) covered += mult;
  int d = static_cast<int>(basis.size());
  size_t piece_count = roots.size() + (covered < d ? 1 : 0);
  if (piece_count <= 1) return {basis}; // nothing to refine

  std::vector<std::vector<Vector>> pieces;
  for (const auto& [root, mult] : roots) {
    Matrix shifted = restricted - Matrix::identity(d).scaled(root);
    std::vector<Vector> kernel = nullspace(shifted.pow(mult));
    std::vector<Vector> global;
    for (const Vector& c : kernel) global.push_back(to_global(basis, c));
    pieces.push_back(std::move(global));
  }
  if (covered < d) {
    Polynomial q = cp;
    for (const auto& [root, mult] : roots)
      for (int t = 0; t < mult; ++t) q = q.divide_linear(root).first;
    std::vector<Vector> kernel = nullspace(q.eval(restricted));
    std::vector<Vector> global;
    for (const Vector& c : kernel) global.push_back(to_global(basis, c));
    pieces.push_back(std::move(global));
  }
  return pieces;
}

} // namespace

CanonicalForm canonicalize(const CommAlgebra& a) {
  auto filt = power_filtration(a);
  if (!filt.back().empty())
    throw NotNilpotent("algebra is not nilpotent; no canonical solvable form");

  std::vector<Vector> new_basis;
  for (size_t p = 0; p + 1 < filt.size(); ++p) {
    const auto& layer = filt[p];
    const auto& deeper = filt[p + 1];
    // Greedy complement of the deeper layer, drawn from the canonical
    // basis of this layer (for p = 0 that is the standard basis).
    std::vector<Vector> acc = deeper;
    int rank = span_rank(acc);
    for (const Vector& cand : layer) {
      acc.push_back(cand);
      int r = span_rank(acc);
      if (r > rank) {
        rank = r;
        new_basis.push_back(cand);
      } else {
        acc.pop_back();
      }
    }
  }
  BasisChange change = BasisChange::from_rows(new_basis);
  ExtensionTensor canon = transform(a.tensor(), change);
  if (!is_canonical_solvable(canon))
    throw Error("internal: adapted basis did not yield canonical form");
  canon.set_labeling(Labeling::solvable);
  return {std::move(change), std::move(canon)};
}

SplitReport split(const CommAlgebra& a) {
  int n = a.n();
  std::vector<std::vector<Vector>> blocks{standard_basis(n)};

  std::vector<Matrix> slices;
  for (int i = 1; i <= n; ++i) slices.push_back(a.tensor().slice(i));

  for (const Matrix& s : slices) {
    std::vector<std::vector<Vector>> next;
    for (const auto& block : blocks) {
      if (block.size() == 1) {
        next.push_back(block);
        continue;
      }
      Matrix r = restrict_to(s, block);
      for (auto& piece : refine_block(r, block)) next.push_back(std::move(piece));
    }
    blocks = std::move(next);
  }

  // Completeness: every restricted slice must factor fully over Q.
  bool complete = true;
  for (const auto& block : blocks) {
    for (const Matrix& s : slices) {
      Matrix r = restrict_to(s, block);
      auto roots = rational_roots(char_poly(r));
      int covered = 0;
      for (const auto& [root, mult] : roots) covered += mult;
      if (covered < static_cast<int>(block.size())) {
        complete = false;
        break;
      }
    }
    if (!complete) break;
  }

  std::vector<Vector> all_rows;
  for (const auto& block : blocks)
    for (const Vector& v : block) all_rows.push_back(v);
  BasisChange change = BasisChange::from_rows(all_rows);
  ExtensionTensor transformed = transform(a.tensor(), change);

  // Block membership of each new index, for the ideal check.
  std::vector<int> block_of(n + 1, -1);
  {
    int idx = 1;
    for (size_t b = 0; b < blocks.size(); ++b)
      for (size_t t = 0; t < blocks[b].size(); ++t) block_of[idx++] = static_cast<int>(b);
  }
  for (const auto& [key, v] : transformed.entries()) {
    (void)v;
    auto [i, j, k] = key;
    if (block_of[i] != block_of[j] || block_of[i] != block_of[k])
      throw Error("internal: split blocks are not ideals");
  }

  SplitReport report{{}, std::move(change), complete};
  int lo = 1;
  for (const auto& block : blocks) {
    int d = static_cast<int>(block.size());
    report.blocks.push_back({d, subtensor(transformed, lo, lo + d - 1)});
    lo += d;
  }
  return report;
}

} // namespace uext
