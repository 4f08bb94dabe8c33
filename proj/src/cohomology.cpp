#include "uext/cohomology.hpp"

#include <string>

#include "uext/errors.hpp"

namespace uext {

namespace {

constexpr int kMaxCochainDegree = 4;
constexpr size_t kMaxCochainEntries = size_t{1} << 22;

size_t pow_size(int n, int p) {
  size_t s = 1;
  for (int i = 0; i < p; ++i) {
    s *= static_cast<size_t>(n);
    if (s > kMaxCochainEntries)
      throw CapExceeded("cochain storage would exceed " +
                        std::to_string(kMaxCochainEntries) + " entries");
  }
  return s;
}

// Symmetric n x n matrices are coordinatized by pairs (i, j), i <= j,
// in lexicographic order.
int sym_dim(int n) { return n * (n + 1) / 2; }

int sym_coord(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // pairs (1,1)..(1,n) come first, then (2,2)..(2,n), ...
  return (i - 1) * n - (i - 1) * i / 2 + (j - 1);
}

Vector sym_coords(const Matrix& r) {
  int n = r.rows();
  Vector v(sym_dim(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) v[sym_coord(n, i, j)] = r(i - 1, j - 1);
  return v;
}

Matrix sym_matrix(int n, const Vector& v) {
  Matrix r(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      r(i - 1, j - 1) = v[sym_coord(n, i, j)];
      r(j - 1, i - 1) = v[sym_coord(n, i, j)];
    }
  return r;
}

// Rows of the linear system sum_s (R^{is} W^{jk}_s - R^{js} W^{ik}_s) = 0,
// over the symmetric coordinates of R. Rows with i >= j are redundant.
Matrix cocycle_system(const ExtensionTensor& w) {
  int n = w.n();
  int m = sym_dim(n);
  std::vector<Vector> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Vector row(m);
        bool nonzero = false;
        for (int s = 1; s <= n; ++s) {
          Rational wjk = w.at(j, k, s);
          if (!wjk.is_zero()) {
            row[sym_coord(n, i, s)] += wjk;
            nonzero = true;
          }
          Rational wik = w.at(i, k, s);
          if (!wik.is_zero()) {
            row[sym_coord(n, j, s)] -= wik;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  if (rows.empty()) return Matrix(0, m);
  return Matrix::from_rows(rows);
}

bool satisfies(const Matrix& system, const Vector& coords) {
  for (int r = 0; r < system.rows(); ++r) {
    Rational acc;
    for (int c = 0; c < system.cols(); ++c)
      if (!coords[c].is_zero()) acc += system(r, c) * coords[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

} // namespace

Cochain::Cochain(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw DimensionMismatch("cochain needs a positive-dimension algebra");
  if (degree < 0) throw DimensionMismatch("cochain degree must be nonnegative");
  values_.assign(pow_size(n, degree), Rational(0));
}

size_t Cochain::offset(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw DimensionMismatch("cochain index tuple has wrong length");
  size_t off = 0;
  for (int t : idx) {
    if (t < 1 || t > n_) throw IndexOutOfRange("cochain index out of range");
    off = off * n_ + static_cast<size_t>(t - 1);
  }
  return off;
}

Rational& Cochain::at(const std::vector<int>& idx) { return values_[offset(idx)]; }

const Rational& Cochain::at(const std::vector<int>& idx) const {
  return values_[offset(idx)];
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

Cochain coboundary(const CommAlgebra& a, const Cochain& w) {
  if (w.n() != a.n())
    throw DimensionMismatch("cochain dimension does not match the algebra");
  if (w.degree() > kMaxCochainDegree)
    throw CapExceeded("coboundary input degree capped at " +
                      std::to_string(kMaxCochainDegree));
  int n = a.n();
  int p = w.degree();
  Cochain out(n, p + 1);
  if (p == 0) return out;

  const ExtensionTensor& t = a.tensor();
  std::vector<int> idx(p + 1, 1);
  std::vector<int> inner(p);
  while (true) {
    Rational acc;
    int sign = -1;
    for (int k = 1; k <= p; ++k) {
      // Contract slots k, k+1 of the output index through the product.
      for (int pos = 0; pos < k - 1; ++pos) inner[pos] = idx[pos];
      for (int pos = k; pos < p; ++pos) inner[pos] = idx[pos + 1];
      Rational term;
      for (int s = 1; s <= n; ++s) {
        Rational c = t.at(idx[k - 1], idx[k], s);
        if (c.is_zero()) continue;
        inner[k - 1] = s;
        term += c * w.at(inner);
      }
      acc += sign > 0 ? term : -term;
      sign = -sign;
    }
    std::vector<int> oidx(idx);
    out.at(oidx) = acc;

    int pos = p;
    while (pos >= 0 && idx[pos] == n) idx[pos--] = 1;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

std::vector<Matrix> cocycle_space2(const ExtensionTensor& w) {
  Matrix system = cocycle_system(w);
  std::vector<Matrix> basis;
  if (system.rows() == 0) {
    for (const auto& v : standard_basis(sym_dim(w.n())))
      basis.push_back(sym_matrix(w.n(), v));
    return basis;
  }
  for (const auto& v : nullspace(system)) basis.push_back(sym_matrix(w.n(), v));
  return basis;
}

std::vector<Matrix> coboundary_space2(const ExtensionTensor& w) {
  std::vector<Vector> vecs;
  for (int k = 1; k <= w.n(); ++k) {
    Vector v = sym_coords(w.row_matrix(k));
    bool zero = true;
    for (const auto& x : v)
      if (!x.is_zero()) { zero = false; break; }
    if (!zero) vecs.push_back(std::move(v));
  }
  std::vector<Matrix> basis;
  for (const auto& v : span_basis(vecs)) basis.push_back(sym_matrix(w.n(), v));
  return basis;
}

H2Report h2(const ExtensionTensor& w) {
  int n = w.n();
  Matrix system = cocycle_system(w);

  std::vector<Vector> zbasis;
  if (system.rows() == 0)
    zbasis = standard_basis(sym_dim(n));
  else
    zbasis = nullspace(system);

  std::vector<Vector> bvecs;
  for (int k = 1; k <= n; ++k) bvecs.push_back(sym_coords(w.row_matrix(k)));
  RrefResult brref = bvecs.empty() ? RrefResult{} : rref(Matrix::from_rows(bvecs));

  H2Report report;
  report.dim_Z2 = static_cast<int>(zbasis.size());
  report.dim_B2 = brref.rank;
  report.dim_H2 = report.dim_Z2 - report.dim_B2;

  for (int r = 0; r < brref.rank; ++r) {
    Vector row = brref.r.row(r);
    if (!satisfies(system, row))
      throw CoboundaryNotCocycle("row matrix fails the cocycle equations");
    report.coboundary_basis.push_back(sym_matrix(n, row));
  }

  // Reduce each Z^2 basis vector modulo B^2 by clearing the B^2 pivot
  // coordinates, then take the canonical basis of what remains.
  std::vector<Vector> residues;
  for (Vector z : zbasis) {
    for (int r = 0; r < brref.rank; ++r) {
      int pc = brref.pivots[r];
      if (z[pc].is_zero()) continue;
      Rational f = z[pc];
      for (int c = 0; c < static_cast<int>(z.size()); ++c)
        z[c] -= f * brref.r(r, c);
    }
    residues.push_back(std::move(z));
  }
  for (const auto& v : span_basis(residues))
    report.representatives.push_back(sym_matrix(n, v));
  if (static_cast<int>(report.representatives.size()) != report.dim_H2)
    throw Error("internal: representative count disagrees with dim H^2");
  return report;
}

Cocycle2::Cocycle2(const ExtensionTensor& w, Matrix r) : r_(std::move(r)) {
  int n = w.n();
  if (r_.rows() != n || r_.cols() != n)
    throw DimensionMismatch("cocycle matrix has wrong shape");
  if (r_ != r_.transpose()) throw NotCocycle("cocycle matrix is not symmetric");
  if (!satisfies(cocycle_system(w), sym_coords(r_)))
    throw NotCocycle("matrix fails the cocycle equations for this tensor");
}

ExtensionTensor extend_with_cocycle(const ExtensionTensor& w, const Cocycle2& r) {
  int n = w.n();
  ExtensionTensor out(n + 1, w.labeling());
  for (const auto& [key, v] : w.entries()) out.set(key[0], key[1], key[2], v);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.set(i, j, n + 1, r.mat()(i - 1, j - 1));
  return out;
}

std::vector<ExtensionTensor> enumerate_extensions(const ExtensionTensor& w) {
  H2Report report = h2(w);
  std::vector<ExtensionTensor> out;
  if (report.representatives.empty()) {
    out.push_back(extend_with_cocycle(w, Cocycle2(w, Matrix(w.n(), w.n()))));
    return out;
  }
  for (const auto& rep : report.representatives)
    out.push_back(extend_with_cocycle(w, Cocycle2(w, rep)));
  return out;
}

std::optional<Rational> scalar_equivalent(const ExtensionTensor& w,
                                          const Matrix& r1, const Matrix& r2) {
  int n = w.n();
  std::vector<Vector> bvecs;
  for (int k = 1; k <= n; ++k) bvecs.push_back(sym_coords(w.row_matrix(k)));
  RrefResult brref = bvecs.empty() ? RrefResult{} : rref(Matrix::from_rows(bvecs));

  auto residue = [&](const Matrix& r) {
    Vector z = sym_coords(r);
    for (int t = 0; t < brref.rank; ++t) {
      int pc = brref.pivots[t];
      if (z[pc].is_zero()) continue;
      Rational f = z[pc];
      for (int c = 0; c < static_cast<int>(z.size()); ++c)
        z[c] -= f * brref.r(t, c);
    }
    return z;
  };

  Vector a = residue(r1);
  Vector b = residue(r2);
  bool a_zero = true;
  for (const auto& x : a)
    if (!x.is_zero()) { a_zero = false; break; }
  if (a_zero) return Rational(0);

  // Need a = c * b for a single scalar c.
  std::optional<Rational> c;
  for (size_t t = 0; t < a.size(); ++t) {
    if (b[t].is_zero()) {
      if (!a[t].is_zero()) return std::nullopt;
      continue;
    }
    Rational ratio = a[t] / b[t];
    if (c && *c != ratio) return std::nullopt;
    c = ratio;
  }
  return c;
}

} // namespace uext
