#include "uext/matrix.hpp"

#include <ostream>
#include <sstream>

#include "uext/errors.hpp"

namespace uext {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_)
      throw DimensionMismatch("ragged row list");
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t r = 0; r < v.size(); ++r) m(static_cast<int>(r), 0) = v[r];
  return m;
}

Rational& Matrix::operator()(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw IndexOutOfRange("matrix index out of range");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

const Rational& Matrix::operator()(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw IndexOutOfRange("matrix index out of range");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

Vector Matrix::row(int r) const {
  Vector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::col(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix mul");
  Matrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) m(r, c) += x * o(k, c);
    }
  return m;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix apply");
  Vector out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::pow(int k) const {
  if (rows_ != cols_) throw DimensionMismatch("matrix pow");
  Matrix result = identity(rows_);
  for (int i = 0; i < k; ++i) result = result * (*this);
  return result;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "[") << m(r, c);
    os << "]" << (r + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.r = m;
  Matrix& r = res.r;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int pivot = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < r.cols(); ++c) std::swap(r(pivot, c), r(lead, c));
    Rational inv = Rational(1) / r(lead, col);
    for (int c = 0; c < r.cols(); ++c) r(lead, c) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      Rational f = r(i, col);
      for (int c = 0; c < r.cols(); ++c) r(i, c) -= f * r(lead, c);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

std::vector<Vector> nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (int pr = 0; pr < rr.rank; ++pr) v[rr.pivots[pr]] = -rr.r(pr, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  for (int i = 0; i < n; ++i)
    if (i >= rr.rank || rr.pivots[i] != i)
      throw SingularMatrix("matrix is singular");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = rr.r(r, n + c);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("solve rhs size");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  for (int p : rr.pivots)
    if (p == m.cols()) return std::nullopt; // pivot in the rhs column
  Vector x(m.cols());
  for (int pr = 0; pr < rr.rank; ++pr) x[rr.pivots[pr]] = rr.r(pr, m.cols());
  return x;
}

Vector basis_vector(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("basis vector index out of range");
  Vector v(n);
  v[i - 1] = 1;
  return v;
}

std::vector<Vector> standard_basis(int n) {
  std::vector<Vector> basis;
  basis.reserve(n);
  for (int i = 1; i <= n; ++i) basis.push_back(basis_vector(n, i));
  return basis;
}

int span_rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rref(Matrix::from_rows(vectors)).rank;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  RrefResult rr = rref(Matrix::from_rows(vectors));
  std::vector<Vector> basis;
  for (int i = 0; i < rr.rank; ++i) basis.push_back(rr.r.row(i));
  return basis;
}

} // namespace uext
