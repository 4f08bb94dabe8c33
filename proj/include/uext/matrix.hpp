#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "uext/rational.hpp"

namespace uext {

using Vector = std::vector<Rational>;

/// Dense matrix over the rationals. Row-major, desk scale by design.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix column(const Vector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c);
  const Rational& operator()(int r, int c) const;

  Vector row(int r) const;
  Vector col(int c) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;
  Vector apply(const Vector& v) const; // this * v

  Matrix pow(int k) const; // k >= 0, square only

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix r;
  std::vector<int> pivots; // pivot column per pivot row, in order
  int rank = 0;
};

/// Reduced row-echelon form, deterministic (first nonzero pivot, full
/// elimination, pivots scaled to 1).
RrefResult rref(const Matrix& m);

/// Canonical kernel basis: one vector per free column of rref(m), in
/// ascending free-column order, free coordinate set to 1.
std::vector<Vector> nullspace(const Matrix& m);

/// Inverse via Gauss-Jordan. Throws SingularMatrix when rank < n.
Matrix invert(const Matrix& m);

/// One solution of m x = b, or nullopt when inconsistent. Free variables
/// are set to zero, so the result is deterministic.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// i-th standard basis vector of Q^n, 1-based.
Vector basis_vector(int n, int i);

/// All n standard basis vectors in order.
std::vector<Vector> standard_basis(int n);

/// Rank of the row space spanned by the given vectors.
int span_rank(const std::vector<Vector>& vectors);

/// Canonical (rref) basis of the span of the given vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors);

} // namespace uext
