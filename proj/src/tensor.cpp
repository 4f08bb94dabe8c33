#include "uext/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "uext/errors.hpp"

namespace uext {

ExtensionTensor::ExtensionTensor(int n, Labeling labeling) : n_(n), labeling_(labeling) {
  if (n < 1) throw DimensionMismatch("tensor dimension must be at least 1");
}

void ExtensionTensor::check_indices(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
    throw IndexOutOfRange("tensor index out of range (n=" + std::to_string(n_) + ")");
}

Rational ExtensionTensor::at(int i, int j, int k) const {
  check_indices(i, j, k);
  if (i > j) std::swap(i, j);
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? Rational(0) : it->second;
}

void ExtensionTensor::set(int i, int j, int k, const Rational& value) {
  check_indices(i, j, k);
  if (i > j) std::swap(i, j);
  if (value.is_zero())
    entries_.erase({i, j, k});
  else
    entries_[{i, j, k}] = value;
}

Matrix ExtensionTensor::slice(int i) const {
  if (i < 1 || i > n_) throw IndexOutOfRange("slice index out of range");
  Matrix m(n_, n_);
  for (const auto& [key, v] : entries_) {
    auto [a, b, k] = key;
    if (a == i) m(k - 1, b - 1) = v;
    if (b == i && a != b) m(k - 1, a - 1) = v;
  }
  return m;
}

Matrix ExtensionTensor::row_matrix(int k) const {
  if (k < 1 || k > n_) throw IndexOutOfRange("row-matrix index out of range");
  Matrix m(n_, n_);
  for (const auto& [key, v] : entries_) {
    auto [a, b, kk] = key;
    if (kk != k) continue;
    m(a - 1, b - 1) = v;
    m(b - 1, a - 1) = v;
  }
  return m;
}

BasisChange::BasisChange(Matrix a) : a_(std::move(a)), inv_(invert(a_)) {
  if (a_.rows() != a_.cols()) throw DimensionMismatch("basis change must be square");
}

BasisChange BasisChange::from_rows(const std::vector<Vector>& new_basis) {
  return BasisChange(Matrix::from_rows(new_basis));
}

BasisChange BasisChange::inverse() const { return BasisChange(inv_, a_); }

ValidationReport validate(const ExtensionTensor& w) {
  ValidationReport rep;
  int n = w.n();
  std::vector<Matrix> slices;
  slices.reserve(n);
  for (int i = 1; i <= n; ++i) slices.push_back(w.slice(i));
  for (int s = 1; s <= n; ++s)
    for (int q = s + 1; q <= n; ++q) {
      Matrix left = slices[s - 1] * slices[q - 1];
      Matrix right = slices[q - 1] * slices[s - 1];
      if (left == right) continue;
      rep.commuting = false;
      for (int i = 1; i <= n; ++i)
        for (int p = 1; p <= n; ++p) {
          const Rational& lhs = left(i - 1, p - 1);
          const Rational& rhs = right(i - 1, p - 1);
          if (lhs != rhs)
            rep.violations.push_back(
                {Violation::Kind::commutation, {i, s, q, p}, lhs, rhs});
        }
    }
  return rep;
}

ValidationReport validate(const RawTensor& raw) {
  ValidationReport rep;
  std::map<std::array<int, 3>, Rational> oriented;
  for (const auto& e : raw.entries) {
    bool fresh = oriented.insert({{e.i, e.j, e.k}, e.value}).second;
    if (!fresh)
      throw FileFormatError("duplicate tensor entry (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + "," + std::to_string(e.k) + ")");
  }
  ExtensionTensor sym(std::max(raw.n, 1), raw.labeling);
  for (const auto& [key, v] : oriented) {
    auto [i, j, k] = key;
    if (i > j) continue; // handled from the mirror side
    auto mirror = oriented.find({j, i, k});
    if (i != j && mirror != oriented.end() && mirror->second != v) {
      rep.symmetric = false;
      rep.violations.push_back({Violation::Kind::symmetry, {i, j, k, 0}, v, mirror->second});
    }
    sym.set(i, j, k, v);
  }
  // Mirror-only entries (i > j with no (i<j) counterpart).
  for (const auto& [key, v] : oriented) {
    auto [i, j, k] = key;
    if (i <= j) continue;
    if (!oriented.count({j, i, k})) sym.set(j, i, k, v);
  }
  ValidationReport comm = validate(sym);
  rep.commuting = comm.commuting;
  for (auto& viol : comm.violations) rep.violations.push_back(std::move(viol));
  return rep;
}

ExtensionTensor symmetrize_strict(const RawTensor& raw) {
  std::map<std::array<int, 3>, Rational> oriented;
  for (const auto& e : raw.entries) {
    bool fresh = oriented.insert({{e.i, e.j, e.k}, e.value}).second;
    if (!fresh)
      throw FileFormatError("duplicate tensor entry (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + "," + std::to_string(e.k) + ")");
  }
  ExtensionTensor w(raw.n, raw.labeling);
  for (const auto& [key, v] : oriented) {
    auto [i, j, k] = key;
    if (i > j) {
      if (!oriented.count({j, i, k})) w.set(j, i, k, v);
      continue;
    }
    if (i != j) {
      auto mirror = oriented.find({j, i, k});
      if (mirror != oriented.end() && mirror->second != v)
        throw FileFormatError("conflicting mirror entries at (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + ")");
    }
    w.set(i, j, k, v);
  }
  return w;
}

namespace {

// Dense n^3 scratch cube, 1-based indices, for the staged transform.
class Cube {
public:
  explicit Cube(int n) : n_(n), v_(static_cast<size_t>(n) * n * n) {}
  Rational& at(int i, int j, int k) {
    return v_[((static_cast<size_t>(i) - 1) * n_ + (j - 1)) * n_ + (k - 1)];
  }
  const Rational& at(int i, int j, int k) const {
    return v_[((static_cast<size_t>(i) - 1) * n_ + (j - 1)) * n_ + (k - 1)];
  }

private:
  int n_;
  std::vector<Rational> v_;
};

} // namespace

ExtensionTensor transform(const ExtensionTensor& w, const BasisChange& b) {
  int n = w.n();
  if (b.n() != n) throw DimensionMismatch("basis change dimension mismatch");
  const Matrix& a = b.mat();
  const Matrix& ainv = b.inv();

  // Contract one axis at a time: i, then j, then k.
  Cube t1(n);
  for (const auto& [key, v] : w.entries()) {
    auto [i, j, k] = key;
    for (int ip = 1; ip <= n; ++ip) {
      const Rational& c = a(ip - 1, i - 1);
      if (!c.is_zero()) t1.at(ip, j, k) += c * v;
      if (i != j) {
        const Rational& cj = a(ip - 1, j - 1);
        if (!cj.is_zero()) t1.at(ip, i, k) += cj * v;
      }
    }
  }
  Cube t2(n);
  for (int ip = 1; ip <= n; ++ip)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const Rational& x = t1.at(ip, j, k);
        if (x.is_zero()) continue;
        for (int jp = 1; jp <= n; ++jp) {
          const Rational& c = a(jp - 1, j - 1);
          if (!c.is_zero()) t2.at(ip, jp, k) += c * x;
        }
      }
  Cube t3(n);
  for (int ip = 1; ip <= n; ++ip)
    for (int jp = 1; jp <= n; ++jp)
      for (int k = 1; k <= n; ++k) {
        const Rational& x = t2.at(ip, jp, k);
        if (x.is_zero()) continue;
        for (int kp = 1; kp <= n; ++kp) {
          const Rational& c = ainv(k - 1, kp - 1);
          if (!c.is_zero()) t3.at(ip, jp, kp) += c * x;
        }
      }

  ExtensionTensor out(n, w.labeling());
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        assert(t3.at(i, j, k) == t3.at(j, i, k));
        out.set(i, j, k, t3.at(i, j, k));
      }
  return out;
}

ExtensionTensor reduce(const ExtensionTensor& w, int k) {
  if (k < 1 || k >= w.n()) throw DimensionMismatch("reduction count out of range");
  if (!is_canonical_solvable(w))
    throw NotCanonical("reduction requires canonical solvable form");
  int m = w.n() - k;
  ExtensionTensor out(m, w.labeling());
  for (const auto& [key, v] : w.entries()) {
    auto [i, j, s] = key;
    if (i <= m && j <= m && s <= m) out.set(i, j, s, v);
  }
  return out;
}

ExtensionTensor unitize(const ExtensionTensor& w) {
  int n = w.n();
  ExtensionTensor out(n + 1, Labeling::semisimple);
  for (int j = 1; j <= n + 1; ++j) out.set(1, j, j, 1);
  for (const auto& [key, v] : w.entries()) {
    auto [i, j, k] = key;
    out.set(i + 1, j + 1, k + 1, v);
  }
  return out;
}

ExtensionTensor deunitize(const ExtensionTensor& w) {
  int n = w.n();
  if (n < 2) throw NoUnit("nothing left after removing the unit");
  if (!w.slice(1).is_identity())
    throw NoUnit("index 1 is not a unit (slice is not the identity)");
  ExtensionTensor out(n - 1, Labeling::solvable);
  for (const auto& [key, v] : w.entries()) {
    auto [i, j, k] = key;
    if (i >= 2 && j >= 2 && k >= 2) out.set(i - 1, j - 1, k - 1, v);
  }
  return out;
}

bool is_canonical_solvable(const ExtensionTensor& w) {
  for (const auto& [key, v] : w.entries()) {
    (void)v;
    auto [i, j, k] = key;
    if (k <= j) return false; // keys have i <= j, so j = max(i,j)
  }
  return true;
}

int abelian_tail_depth(const ExtensionTensor& w) {
  if (!is_canonical_solvable(w))
    throw NotCanonical("abelian tail is defined for canonical solvable tensors");
  int depth = w.n();
  for (const auto& [key, v] : w.entries()) {
    (void)v;
    auto [i, j, k] = key;
    (void)j;
    (void)k;
    depth = std::min(depth, w.n() - i); // i = min(i,j) for stored keys
  }
  return depth;
}

ExtensionTensor subtensor(const ExtensionTensor& w, int lo, int hi) {
  if (lo < 1 || hi > w.n() || lo > hi) throw IndexOutOfRange("subtensor range");
  auto inside = [&](int x) { return lo <= x && x <= hi; };
  ExtensionTensor out(hi - lo + 1, w.labeling());
  for (const auto& [key, v] : w.entries()) {
    auto [i, j, k] = key;
    int in_count = static_cast<int>(inside(i)) + inside(j) + inside(k);
    if (in_count == 3) {
      out.set(i - lo + 1, j - lo + 1, k - lo + 1, v);
    } else if (inside(i) || inside(j) || inside(k)) {
      throw DomainError("index range " + std::to_string(lo) + ".." + std::to_string(hi) +
                        " is not a closed block");
    }
  }
  return out;
}

} // namespace uext
