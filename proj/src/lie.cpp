#include "uext/lie.hpp"

#include <stdexcept>

#include "uext/errors.hpp"

namespace uext {

LieAlgebra::LieAlgebra(int dim, std::string name)
    : dim_(dim), name_(std::move(name)) {
  if (dim < 1) throw DimensionMismatch("Lie algebra dimension must be positive");
}

void LieAlgebra::set_bracket(int i, int j, int k, const Rational& v) {
  auto in_range = [this](int x) { return x >= 1 && x <= dim_; };
  if (!in_range(i) || !in_range(j) || !in_range(k))
    throw IndexOutOfRange("structure constant index out of range");
  if (i == j) {
    if (!v.is_zero()) throw DomainError("[e_i, e_i] must vanish");
    return;
  }
  Key key = i < j ? Key{i, j, k} : Key{j, i, k};
  Rational stored = i < j ? v : -v;
  if (stored.is_zero())
    c_.erase(key);
  else
    c_[key] = stored;
}

Rational LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return Rational(0);
  Key key = i < j ? Key{i, j, k} : Key{j, i, k};
  auto it = c_.find(key);
  if (it == c_.end()) return Rational(0);
  return i < j ? it->second : -it->second;
}

Vector LieAlgebra::bracket_basis(int i, int j) const {
  Vector out(dim_, Rational(0));
  if (i == j) return out;
  int lo = i < j ? i : j;
  int hi = i < j ? j : i;
  auto it = c_.lower_bound(Key{lo, hi, 0});
  for (; it != c_.end() && it->first[0] == lo && it->first[1] == hi; ++it) {
    Rational v = i < j ? it->second : -it->second;
    out[it->first[2] - 1] += v;
  }
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("bracket operand has wrong dimension");
  Vector out(dim_, Rational(0));
  for (const auto& [key, v] : c_) {
    // key = (i, j, k), i < j; contributes v * (x_i y_j - x_j y_i) to slot k.
    Rational coeff = x[key[0] - 1] * y[key[1] - 1] - x[key[1] - 1] * y[key[0] - 1];
    if (!coeff.is_zero()) out[key[2] - 1] += v * coeff;
  }
  return out;
}

void LieAlgebra::check_jacobi() const {
  auto is_zero_vec = [](const Vector& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = j + 1; k <= dim_; ++k) {
        Vector sum = bracket(bracket_basis(i, j), basis_vector(dim_, k));
        Vector t2 = bracket(bracket_basis(j, k), basis_vector(dim_, i));
        Vector t3 = bracket(bracket_basis(k, i), basis_vector(dim_, j));
        for (int s = 0; s < dim_; ++s) sum[s] += t2[s] + t3[s];
        if (!is_zero_vec(sum))
          throw DomainError("Jacobi identity fails on basis triple (" +
                            std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
      }
}

LieAlgebra LieAlgebra::preset(const std::string& name) {
  if (name == "sl2") {
    // h = e_1, e = e_2, f = e_3: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    LieAlgebra g(3, name);
    g.set_bracket(1, 2, 2, Rational(2));
    g.set_bracket(1, 3, 3, Rational(-2));
    g.set_bracket(2, 3, 1, Rational(1));
    g.check_jacobi();
    return g;
  }
  if (name == "so3") {
    LieAlgebra g(3, name);
    g.set_bracket(1, 2, 3, Rational(1));
    g.set_bracket(2, 3, 1, Rational(1));
    g.set_bracket(3, 1, 2, Rational(1));
    g.check_jacobi();
    return g;
  }
  if (name == "heis3") {
    LieAlgebra g(3, name);
    g.set_bracket(1, 2, 3, Rational(1));
    g.check_jacobi();
    return g;
  }
  if (name == "gl2") {
    // Basis E11, E12, E21, E22 (matrix units).
    LieAlgebra g(4, name);
    g.set_bracket(1, 2, 2, Rational(1));  // [E11, E12] = E12
    g.set_bracket(1, 3, 3, Rational(-1)); // [E11, E21] = -E21
    g.set_bracket(2, 3, 1, Rational(1));  // [E12, E21] = E11 - E22
    g.set_bracket(2, 3, 4, Rational(-1));
    g.set_bracket(2, 4, 2, Rational(1));  // [E12, E22] = E12
    g.set_bracket(3, 4, 3, Rational(-1)); // [E21, E22] = -E21
    g.check_jacobi();
    return g;
  }
  if (name.rfind("abelian-", 0) == 0) {
    std::string suffix = name.substr(8);
    int k = 0;
    try {
      size_t pos = 0;
      k = std::stoi(suffix, &pos);
      if (pos != suffix.size()) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k >= 1 && k <= 8) return LieAlgebra(k, name);
  }
  throw UnknownPreset("unknown carrier preset: " + name);
}

ExtElement ext_zero(int n, int dim) {
  return ExtElement(n, Vector(dim, Rational(0)));
}

ExtElement extension_bracket(const ExtensionTensor& w, const LieAlgebra& carrier,
                             const ExtElement& x, const ExtElement& y) {
  int n = w.n();
  int d = carrier.dim();
  auto check = [&](const ExtElement& e, const char* side) {
    if (static_cast<int>(e.size()) != n)
      throw DimensionMismatch(std::string(side) + " operand has wrong slot count");
    for (const auto& part : e)
      if (static_cast<int>(part.size()) != d)
        throw DimensionMismatch(std::string(side) + " operand part has wrong dimension");
  };
  check(x, "left");
  check(y, "right");

  ExtElement z = ext_zero(n, d);
  for (const auto& [key, v] : w.entries()) {
    int i = key[0], j = key[1], s = key[2];
    Vector term = carrier.bracket(x[i - 1], y[j - 1]);
    if (i != j) {
      Vector mirror = carrier.bracket(x[j - 1], y[i - 1]);
      for (int u = 0; u < d; ++u) term[u] += mirror[u];
    }
    for (int u = 0; u < d; ++u)
      if (!term[u].is_zero()) z[s - 1][u] += v * term[u];
  }
  return z;
}

namespace {

bool ext_is_zero(const ExtElement& e) {
  for (const auto& part : e)
    for (const auto& x : part)
      if (!x.is_zero()) return false;
  return true;
}

ExtElement ext_basis(int n, int d, int slot, int u) {
  ExtElement e = ext_zero(n, d);
  e[slot - 1][u - 1] = Rational(1);
  return e;
}

} // namespace

JacobiReport jacobi_check(const ExtensionTensor& w, const LieAlgebra& carrier,
                          int max_dim) {
  int n = w.n();
  int d = carrier.dim();
  long total = static_cast<long>(n) * d;
  if (total > max_dim)
    throw CapExceeded("extended space dimension " + std::to_string(total) +
                      " exceeds check cap " + std::to_string(max_dim));

  struct BasisRef {
    int slot, u;
  };
  std::vector<BasisRef> basis;
  basis.reserve(total);
  for (int a = 1; a <= n; ++a)
    for (int u = 1; u <= d; ++u) basis.push_back({a, u});

  int nb = static_cast<int>(basis.size());
  std::vector<ExtElement> zs;
  zs.reserve(nb);
  for (int p = 0; p < nb; ++p) zs.push_back(ext_basis(n, d, basis[p].slot, basis[p].u));

  // Pairwise brackets of basis elements, reused by both phases.
  std::vector<std::vector<ExtElement>> pb(nb);
  for (int p = 0; p < nb; ++p) {
    pb[p].reserve(nb);
    for (int q = 0; q < nb; ++q)
      pb[p].push_back(extension_bracket(w, carrier, zs[p], zs[q]));
  }

  JacobiReport report;
  for (int p = 0; p < nb; ++p)
    for (int q = p; q < nb; ++q) {
      ExtElement sum = pb[p][q];
      for (int a = 0; a < n; ++a)
        for (int u = 0; u < d; ++u) sum[a][u] += pb[q][p][a][u];
      if (!ext_is_zero(sum)) {
        report.holds = false;
        report.failure = JacobiReport::Failure::antisymmetry;
        report.witness = {{{basis[p].slot, basis[p].u},
                           {basis[q].slot, basis[q].u},
                           {0, 0}}};
        return report;
      }
    }

  for (int p = 0; p < nb; ++p)
    for (int q = 0; q < nb; ++q)
      for (int r = 0; r < nb; ++r) {
        ExtElement sum = extension_bracket(w, carrier, pb[p][q], zs[r]);
        ExtElement t2 = extension_bracket(w, carrier, pb[q][r], zs[p]);
        ExtElement t3 = extension_bracket(w, carrier, pb[r][p], zs[q]);
        for (int a = 0; a < n; ++a)
          for (int u = 0; u < d; ++u) sum[a][u] += t2[a][u] + t3[a][u];
        if (!ext_is_zero(sum)) {
          report.holds = false;
          report.failure = JacobiReport::Failure::jacobi;
          report.witness = {{{basis[p].slot, basis[p].u},
                             {basis[q].slot, basis[q].u},
                             {basis[r].slot, basis[r].u}}};
          return report;
        }
      }

  return report;
}

} // namespace uext
