#include "helpers.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include "uext/errors.hpp"

namespace testutil {

ExtensionTensor from_slices(const std::vector<Matrix>& slices, Labeling lab) {
  int n = static_cast<int>(slices.size());
  ExtensionTensor w(n, lab);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational v = slices[i - 1](k - 1, j - 1);
        if (v.is_zero()) continue;
        Rational existing = w.at(i, j, k);
        if (!existing.is_zero() && existing != v)
          throw std::logic_error("slice fixture is not symmetric");
        w.set(i, j, k, v);
      }
  return w;
}

ExtensionTensor z3_mult_fixture() {
  Matrix w0(3, 3), w2(3, 3);
  w0(0, 0) = 1; w0(0, 1) = 1; w0(0, 2) = 1;
  w2(0, 0) = 1; w2(1, 2) = 1; w2(2, 1) = 1;
  return from_slices({w0, Matrix::identity(3), w2}, Labeling::semisimple);
}

Matrix z3_change_rows() {
  Matrix a(3, 3);
  a(0, 0) = 1;
  a(1, 0) = -1; a(1, 1) = Rational(1, 2); a(1, 2) = Rational(1, 2);
  a(2, 1) = Rational(1, 2); a(2, 2) = Rational(-1, 2);
  return a;
}

std::vector<Matrix> z4_n_matrices() {
  Matrix n2(3, 3), n3(3, 3);
  n2(1, 0) = 1; n2(1, 2) = 1;
  n3(0, 2) = 1; n3(1, 1) = 1; n3(2, 0) = 1;
  return {Matrix::identity(3), n2, n3};
}

Matrix z4_change_rows() {
  Matrix a(4, 4);
  a(0, 0) = 1;
  for (int i = 1; i < 4; ++i) {
    a(i, 0) = -1;
    a(i, i) = 1;
  }
  return a;
}

Matrix z4_f_change_rows() {
  Matrix a(3, 3);
  a(0, 0) = 1;
  a(1, 0) = Rational(1, 2); a(1, 2) = Rational(-1, 2);
  a(2, 1) = 1;
  return a;
}

std::vector<Matrix> z4_f_matrices() {
  Matrix f2(3, 3), f3(3, 3);
  f2(1, 0) = 1; f2(1, 1) = 1;
  f3(2, 0) = 1;
  return {Matrix::identity(3), f2, f3};
}

std::vector<Matrix> z4_m_matrices() {
  Matrix m1(2, 2), m2(2, 2);
  m1(0, 0) = 1;
  return {m1, m2};
}

int Rng::uniform(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(eng);
}

Rational Rng::rational(int bound) {
  int num = uniform(-bound, bound);
  int den = uniform(1, 3);
  return Rational(num, den);
}

Rational Rng::nonzero_rational(int bound) {
  for (;;) {
    Rational r = rational(bound);
    if (!r.is_zero()) return r;
  }
}

ExtensionTensor poly_quotient_tensor(const std::vector<Rational>& c) {
  int d = static_cast<int>(c.size());
  if (d < 1) throw std::logic_error("need a positive degree");

  // reps[m] = coordinates of t^m in the basis 1..t^{d-1}.
  std::vector<Vector> reps;
  for (int m = 0; m < d; ++m) reps.push_back(basis_vector(d, m + 1));
  for (int m = d; m <= 2 * d - 2; ++m) {
    const Vector& prev = reps[m - 1];
    Vector next(d, Rational(0));
    for (int t = 0; t + 1 < d; ++t) next[t + 1] = prev[t];
    const Rational& top = prev[d - 1]; // t * t^{d-1} = sum_i c_i t^i
    if (!top.is_zero())
      for (int t = 0; t < d; ++t) next[t] += top * c[t];
    reps.push_back(std::move(next));
  }

  ExtensionTensor w(d, Labeling::semisimple);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      for (int k = 0; k < d; ++k)
        if (!reps[a + b][k].is_zero()) w.set(a + 1, b + 1, k + 1, reps[a + b][k]);
  return w;
}

Matrix random_invertible(int n, Rng& rng, int ops) {
  Matrix m = Matrix::identity(n);
  if (n == 1) {
    m(0, 0) = rng.nonzero_rational();
    return m;
  }
  for (int t = 0; t < ops; ++t) {
    int r1 = rng.uniform(0, n - 1);
    int r2 = rng.uniform(0, n - 1);
    if (r1 == r2) {
      Rational s = rng.nonzero_rational(2);
      for (int c = 0; c < n; ++c) m(r1, c) *= s;
    } else {
      Rational s = rng.rational(2);
      for (int c = 0; c < n; ++c) m(r1, c) += s * m(r2, c);
    }
  }
  return m;
}

ExtensionTensor direct_sum(const ExtensionTensor& a, const ExtensionTensor& b) {
  ExtensionTensor out(a.n() + b.n(), Labeling::solvable);
  for (const auto& [key, v] : a.entries()) out.set(key[0], key[1], key[2], v);
  for (const auto& [key, v] : b.entries())
    out.set(key[0] + a.n(), key[1] + a.n(), key[2] + a.n(), v);
  return out;
}

std::vector<ExtensionTensor> tensor_zoo(int max_n, Rng& rng, size_t count) {
  std::vector<ExtensionTensor> base;
  for (int n = 1; n <= max_n; ++n) base.push_back(leibnitz(n, rng.nonzero_rational()));
  for (int n = 2; n + 1 <= max_n; ++n) {
    base.push_back(lambda_family(n, rng.rational(), rng.nonzero_rational()));
    base.push_back(lambda_family(n, rng.nonzero_rational(), rng.rational()));
  }
  for (int d = 1; d <= max_n; ++d) {
    std::vector<Rational> c;
    for (int t = 0; t < d; ++t) c.push_back(rng.rational(3));
    base.push_back(poly_quotient_tensor(c));
  }
  for (int p = 2; p <= max_n; ++p) {
    base.push_back(monoid_to_tensor(zp_additive(p)));
    base.push_back(monoid_to_tensor(zp_multiplicative(p)));
  }
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    SECensus census = enumerate_se(n);
    for (size_t t = 0; t < census.tables.size(); t += 2)
      base.push_back(monoid_to_tensor(census.tables[t]));
  }
  if (max_n >= 4) {
    base.push_back(crmhd(rng.nonzero_rational()));
    base.push_back(direct_sum(leibnitz(2, Rational(1)),
                              poly_quotient_tensor({rng.rational()})));
  }

  std::vector<ExtensionTensor> zoo;
  size_t i = 0;
  while (zoo.size() < count) {
    const ExtensionTensor& t = base[i % base.size()];
    if (i < base.size()) {
      zoo.push_back(t);
    } else {
      BasisChange b(random_invertible(t.n(), rng));
      zoo.push_back(transform(t, b));
    }
    ++i;
  }
  return zoo;
}

std::optional<std::array<int, 3>> find_associativity_failure(const ExtensionTensor& w) {
  int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int p = 1; p <= n; ++p) {
          Rational left, right; // ((e_i e_j) e_k)_p and (e_i (e_j e_k))_p
          for (int s = 1; s <= n; ++s) {
            left += w.at(i, j, s) * w.at(s, k, p);
            right += w.at(j, k, s) * w.at(i, s, p);
          }
          if (left != right) return std::array<int, 3>{i, j, k};
        }
  return std::nullopt;
}

ExtensionTensor mutate_invalid(const ExtensionTensor& w, Rng& rng, int tries) {
  for (int t = 0; t < tries; ++t) {
    ExtensionTensor m = w;
    int i = rng.uniform(1, w.n());
    int j = rng.uniform(1, w.n());
    int k = rng.uniform(1, w.n());
    Rational v = rng.rational(3);
    if (v == m.at(i, j, k)) continue;
    m.set(i, j, k, v);
    if (!validate(m).valid()) return m;
  }
  throw std::logic_error("no invalidating mutation found");
}

Cochain random_cochain(int n, int degree, Rng& rng) {
  Cochain c(n, degree);
  for (auto& v : c.values()) v = rng.rational(3);
  return c;
}

std::string temp_dir() {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path base = fs::temp_directory_path() / "uext-tests";
  fs::path dir = base / ("case-" + std::to_string(counter++) + "-" +
                         std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir.string();
}

} // namespace testutil
