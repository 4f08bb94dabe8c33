#include "uext/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "uext/errors.hpp"

namespace uext {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) throw DimensionMismatch("polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * m + Matrix::identity(m.rows()).scaled(*it);
  return acc;
}

std::pair<Polynomial, Rational> Polynomial::divide_linear(const Rational& root) const {
  if (is_zero()) return {Polynomial(), Rational(0)};
  int n = degree();
  std::vector<Rational> q(static_cast<size_t>(std::max(n, 0)));
  Rational carry;
  for (int k = n; k >= 1; --k) {
    carry = c_[k] + carry * root;
    q[k - 1] = carry;
  }
  Rational rem = c_[0] + carry * root;
  return {Polynomial(std::move(q)), rem};
}

Polynomial char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char poly of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: B_0 = I, a_k = -tr(M B_{k-1})/k, B_k = M B_{k-1} + a_k I.
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  coeffs[n] = 1;
  Matrix b = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    Matrix mb = m * b;
    Rational tr;
    for (int i = 0; i < n; ++i) tr += mb(i, i);
    Rational a = -tr / Rational(k);
    coeffs[n - k] = a;
    if (k < n) b = mb + Matrix::identity(n).scaled(a);
  }
  return Polynomial(std::move(coeffs));
}

namespace {

// Exact factorization: trial division, then Miller-Rabin plus Pollard-Brent
// rho on the cofactor. Inputs here are coefficient-sized, never huge.
void factor_into(mpz_class n, std::map<mpz_class, int>& out);

mpz_class pollard_brent(const mpz_class& n) {
  // Deterministic restarts; n is odd, composite, not a prime power caught earlier.
  for (unsigned c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) { d = n; break; } // cycle; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (mpz_class p = 2; p <= 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, int> factors;
  factor_into(n, factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    size_t base = divs.size();
    if (base * (static_cast<size_t>(e) + 1) > (size_t{1} << 22))
      throw CapExceeded("divisor enumeration too large");
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;

  // Peel off roots at zero first.
  Polynomial q = p;
  int zero_mult = 0;
  while (q.degree() >= 1 && q.coeff(0).is_zero()) {
    auto [quot, rem] = q.divide_linear(Rational(0));
    q = quot;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (q.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // Clear denominators to a primitive integer polynomial.
  mpz_class den_lcm = 1;
  for (const Rational& c : q.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ic;
  ic.reserve(q.coeffs().size());
  for (const Rational& c : q.coeffs()) {
    mpq_class scaled = c.raw() * mpq_class(den_lcm);
    ic.push_back(scaled.get_num());
  }
  mpz_class a0 = ic.front(), an = ic.back();

  std::set<Rational> candidates;
  for (const mpz_class& num : divisors(a0))
    for (const mpz_class& den : divisors(an)) {
      mpq_class r(num, den);
      r.canonicalize();
      candidates.insert(Rational(r));
      candidates.insert(Rational(mpq_class(-r)));
    }

  for (const Rational& cand : candidates) {
    if (!q.eval(cand).is_zero()) continue;
    int mult = 0;
    Polynomial rest = q;
    while (true) {
      auto [quot, rem] = rest.divide_linear(cand);
      if (!rem.is_zero()) break;
      rest = quot;
      ++mult;
      if (rest.degree() < 1) break;
    }
    roots.emplace_back(cand, mult);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Vector> generalized_eigenspace(const Matrix& m, const Rational& lambda) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigenspace of non-square matrix");
  Matrix shifted = m - Matrix::identity(m.rows()).scaled(lambda);
  return nullspace(shifted.pow(m.rows()));
}

} // namespace uext
