#include "uext/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "uext/errors.hpp"

namespace uext {

MonoidTable MonoidTable::zero(int n, Kind kind) {
  MonoidTable t;
  t.n = n;
  t.kind = kind;
  t.f.assign(n + 1, std::vector<int>(n + 1, 0));
  return t;
}

int MonoidTable::at(int i, int j) const {
  if (i < 0 || i > n || j < 0 || j > n)
    throw IndexOutOfRange("monoid label out of range");
  return f[i][j];
}

namespace {

void check_shape(const MonoidTable& t) {
  if (t.n < 0) throw InvalidTable("negative label count");
  if (static_cast<int>(t.f.size()) != t.n + 1)
    throw InvalidTable("table has wrong row count");
  for (const auto& row : t.f) {
    if (static_cast<int>(row.size()) != t.n + 1)
      throw InvalidTable("table has wrong column count");
    for (int v : row)
      if (v < 0 || v > t.n) throw InvalidTable("table value out of label range");
  }
}

bool symmetric_associative(const MonoidTable& t) {
  int m = t.n;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (t.f[i][j] != t.f[j][i]) return false;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= m; ++c)
        if (t.f[a][t.f[b][c]] != t.f[t.f[a][b]][c]) return false;
  return true;
}

} // namespace

bool validate_efunction(const MonoidTable& t) {
  check_shape(t);
  return symmetric_associative(t);
}

bool validate_sefunction(const MonoidTable& t) {
  check_shape(t);
  for (int i = 0; i <= t.n; ++i)
    if (t.f[i][0] != 0 || t.f[0][i] != 0) return false;
  for (int i = 0; i <= t.n; ++i)
    for (int j = 0; j <= t.n; ++j)
      if (t.f[i][j] != 0 && t.f[i][j] <= std::max(i, j)) return false;
  return symmetric_associative(t);
}

ExtensionTensor monoid_to_tensor(const MonoidTable& t) {
  if (t.kind == MonoidTable::Kind::E) {
    if (!validate_efunction(t))
      throw InvalidTable("table is not symmetric-associative");
    ExtensionTensor w(t.n + 1, Labeling::semisimple);
    for (int i = 0; i <= t.n; ++i)
      for (int j = i; j <= t.n; ++j)
        w.set(i + 1, j + 1, t.f[i][j] + 1, Rational(1));
    return w;
  }
  if (!validate_sefunction(t))
    throw InvalidTable("table is not an SE-function");
  if (t.n < 1) throw InvalidTable("SE quotient needs at least one nonzero label");
  ExtensionTensor w(t.n, Labeling::solvable);
  for (int i = 1; i <= t.n; ++i)
    for (int j = i; j <= t.n; ++j)
      if (t.f[i][j] != 0) w.set(i, j, t.f[i][j], Rational(1));
  return w;
}

MonoidTable zp_additive(int p) {
  if (p < 2) throw UsageError("modulus must be at least 2");
  MonoidTable t = MonoidTable::zero(p - 1, MonoidTable::Kind::E);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) t.f[i][j] = (i + j) % p;
  return t;
}

MonoidTable zp_multiplicative(int p) {
  if (p < 2) throw UsageError("modulus must be at least 2");
  MonoidTable t = MonoidTable::zero(p - 1, MonoidTable::Kind::E);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) t.f[i][j] = (i * j) % p;
  return t;
}

MonoidTable leibnitz_table(int n, bool strict) {
  if (n < 0) throw DimensionMismatch("label count must be nonnegative");
  MonoidTable t = MonoidTable::zero(n, MonoidTable::Kind::SE);
  int bound = strict ? n - 1 : n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j <= bound) t.f[i][j] = i + j;
  return t;
}

ExtensionTensor leibnitz(int n, const Rational& lambda1) {
  ExtensionTensor w(n, Labeling::solvable);
  if (lambda1.is_zero()) return w;
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) w.set(i, j, i + j, lambda1);
  return w;
}

ExtensionTensor lambda_family(int n, const Rational& lambda1, const Rational& lambda2) {
  if (n < 2) throw DimensionMismatch("family needs n >= 2");
  ExtensionTensor w(n + 1, Labeling::semisimple);
  for (int j = 1; j <= n + 1; ++j) w.set(1, j, j, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      int s = i + j;
      if (s <= n - 1)
        w.set(i + 1, j + 1, s + 1, lambda1);
      else if (s == n)
        w.set(i + 1, j + 1, n + 1, lambda2);
    }
  return w;
}

ExtensionTensor crmhd(const Rational& beta_e) {
  ExtensionTensor w(4, Labeling::semisimple);
  for (int i = 1; i <= 4; ++i) w.set(1, i, i, Rational(1));
  w.set(2, 3, 4, -beta_e);
  return w;
}

MonoidTable restrict_se(const MonoidTable& t) {
  if (t.kind != MonoidTable::Kind::SE) throw InvalidTable("restriction needs an SE table");
  if (!validate_sefunction(t)) throw InvalidTable("table is not an SE-function");
  if (t.n < 1) throw InvalidTable("cannot restrict the table on a single label");
  MonoidTable out = MonoidTable::zero(t.n - 1, MonoidTable::Kind::SE);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      out.f[i][j] = t.f[i][j] == t.n ? 0 : t.f[i][j];
  if (!validate_sefunction(out))
    throw Error("internal: restriction left the SE class");
  return out;
}

namespace {

// Backtracking enumeration state: the table with forced entries filled
// and free entries assigned in lexicographic order; -1 marks unknown.
struct SeSearch {
  int n;
  std::vector<std::pair<int, int>> free_entries;
  std::vector<std::vector<int>> f;
  std::vector<MonoidTable>* out;

  bool known(int i, int j) const { return f[i][j] >= 0; }

  // Associativity on every triple whose four lookups are determined.
  // Unknown values make a triple vacuously fine; the leaf check is total.
  bool consistent() const {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= n; ++c) {
          if (!known(b, c) || !known(a, b)) continue;
          int u = f[b][c], v = f[a][b];
          if (!known(a, u) || !known(v, c)) continue;
          if (f[a][u] != f[v][c]) return false;
        }
    return true;
  }

  void descend(size_t t) {
    if (t == free_entries.size()) {
      MonoidTable table;
      table.n = n;
      table.kind = MonoidTable::Kind::SE;
      table.f = f;
      if (!validate_sefunction(table))
        throw Error("internal: enumerated table fails SE validation");
      out->push_back(std::move(table));
      return;
    }
    auto [i, j] = free_entries[t];
    for (int v = 0; v <= n; ++v) {
      if (v != 0 && v <= j) continue; // property IV: climb past max(i,j) = j
      f[i][j] = f[j][i] = v;
      if (consistent()) descend(t + 1);
    }
    f[i][j] = f[j][i] = -1;
  }
};

} // namespace

SECensus enumerate_se(int n, int cap) {
  if (n < 0) throw DimensionMismatch("label count must be nonnegative");
  if (n > cap)
    throw CapExceeded("enumeration capped at n = " + std::to_string(cap));

  SeSearch search;
  search.n = n;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) search.free_entries.push_back({i, j});
  search.f.assign(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) search.f[i][0] = search.f[0][i] = 0;
  for (int i = 0; i <= n; ++i) search.f[i][n] = search.f[n][i] = 0;

  SECensus census;
  census.n = n;
  search.out = &census.tables;
  search.descend(0);
  return census;
}

namespace {

std::vector<int> canonical_key(const MonoidTable& t) {
  int n = t.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> best;
  do {
    // sigma fixes 0 and sends label l >= 1 to perm[l-1].
    auto sigma = [&](int l) { return l == 0 ? 0 : perm[l - 1]; };
    std::vector<int> inv(n + 1, 0);
    for (int l = 1; l <= n; ++l) inv[sigma(l)] = l;
    std::vector<int> key;
    key.reserve((n + 1) * (n + 1));
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) key.push_back(sigma(t.f[inv[a]][inv[b]]));
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

} // namespace

SECensus iso_reduce(const SECensus& census) {
  SECensus out;
  out.n = census.n;
  std::vector<std::vector<int>> seen;
  for (const auto& t : census.tables) {
    std::vector<int> key = canonical_key(t);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      out.tables.push_back(t);
    }
  }
  return out;
}

std::optional<MonoidTable> find_se_match(const ExtensionTensor& w, int cap) {
  SECensus census = enumerate_se(w.n(), cap);
  for (const auto& t : census.tables)
    if (monoid_to_tensor(t) == w) return t;
  return std::nullopt;
}

} // namespace uext
