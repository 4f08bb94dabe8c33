#include <doctest.h>

#include "helpers.hpp"
#include "uext/monoid.hpp"
#include "uext/tensor.hpp"

using namespace uext;
using namespace testutil;

TEST_CASE("tensor storage is symmetric in the upper indices") {
  ExtensionTensor w(3);
  w.set(2, 1, 3, Rational(5));
  CHECK(w.at(1, 2, 3) == Rational(5));
  CHECK(w.at(2, 1, 3) == Rational(5));
  CHECK(w.at(1, 2, 2).is_zero());
  CHECK(w.entries().size() == 1);

  w.set(1, 2, 3, Rational(0));
  CHECK(w.entries().empty());

  CHECK_THROWS_AS(w.at(0, 1, 1), IndexOutOfRange);
  CHECK_THROWS_AS(w.set(1, 4, 1, Rational(1)), IndexOutOfRange);
  CHECK_THROWS_AS(ExtensionTensor(0), DimensionMismatch);
}

TEST_CASE("equality ignores the display labeling") {
  ExtensionTensor a(2, Labeling::solvable), b(2, Labeling::semisimple);
  a.set(1, 1, 2, Rational(1));
  b.set(1, 1, 2, Rational(1));
  CHECK(a == b);
  b.set(2, 2, 1, Rational(1));
  CHECK(a != b);
}

TEST_CASE("slice and row matrices of the mod-3 fixture") {
  ExtensionTensor w = z3_mult_fixture();

  Matrix s1 = w.slice(1);
  for (int c = 0; c < 3; ++c) CHECK(s1(0, c) == Rational(1));
  CHECK(s1(1, 1).is_zero());
  CHECK(w.slice(2).is_identity());

  Matrix s3 = w.slice(3);
  CHECK(s3(0, 0) == Rational(1));
  CHECK(s3(1, 2) == Rational(1));
  CHECK(s3(2, 1) == Rational(1));
  CHECK(s3(1, 1).is_zero());

  // Row matrix for the absorbing label: products landing on e^0.
  Matrix r1 = w.row_matrix(1);
  CHECK(r1 == r1.transpose());
  CHECK(r1(0, 0) == Rational(1));
  CHECK(r1(0, 1) == Rational(1));
  CHECK(r1(0, 2) == Rational(1));
  CHECK(r1(1, 1).is_zero());
  CHECK(r1(2, 2).is_zero());

  CHECK_THROWS_AS(w.slice(4), IndexOutOfRange);
  CHECK_THROWS_AS(w.row_matrix(0), IndexOutOfRange);
}

TEST_CASE("validation accepts the worked fixtures") {
  CHECK(validate(z3_mult_fixture()).valid());
  CHECK(validate(crmhd(Rational(1))).valid());
  CHECK(validate(poly_quotient_tensor({Rational(2), Rational(0), Rational(1)})).valid());
}

TEST_CASE("validation reports non-commuting slices") {
  ExtensionTensor w(2);
  w.set(1, 1, 2, Rational(1));
  w.set(2, 2, 1, Rational(1));
  ValidationReport rep = validate(w);
  CHECK(rep.symmetric);
  CHECK_FALSE(rep.commuting);
  CHECK_FALSE(rep.valid());
  REQUIRE_FALSE(rep.violations.empty());
  for (const auto& v : rep.violations) {
    CHECK(v.kind == Violation::Kind::commutation);
    CHECK(v.lhs != v.rhs);
  }
}

TEST_CASE("raw validation flags mirror conflicts as symmetry violations") {
  RawTensor raw;
  raw.n = 2;
  raw.entries = {{1, 2, 1, Rational(1)}, {2, 1, 1, Rational(2)}};
  ValidationReport rep = validate(raw);
  CHECK_FALSE(rep.symmetric);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations[0].kind == Violation::Kind::symmetry);
  CHECK(rep.violations[0].lhs == Rational(1));
  CHECK(rep.violations[0].rhs == Rational(2));
}

TEST_CASE("raw validation accepts one-sided entries") {
  RawTensor raw;
  raw.n = 3;
  raw.entries = {{2, 1, 3, Rational(3)}};
  ValidationReport rep = validate(raw);
  CHECK(rep.symmetric);
  CHECK(rep.valid());
}

TEST_CASE("duplicate raw entries are a file error") {
  RawTensor raw;
  raw.n = 2;
  raw.entries = {{1, 2, 1, Rational(1)}, {1, 2, 1, Rational(1)}};
  CHECK_THROWS_AS(validate(raw), FileFormatError);
  CHECK_THROWS_AS(symmetrize_strict(raw), FileFormatError);
}

TEST_CASE("strict symmetrization rejects mirror conflicts") {
  RawTensor raw;
  raw.n = 2;
  raw.entries = {{1, 2, 1, Rational(1)}, {2, 1, 1, Rational(2)}};
  CHECK_THROWS_AS(symmetrize_strict(raw), FileFormatError);

  raw.entries = {{1, 2, 1, Rational(1)}, {2, 1, 1, Rational(1)}};
  ExtensionTensor w = symmetrize_strict(raw);
  CHECK(w.at(1, 2, 1) == Rational(1));
}

TEST_CASE("basis change inverts exactly") {
  BasisChange b(z3_change_rows());
  CHECK(b.mat() * b.inv() == Matrix::identity(3));
  CHECK(b.inverse().mat() == b.inv());

  Matrix singular(2, 2);
  singular(0, 0) = 1;
  singular(1, 0) = 1;
  CHECK_THROWS_AS(BasisChange{singular}, SingularMatrix);
}

TEST_CASE("diagonalizing change splits the mod-3 fixture slices") {
  ExtensionTensor w = z3_mult_fixture();
  ExtensionTensor t = transform(w, BasisChange(z3_change_rows()));
  for (int i = 1; i <= 3; ++i) {
    Matrix expected(3, 3);
    expected(i - 1, i - 1) = 1;
    CHECK(t.slice(i) == expected);
  }
  CHECK(validate(t).valid());
}

TEST_CASE("transform round trips through the inverse change") {
  Rng rng(314159);
  auto zoo = tensor_zoo(4, rng, 12);
  for (const auto& w : zoo) {
    BasisChange b(random_invertible(w.n(), rng));
    ExtensionTensor back = transform(transform(w, b), b.inverse());
    CHECK(back == w);
  }
}

TEST_CASE("transform preserves validity") {
  ExtensionTensor w = crmhd(Rational(3, 2));
  Rng rng(271828);
  BasisChange b(random_invertible(4, rng));
  CHECK(validate(transform(w, b)).valid());
  CHECK_THROWS_AS(transform(w, BasisChange(Matrix::identity(3))), DimensionMismatch);
}

TEST_CASE("mod-4 chain: shift, split off the absorbing line, then the block") {
  ExtensionTensor w = monoid_to_tensor(zp_multiplicative(4));
  ExtensionTensor shifted = transform(w, BasisChange(z4_change_rows()));

  ExtensionTensor line = subtensor(shifted, 1, 1);
  CHECK(line.at(1, 1, 1) == Rational(1));

  ExtensionTensor block = subtensor(shifted, 2, 4);
  ExtensionTensor expected = from_slices(z4_n_matrices(), Labeling::solvable);
  CHECK(block == expected);

  // Follow-up change inside the block reaches the idempotent form.
  ExtensionTensor f = transform(block, BasisChange(z4_f_change_rows()));
  CHECK(f == from_slices(z4_f_matrices(), Labeling::solvable));

  // The block unit sits at index 1; removing it leaves the final pair.
  ExtensionTensor m = deunitize(f);
  CHECK(m == from_slices(z4_m_matrices(), Labeling::solvable));
}

TEST_CASE("subtensor rejects ranges that couple to the complement") {
  ExtensionTensor w = z3_mult_fixture();
  CHECK_THROWS_AS(subtensor(w, 2, 3), DomainError);
  CHECK_THROWS_AS(subtensor(w, 0, 2), IndexOutOfRange);
  CHECK_THROWS_AS(subtensor(w, 3, 2), IndexOutOfRange);
}

TEST_CASE("unitize and deunitize are inverse") {
  Rng rng(1618);
  auto zoo = tensor_zoo(4, rng, 8);
  for (const auto& w : zoo) {
    ExtensionTensor u = unitize(w);
    CHECK(u.n() == w.n() + 1);
    CHECK(u.labeling() == Labeling::semisimple);
    CHECK(u.slice(1).is_identity());
    ExtensionTensor back = deunitize(u);
    CHECK(back == w);
    CHECK(back.labeling() == Labeling::solvable);
  }
}

TEST_CASE("deunitize demands an identity slice at index 1") {
  ExtensionTensor w(2);
  w.set(1, 1, 2, Rational(1));
  CHECK_THROWS_AS(deunitize(w), NoUnit);
  CHECK_THROWS_AS(deunitize(ExtensionTensor(1)), NoUnit);

  // The mod-3 unit sits at internal index 2, not 1, so it does not count.
  CHECK_THROWS_AS(deunitize(z3_mult_fixture()), NoUnit);
}

TEST_CASE("unitized crmhd matches the generator") {
  // crmhd already carries its unit at index 1: stripping and re-adjoining
  // it must be the identity.
  ExtensionTensor w = crmhd(Rational(-3, 2));
  CHECK(unitize(deunitize(w)) == w);
}

TEST_CASE("canonical solvable predicate and the abelian tail") {
  ExtensionTensor band = leibnitz(3, Rational(1));
  CHECK(is_canonical_solvable(band));
  CHECK(abelian_tail_depth(band) == 2);

  ExtensionTensor zero(3);
  CHECK(abelian_tail_depth(zero) == 3);

  CHECK_FALSE(is_canonical_solvable(z3_mult_fixture()));
  CHECK_THROWS_AS(abelian_tail_depth(z3_mult_fixture()), NotCanonical);
}

TEST_CASE("reduce cuts the abelian tail") {
  ExtensionTensor band = leibnitz(3, Rational(1));
  ExtensionTensor cut = reduce(band, 1);
  CHECK(cut == leibnitz(2, Rational(1)));
  CHECK(reduce(band, 2) == ExtensionTensor(1));

  CHECK_THROWS_AS(reduce(band, 0), DimensionMismatch);
  CHECK_THROWS_AS(reduce(band, 3), DimensionMismatch);
  CHECK_THROWS_AS(reduce(z3_mult_fixture(), 1), NotCanonical);
}

TEST_CASE("mutated tensors fail validation") {
  Rng rng(5150);
  auto zoo = tensor_zoo(4, rng, 10);
  for (const auto& w : zoo) {
    if (w.n() < 2) continue;
    ExtensionTensor bad = mutate_invalid(w, rng);
    CHECK_FALSE(validate(bad).valid());
  }
}
