#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uext/algebra.hpp"
#include "uext/cohomology.hpp"
#include "uext/matrix.hpp"
#include "uext/monoid.hpp"
#include "uext/tensor.hpp"

namespace testutil {

using namespace uext;

// Literal fixtures typed in from the worked multiplicative examples, kept
// independent of the generator code they cross-check.

/// Tensor assembled from explicit slice matrices W^{(i)}; disagreeing
/// mirror entries throw, so the fixture is checked while being built.
ExtensionTensor from_slices(const std::vector<Matrix>& slices, Labeling lab);

ExtensionTensor z3_mult_fixture();
Matrix z3_change_rows();              // diagonalizing basis, rows in old coordinates
std::vector<Matrix> z4_n_matrices();  // the three nontrivial slices after the shift
Matrix z4_change_rows();              // 4x4: unit vector first, then e^i - e^0
Matrix z4_f_change_rows();            // 3x3 follow-up change on the shifted block
std::vector<Matrix> z4_f_matrices();
std::vector<Matrix> z4_m_matrices();

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi);
  Rational rational(int bound = 4);          // numerator in [-bound, bound], small denominator
  Rational nonzero_rational(int bound = 4);
};

/// Multiplication table of Q[t]/(p) for monic p = t^d - c_{d-1} t^{d-1} - ... - c_0,
/// in the basis 1, t, ..., t^{d-1}. Commutative and associative by
/// construction, with a unit, so the tensor is always valid.
ExtensionTensor poly_quotient_tensor(const std::vector<Rational>& c);

/// Product of random elementary row operations, so exactly invertible.
Matrix random_invertible(int n, Rng& rng, int ops = 12);

/// Block-diagonal join; both summands become ideals.
ExtensionTensor direct_sum(const ExtensionTensor& a, const ExtensionTensor& b);

/// Deterministic variety of valid tensors with dimension <= max_n:
/// band tensors, unit families, polynomial quotients, monoid tensors and
/// random basis transforms of all of these.
std::vector<ExtensionTensor> tensor_zoo(int max_n, Rng& rng, size_t count);

/// Associativity of the basis products read off the raw tensor, without
/// going through CommAlgebra (which refuses invalid input).
std::optional<std::array<int, 3>> find_associativity_failure(const ExtensionTensor& w);

/// Resamples single entries until validation fails; throws after `tries`
/// fruitless attempts (n = 1 tensors cannot be invalidated).
ExtensionTensor mutate_invalid(const ExtensionTensor& w, Rng& rng, int tries = 500);

Cochain random_cochain(int n, int degree, Rng& rng);

/// Fresh unique directory under the system temp root.
std::string temp_dir();

} // namespace testutil
