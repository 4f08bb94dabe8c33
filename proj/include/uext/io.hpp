#pragma once

#include <string>

#include <json.hpp>

#include "uext/algebra.hpp"
#include "uext/cohomology.hpp"
#include "uext/lie.hpp"
#include "uext/matrix.hpp"
#include "uext/monoid.hpp"
#include "uext/tensor.hpp"

namespace uext {

using Json = nlohmann::ordered_json;

// Tensor files: {"format":"uext-tensor-v1","n":…,"labeling":…,"entries":[…]}.
// Semisimple files use 0-based indices; in memory everything is 1-based.
// Emitted entries are sorted by (i,j,k) with i <= j and canonical rational
// strings, so saving is deterministic byte-for-byte.

/// Orientation-preserving load for validation; only structural problems
/// (schema, ranges, caps) are errors here.
RawTensor load_raw_tensor(const std::string& path);

/// Strict load: also rejects duplicate and mirror-conflicting entries.
ExtensionTensor load_tensor(const std::string& path);

std::string tensor_to_string(const ExtensionTensor& w);
void save_tensor(const ExtensionTensor& w, const std::string& path);
Json tensor_json(const ExtensionTensor& w);

// Monoid files: {"format":"uext-monoid-v1","kind":"E"|"SE","n":…,"table":[[…]]}.
MonoidTable load_monoid(const std::string& path);
std::string monoid_to_string(const MonoidTable& t);
void save_monoid(const MonoidTable& t, const std::string& path);
Json monoid_json(const MonoidTable& t);

// Carrier files: {"format":"uext-lie-v1","dim":…,"c":[{"i","j","k","value"}]}
// with i < j; the antisymmetric mirror is implied. Loading re-checks the
// Jacobi identity and rejects non-Lie input.
LieAlgebra load_lie(const std::string& path);

/// Cocycle matrix file: a plain 2D JSON array of rational strings.
Matrix load_matrix(const std::string& path);

Json matrix_json(const Matrix& m);
Json h2_json(const H2Report& r);
Json validation_json(const ValidationReport& r);
Json split_json(const SplitReport& r);

} // namespace uext
