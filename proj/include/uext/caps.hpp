#pragma once

namespace uext {

/// Dimension cap for loaded or enumerated objects. Returns the value of
/// the UEXT_MAX_N environment variable when it is a positive integer,
/// otherwise the given fallback.
int dimension_cap(int fallback);

} // namespace uext
