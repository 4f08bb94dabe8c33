#include "uext/caps.hpp"

#include <cstdlib>
#include <string>

namespace uext {

int dimension_cap(int fallback) {
  const char* env = std::getenv("UEXT_MAX_N");
  if (!env) return fallback;
  try {
    size_t pos = 0;
    int v = std::stoi(env, &pos);
    if (pos == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

} // namespace uext
