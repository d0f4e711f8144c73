#pragma once

#include <cstdlib>
#include <string>

namespace qtoric {

/// QTORIC_MAX_BOUND, when set to a non-negative integer, replaces every
/// built-in bound cap. Larger searches may run for a very long time.
inline int resource_cap(int default_cap) {
  const char* env = std::getenv("QTORIC_MAX_BOUND");
  if (!env || !*env) return default_cap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 100000) return default_cap;
  return static_cast<int>(v);
}

}  // namespace qtoric
