#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

/// Error categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  InvalidArgument = 1,
  InvalidPolytope = 2,
  InvalidMatrix = 3,
  Capability = 4,
  Torsion = 5,
  Overflow = 6,
  Parse = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qtoric
