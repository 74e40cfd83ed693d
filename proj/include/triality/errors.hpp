#ifndef TRIALITY_ERRORS_HPP
#define TRIALITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triality {

enum class ErrorCode {
  InvalidArgument,  // bad caller input (wrong dimension, mixed fields, ...)
  Unsupported,      // outside the supported parameter range
  DomainError,      // mathematically undefined (division by zero, ...)
  CheckFailed,      // a built-in cross-check did not hold
  Internal          // should never happen on valid inputs
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace triality

#endif
