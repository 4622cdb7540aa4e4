#pragma once

#include <stdexcept>
#include <string>

namespace hcurve {

enum class ErrorKind {
  invalid_argument,
  precondition,     // input violates an operation's stated precondition (e.g. not horizontally regular)
  degeneracy,       // jet or curve has lower rank than the operation requires
  conditioning,     // frame residual too large
  resolution,       // grid too coarse for the requested derivative
  step_size,        // integrator projection correction too large
  misclassification,
  inconsistency,
  parse,
  io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hcurve
