#pragma once
#include <stdexcept>
#include <string>

namespace ramlat {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  PrecisionExhausted,
  NotInvertible,
  Singular,
  RankDeficient,
  NotUnit,
  NotVertex,
  TypeUnavailable,
  NotRational,
  NotIsotropic,
  NotLagrangian,
  ChainViolation,
  SearchTooLarge,
  GroupTooLarge,
  Internal,
};

// Single exception type for the whole library.  `kind` drives the C API
// status code and, from there, the CLI exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace ramlat
