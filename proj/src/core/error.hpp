#pragma once

#include <stdexcept>
#include <string>

namespace chebgraph {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  NotPrimePower,
  DivisionByZero,
  ZeroElement,
  OutsideDomain,
  NotCoprime,
  BadRadical,
  NotASummand,
  NotBisectable,
  NonUniformComponent,
  InternalInconsistency,
  OutOfBudget,
  ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the core carries one of the codes above so the
/// C boundary can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace chebgraph
