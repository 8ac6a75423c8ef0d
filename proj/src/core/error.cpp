#include "error.hpp"

#include <limits>
#include <sstream>

#include "bigint.hpp"

namespace chebgraph {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadRadical: return "BadRadical";
    case ErrorCode::NotASummand: return "NotASummand";
    case ErrorCode::NotBisectable: return "NotBisectable";
    case ErrorCode::NonUniformComponent: return "NonUniformComponent";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::OutOfBudget: return "OutOfBudget";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    fail(ErrorCode::OutOfBudget, "integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::ostringstream out;
  if (num < 0) {
    out << '-';
    num = -num;
  }
  out << BigInt(num / den).str();
  if (digits > 0) {
    BigInt rem = num % den;
    out << '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out << BigInt(rem / den).str();
      rem %= den;
    }
  }
  return out.str();
}

}  // namespace chebgraph
