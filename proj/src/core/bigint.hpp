#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chebgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Narrowing with a range check; throws Error(OutOfBudget) if `v` does not fit.
std::uint64_t to_u64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& r);

/// Decimal rendering of a rational with `digits` fractional digits (rounded
/// toward zero), used next to the exact fraction in reports.
std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace chebgraph
