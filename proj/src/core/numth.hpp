#pragma once

// Integer substrate: factorization, radicals, totients, divisor lists,
// n-decompositions, multiplicative orders and nu-series. All values are
// arbitrary precision; factoring uses trial division followed by Pollard rho
// with a fixed seed schedule, so every result is reproducible.

#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace chebgraph::numth {

struct PrimeFactor {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factors in strictly increasing order. The factorization of 1 is empty.
using Factorization = std::vector<PrimeFactor>;

/// m = nu * omega with rad(nu) | rad(n) and gcd(omega, n) = 1.
struct NDecomposition {
  BigInt m;
  BigInt n;
  BigInt nu;
  BigInt omega;
};

/// The sequence (nu_1, ..., nu_D) of iterated gcds of nu against n.
struct NuSeries {
  BigInt nu;
  BigInt n;
  std::vector<BigInt> terms;

  std::size_t depth() const { return terms.size(); }
};

bool is_prime(const BigInt& m);
bool is_prime(std::uint64_t m);

Factorization factorize(const BigInt& m);
BigInt multiply_out(const Factorization& f);
/// Factorization of a * b given the factorizations of a and b.
Factorization merge(const Factorization& a, const Factorization& b);

BigInt radical(const BigInt& m);
BigInt euler_phi(const BigInt& m);
BigInt euler_phi(const Factorization& f);
std::vector<BigInt> divisors(const BigInt& m);
std::vector<BigInt> divisors(const Factorization& f);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod);

NDecomposition n_decomposition(const BigInt& m, const BigInt& n);
NuSeries nu_series(const BigInt& nu, const BigInt& n);

/// o_d(n): least t >= 1 with n^t = 1 (mod d). Throws NotCoprime.
BigInt mult_order(const BigInt& n, const BigInt& d);
/// o~_d(n): least t >= 1 with n^t = +-1 (mod d). Throws NotCoprime.
BigInt half_order(const BigInt& n, const BigInt& d);

/// Least k >= 0 with u | n^k. Requires rad(u) | rad(n).
std::uint64_t min_power_divisible(const BigInt& u, const BigInt& n);

/// Order of an element in a group of order `group_order` (factored), given a
/// predicate-free power oracle: `is_identity_after(e)` must report whether
/// x^e = 1. Strips prime factors from the group order.
template <typename IsIdentityAfter>
BigInt order_from_group(const Factorization& group_order, IsIdentityAfter&& is_identity_after) {
  BigInt t = multiply_out(group_order);
  for (const auto& [prime, exponent] : group_order) {
    for (unsigned i = 0; i < exponent; ++i) {
      const BigInt candidate = t / prime;
      if (!is_identity_after(candidate)) break;
      t = candidate;
    }
  }
  return t;
}

}  // namespace chebgraph::numth
