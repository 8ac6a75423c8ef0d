#pragma once

// Finite field arithmetic for F_q = F_p[x]/(m(x)) and its quadratic extension
// F_{q^2} = F_{p^{2k}}, plus the Chebyshev map and the eta covering
// alpha -> alpha + 1/alpha.
//
// Elements are coefficient vectors (ascending degree). At every external
// boundary an element is the base-p integer sum c_i p^i, least significant
// coefficient first.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "numth.hpp"

namespace chebgraph::ff {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;

  bool even() const { return p == 2; }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Validates p prime, k >= 1 and p^k < 2^64.
PrimePower make_prime_power(std::uint64_t p, unsigned k);
/// Recognizes q as p^k; nullopt when q is not a prime power.
std::optional<PrimePower> try_prime_power(std::uint64_t q);
/// Same, throwing Error(NotPrimePower).
PrimePower prime_power_of(std::uint64_t q);
/// Accepts a decimal integer ("25") or "p^k" ("5^2"). Throws ParseError,
/// NotPrime or NotPrimePower.
PrimePower parse_prime_power(const std::string& text);

using Coeffs = std::vector<std::uint64_t>;

struct FieldElement {
  Coeffs coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Rabin's irreducibility test for a monic polynomial over F_p.
bool is_irreducible(const Coeffs& monic, std::uint64_t p);

/// Lexicographically least monic irreducible of degree k over F_p, comparing
/// coefficient vectors from the constant term upward. Degree 1 gives x.
Coeffs canonical_modulus(std::uint64_t p, unsigned k);

class Field {
 public:
  /// F_{p^k} with the canonical modulus.
  static Field make(std::uint64_t p, unsigned k);
  /// As above, reusing a known factorization of p^k - 1.
  static Field make(std::uint64_t p, unsigned k, numth::Factorization unit_order);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  const BigInt& size() const { return size_; }
  /// Field size as a 64-bit count; throws OutOfBudget when it does not fit.
  std::uint64_t size_u64() const;
  const Coeffs& modulus() const { return modulus_; }
  const numth::Factorization& unit_group_order() const { return unit_order_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The image of an integer under Z -> F_p -> F_q.
  FieldElement constant(std::int64_t c) const;

  bool is_zero(const FieldElement& a) const;
  bool contains(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, std::uint64_t c) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  FieldElement pow(const FieldElement& a, const BigInt& e) const;

  /// Multiplicative order, by stripping primes from |F*|. Throws ZeroElement.
  BigInt element_order(const FieldElement& a) const;

  FieldElement decode(std::uint64_t code) const;
  FieldElement decode(const BigInt& code) const;
  std::uint64_t encode(const FieldElement& a) const;
  BigInt encode_big(const FieldElement& a) const;

 private:
  Field(std::uint64_t p, unsigned k, Coeffs modulus, numth::Factorization unit_order);
  void require(const FieldElement& a) const;

  std::uint64_t p_;
  unsigned k_;
  Coeffs modulus_;
  BigInt size_;
  numth::Factorization unit_order_;
};

/// F_q together with F_{q^2} and an explicit embedding of the former into the
/// latter (the generator x of F_q's basis goes to a root of F_q's modulus).
class QuadraticExtension {
 public:
  static QuadraticExtension make(std::uint64_t p, unsigned k);
  static QuadraticExtension make(const PrimePower& pp) { return make(pp.p, pp.k); }

  const Field& base() const { return base_; }
  const Field& full() const { return full_; }
  std::uint64_t q() const { return q_; }
  /// Image of the base generator x in F_{q^2}.
  const FieldElement& generator_image() const { return theta_; }

  FieldElement embed(const FieldElement& a) const;
  /// Inverse of embed on its image; nullopt for elements outside F_q.
  std::optional<FieldElement> project(const FieldElement& alpha) const;

  bool in_base_units(const FieldElement& alpha) const;   // alpha^(q-1) = 1
  bool in_norm_one(const FieldElement& alpha) const;     // alpha^(q+1) = 1, the group H
  bool in_domain(const FieldElement& alpha) const;       // F_q* union H

  /// alpha + 1/alpha, as an element of F_q. Throws OutsideDomain.
  FieldElement eta(const FieldElement& alpha) const;
  /// Roots of x^2 - a x + 1 in F_{q^2}: {alpha, 1/alpha}, a singleton iff a = +-2.
  std::vector<FieldElement> eta_preimage(const FieldElement& a) const;

  /// F_q* union H in ascending encoding order. Requires q^2 to fit the budget.
  std::vector<FieldElement> enumerate_domain(std::uint64_t budget) const;

 private:
  QuadraticExtension(Field base, Field full, FieldElement theta);

  Field base_;
  Field full_;
  FieldElement theta_;
  std::vector<FieldElement> basis_images_;
  std::uint64_t q_;
};

/// Roots in `field` of a monic polynomial (coefficients in `field`, ascending)
/// that splits into distinct linear factors there. Sorted by encoding.
std::vector<FieldElement> split_roots(const Field& field, std::vector<FieldElement> monic);

/// T_n(a) through the ladder (T_m, T_{m+1}) with T_0 = 2, T_1 = x.
FieldElement cheb_eval(const Field& field, const BigInt& n, const FieldElement& a);

/// Integer coefficients of T_n, ascending degree.
std::vector<BigInt> cheb_coeffs(std::uint64_t n);

/// Horner evaluation of an integer polynomial reduced into `field`.
FieldElement eval_integer_poly(const Field& field, const std::vector<BigInt>& coeffs,
                               const FieldElement& a);

}  // namespace chebgraph::ff
