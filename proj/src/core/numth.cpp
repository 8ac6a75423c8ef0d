#include "numth.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "error.hpp"

namespace chebgraph::numth {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;
constexpr std::array<u64, 12> kWitnesses64 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 20> kWitnessesBig = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd64(u64 a, u64 b) {
  while (b) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool miller_rabin64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses64) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses64) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool miller_rabin_big(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnessesBig) {
    if (n % p == 0) return n == p;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kWitnessesBig) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; `c` walks a fixed schedule 1, 2, 3, ... on failure.
u64 pollard_rho64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, g = 1, r = 1, q = 1, x = 0, ys = 0;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd64(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt pollard_rho_big(const BigInt& n) {
  if ((n & 1) == 0) return 2;
  for (unsigned c = 1;; ++c) {
    auto f = [&](const BigInt& x) -> BigInt { return (x * x + c) % n; };
    BigInt x = 2, y = 2, g = 1;
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      g = boost::multiprecision::gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (g != n) return g;
  }
}

void add_factor(std::map<BigInt, unsigned>& acc, const BigInt& p, unsigned e = 1) { acc[p] += e; }

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    add_factor(acc, n);
    return;
  }
  BigInt d;
  if (n <= std::numeric_limits<u64>::max()) {
    d = pollard_rho64(static_cast<u64>(n));
  } else {
    d = pollard_rho_big(n);
  }
  split_composite(d, acc);
  split_composite(n / d, acc);
}

// Strips small primes; returns the unfactored cofactor.
BigInt trial_divide(BigInt m, std::map<BigInt, unsigned>& acc) {
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) add_factor(acc, p, e);
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= kTrialLimit; p += 6) {
    if (BigInt(p) * p > m) break;
    strip(p);
    strip(p + 2);
  }
  return m;
}

BigInt normalized_residue(const BigInt& n, const BigInt& d) {
  BigInt r = n % d;
  if (r < 0) r += d;
  return r;
}

void require_positive(const BigInt& v, const char* what) {
  if (v < 1) fail(ErrorCode::InvalidArgument, std::string(what) + " must be a positive integer");
}

}  // namespace

bool is_prime(std::uint64_t m) { return miller_rabin64(m); }

bool is_prime(const BigInt& m) {
  if (m < 2) return false;
  if (m <= std::numeric_limits<u64>::max()) return miller_rabin64(static_cast<u64>(m));
  return miller_rabin_big(m);
}

Factorization factorize(const BigInt& m) {
  require_positive(m, "factorize argument");
  std::map<BigInt, unsigned> acc;
  const BigInt rest = trial_divide(m, acc);
  if (rest > 1) split_composite(rest, acc);
  Factorization out;
  out.reserve(acc.size());
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

BigInt multiply_out(const Factorization& f) {
  BigInt v = 1;
  for (const auto& [p, e] : f) v *= boost::multiprecision::pow(p, e);
  return v;
}

Factorization merge(const Factorization& a, const Factorization& b) {
  std::map<BigInt, unsigned> acc;
  for (const auto& [p, e] : a) acc[p] += e;
  for (const auto& [p, e] : b) acc[p] += e;
  Factorization out;
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

BigInt radical(const BigInt& m) {
  BigInt r = 1;
  for (const auto& f : factorize(m)) r *= f.prime;
  return r;
}

BigInt euler_phi(const Factorization& f) {
  BigInt phi = 1;
  for (const auto& [p, e] : f) phi *= boost::multiprecision::pow(p, e - 1) * (p - 1);
  return phi;
}

BigInt euler_phi(const BigInt& m) { return euler_phi(factorize(m)); }

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& m) { return divisors(factorize(m)); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  if (mod == 1) return 0;
  return boost::multiprecision::powm(normalized_residue(base, mod), exp, mod);
}

NDecomposition n_decomposition(const BigInt& m, const BigInt& n) {
  require_positive(m, "m");
  require_positive(n, "n");
  BigInt nu = 1;
  BigInt rest = m;
  for (BigInt g = gcd(rest, n); g > 1; g = gcd(rest, n)) {
    rest /= g;
    nu *= g;
  }
  return {m, n, nu, rest};
}

NuSeries nu_series(const BigInt& nu, const BigInt& n) {
  require_positive(nu, "nu");
  require_positive(n, "n");
  NuSeries series{nu, n, {}};
  if (nu == 1) {
    series.terms.push_back(1);
    return series;
  }
  if (n_decomposition(nu, n).omega != 1)
    fail(ErrorCode::BadRadical, "rad(" + nu.str() + ") does not divide rad(" + n.str() + ")");
  BigInt covered = 1;
  while (covered != nu) {
    const BigInt term = gcd(nu / covered, n);
    series.terms.push_back(term);
    covered *= term;
  }
  return series;
}

BigInt mult_order(const BigInt& n, const BigInt& d) {
  require_positive(d, "modulus");
  if (d == 1) return 1;
  const BigInt base = normalized_residue(n, d);
  if (gcd(base, d) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + n.str() + ", " + d.str() + ") != 1");
  Factorization group;
  for (const auto& [p, e] : factorize(d)) {
    if (e > 1) group = merge(group, Factorization{{p, e - 1}});
    if (p > 2) group = merge(group, factorize(p - 1));
  }
  return order_from_group(group, [&](const BigInt& t) { return powmod(base, t, d) == 1; });
}

BigInt half_order(const BigInt& n, const BigInt& d) {
  const BigInt o = mult_order(n, d);
  if (d <= 2) return 1;
  if ((o & 1) == 0 && powmod(n, o / 2, d) == d - 1) return o / 2;
  return o;
}

std::uint64_t min_power_divisible(const BigInt& u, const BigInt& n) {
  require_positive(u, "u");
  require_positive(n, "n");
  std::uint64_t k = 0;
  BigInt rest = u;
  while (rest > 1) {
    const BigInt g = gcd(rest, n);
    if (g == 1) fail(ErrorCode::BadRadical, "rad(" + u.str() + ") does not divide rad(" + n.str() + ")");
    rest /= g;
    ++k;
  }
  return k;
}

}  // namespace chebgraph::numth
