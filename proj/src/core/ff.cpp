#include "ff.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>
#include <limits>
#include <random>
#include <utility>

#include "error.hpp"

namespace chebgraph::ff {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : p - (b - a); }
u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return pow_mod(a, p - 2, p);
}

u64 residue(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<u64>(r);
}

// Coefficient rings for the generic polynomial helpers below.
struct PrimeRing {
  using Elem = u64;
  u64 p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return add_mod(a, b, p); }
  Elem sub(Elem a, Elem b) const { return sub_mod(a, b, p); }
  Elem mul(Elem a, Elem b) const { return mul_mod(a, b, p); }
  Elem inv(Elem a) const { return inv_mod(a, p); }
};

struct FieldRing {
  using Elem = FieldElement;
  const Field* f;

  Elem zero() const { return f->zero(); }
  Elem one() const { return f->one(); }
  bool is_zero(const Elem& a) const { return f->is_zero(a); }
  Elem add(const Elem& a, const Elem& b) const { return f->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return f->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return f->mul(a, b); }
  Elem inv(const Elem& a) const { return f->inv(a); }
};

template <typename Ring>
using Poly = std::vector<typename Ring::Elem>;

template <typename Ring>
void trim(const Ring& r, Poly<Ring>& a) {
  while (!a.empty() && r.is_zero(a.back())) a.pop_back();
}

template <typename Ring>
Poly<Ring> poly_sub(const Ring& r, Poly<Ring> a, const Poly<Ring>& b) {
  if (a.size() < b.size()) a.resize(b.size(), r.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = r.sub(a[i], b[i]);
  trim(r, a);
  return a;
}

template <typename Ring>
Poly<Ring> poly_add(const Ring& r, Poly<Ring> a, const Poly<Ring>& b) {
  if (a.size() < b.size()) a.resize(b.size(), r.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = r.add(a[i], b[i]);
  trim(r, a);
  return a;
}

template <typename Ring>
Poly<Ring> poly_mul(const Ring& r, const Poly<Ring>& a, const Poly<Ring>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Ring> out(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
  }
  trim(r, out);
  return out;
}

// Quotient and remainder; `b` must be nonzero.
template <typename Ring>
std::pair<Poly<Ring>, Poly<Ring>> poly_divmod(const Ring& r, Poly<Ring> a, const Poly<Ring>& b) {
  trim(r, a);
  if (a.size() < b.size()) return {{}, a};
  const auto lead_inv = r.inv(b.back());
  Poly<Ring> quot(a.size() - b.size() + 1, r.zero());
  for (std::size_t d = a.size(); d-- >= b.size();) {
    if (r.is_zero(a[d])) continue;
    const auto c = r.mul(a[d], lead_inv);
    const std::size_t shift = d - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = r.sub(a[shift + i], r.mul(c, b[i]));
  }
  trim(r, a);
  trim(r, quot);
  return {quot, a};
}

template <typename Ring>
Poly<Ring> poly_mod(const Ring& r, const Poly<Ring>& a, const Poly<Ring>& m) {
  return poly_divmod(r, a, m).second;
}

template <typename Ring>
Poly<Ring> poly_powmod(const Ring& r, Poly<Ring> base, const BigInt& e, const Poly<Ring>& m) {
  Poly<Ring> result = poly_mod(r, Poly<Ring>{r.one()}, m);
  base = poly_mod(r, base, m);
  if (e == 0) return result;
  const unsigned top = boost::multiprecision::msb(e);
  for (unsigned i = top + 1; i-- > 0;) {
    result = poly_mod(r, poly_mul(r, result, result), m);
    if (boost::multiprecision::bit_test(e, i)) result = poly_mod(r, poly_mul(r, result, base), m);
  }
  return result;
}

template <typename Ring>
Poly<Ring> make_monic(const Ring& r, Poly<Ring> a) {
  if (a.empty()) return a;
  const auto lead_inv = r.inv(a.back());
  for (auto& c : a) c = r.mul(c, lead_inv);
  return a;
}

template <typename Ring>
Poly<Ring> poly_gcd(const Ring& r, Poly<Ring> a, Poly<Ring> b) {
  trim(r, a);
  trim(r, b);
  while (!b.empty()) {
    Poly<Ring> rem = poly_mod(r, a, b);
    a = std::move(b);
    b = std::move(rem);
  }
  return make_monic(r, a);
}

std::vector<unsigned> prime_divisors(unsigned k) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      out.push_back(d);
      while (k % d == 0) k /= d;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

BigInt big_pow(u64 p, unsigned k) { return boost::multiprecision::pow(BigInt(p), k); }

// Fixed seed: root splitting must be reproducible run to run.
constexpr u64 kSplitSeed = 0x9e3779b97f4a7c15ULL;

void split_into(const Field& field, const FieldRing& ring, const Poly<FieldRing>& f,
                std::mt19937_64& rng, std::vector<FieldElement>& roots) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    roots.push_back(field.neg(f[0]));
    return;
  }
  const Poly<FieldRing> x{field.zero(), field.one()};
  for (;;) {
    FieldElement delta = field.zero();
    for (auto& c : delta.coeffs) c = rng() % field.characteristic();
    Poly<FieldRing> g;
    if (field.characteristic() == 2) {
      Poly<FieldRing> t = poly_mod(ring, Poly<FieldRing>{field.zero(), delta}, f);
      Poly<FieldRing> acc = t;
      for (unsigned i = 1; i < field.degree(); ++i) {
        t = poly_mod(ring, poly_mul(ring, t, t), f);
        acc = poly_add(ring, acc, t);
      }
      g = poly_gcd(ring, acc, f);
    } else {
      const BigInt e = (field.size() - 1) / 2;
      Poly<FieldRing> h = poly_powmod(ring, Poly<FieldRing>{delta, field.one()}, e, f);
      h = poly_sub(ring, h, Poly<FieldRing>{field.one()});
      g = poly_gcd(ring, h, f);
    }
    const std::size_t gdeg = g.empty() ? 0 : g.size() - 1;
    if (gdeg == 0 || gdeg == deg) continue;
    split_into(field, ring, g, rng, roots);
    split_into(field, ring, make_monic(ring, poly_divmod(ring, f, g).first), rng, roots);
    return;
  }
}

}  // namespace

PrimePower make_prime_power(std::uint64_t p, unsigned k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  if (!numth::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  u64 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > std::numeric_limits<u64>::max() / p)
      fail(ErrorCode::OutOfBudget, "p^k exceeds the 64-bit field size limit");
    q *= p;
  }
  return {p, k, q};
}

std::optional<PrimePower> try_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = numth::factorize(BigInt(q));
  if (factors.size() != 1) return std::nullopt;
  return PrimePower{static_cast<u64>(factors[0].prime), factors[0].exponent, q};
}

PrimePower prime_power_of(std::uint64_t q) {
  auto pp = try_prime_power(q);
  if (!pp) fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return *pp;
}

PrimePower parse_prime_power(const std::string& text) {
  auto number = [&](std::string_view part) {
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      fail(ErrorCode::ParseError, "cannot read '" + text + "' as a prime power (expected q or p^k)");
    return v;
  };
  const std::string_view all(text);
  const auto caret = all.find('^');
  if (caret == std::string_view::npos) return prime_power_of(number(all));
  const u64 k = number(all.substr(caret + 1));
  if (k > 64) fail(ErrorCode::OutOfBudget, "exponent in '" + text + "' is too large");
  return make_prime_power(number(all.substr(0, caret)), static_cast<unsigned>(k));
}

bool is_irreducible(const Coeffs& monic, std::uint64_t p) {
  if (monic.size() < 2) return false;
  if (monic.back() != 1) fail(ErrorCode::InvalidArgument, "irreducibility test needs a monic polynomial");
  const unsigned k = static_cast<unsigned>(monic.size() - 1);
  if (k == 1) return true;
  const PrimeRing ring{p};
  const Poly<PrimeRing> f(monic.begin(), monic.end());
  const Poly<PrimeRing> x{0, 1};

  const auto divisors = prime_divisors(k);
  std::vector<unsigned> wanted;
  for (unsigned r : divisors) wanted.push_back(k / r);

  Poly<PrimeRing> frob = x;  // x^(p^j) mod f
  for (unsigned j = 1; j <= k; ++j) {
    frob = poly_powmod(ring, frob, BigInt(p), f);
    if (std::find(wanted.begin(), wanted.end(), j) != wanted.end()) {
      const auto g = poly_gcd(ring, poly_sub(ring, frob, x), f);
      if (g.size() != 1) return false;
    }
  }
  return frob == x;
}

Coeffs canonical_modulus(std::uint64_t p, unsigned k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  if (k == 1) return {0, 1};
  // A zero constant term makes x a factor, so the search starts at c0 = 1.
  Coeffs low(k, 0);
  low[0] = 1;
  for (;;) {
    Coeffs candidate = low;
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return candidate;
    std::size_t i = k;
    while (i-- > 0) {
      if (++low[i] < p) break;
      low[i] = 0;
    }
  }
}

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint64_t p, unsigned k, Coeffs modulus, numth::Factorization unit_order)
    : p_(p), k_(k), modulus_(std::move(modulus)), size_(big_pow(p, k)),
      unit_order_(std::move(unit_order)) {}

Field Field::make(std::uint64_t p, unsigned k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  if (!numth::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return Field(p, k, canonical_modulus(p, k), numth::factorize(big_pow(p, k) - 1));
}

Field Field::make(std::uint64_t p, unsigned k, numth::Factorization unit_order) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  if (!numth::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (numth::multiply_out(unit_order) != big_pow(p, k) - 1)
    fail(ErrorCode::InternalInconsistency, "unit group factorization does not match p^k - 1");
  return Field(p, k, canonical_modulus(p, k), std::move(unit_order));
}

std::uint64_t Field::size_u64() const { return to_u64(size_); }

void Field::require(const FieldElement& a) const {
  if (!contains(a)) fail(ErrorCode::InvalidArgument, "element does not belong to this field");
}

bool Field::contains(const FieldElement& a) const {
  if (a.coeffs.size() != k_) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](u64 c) { return c < p_; });
}

FieldElement Field::zero() const { return FieldElement{Coeffs(k_, 0)}; }

FieldElement Field::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1 % p_;
  return e;
}

FieldElement Field::constant(std::int64_t c) const {
  FieldElement e = zero();
  e.coeffs[0] = residue(BigInt(c), p_);
  return e;
}

bool Field::is_zero(const FieldElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](u64 c) { return c == 0; });
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  FieldElement out = a;
  for (unsigned i = 0; i < k_; ++i) out.coeffs[i] = add_mod(out.coeffs[i], b.coeffs[i], p_);
  return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  FieldElement out = a;
  for (unsigned i = 0; i < k_; ++i) out.coeffs[i] = sub_mod(out.coeffs[i], b.coeffs[i], p_);
  return out;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::scale(const FieldElement& a, std::uint64_t c) const {
  require(a);
  FieldElement out = a;
  c %= p_;
  for (auto& v : out.coeffs) v = mul_mod(v, c, p_);
  return out;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  if (k_ == 1) return FieldElement{{mul_mod(a.coeffs[0], b.coeffs[0], p_)}};
  std::vector<u64> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = add_mod(prod[i + j], mul_mod(a.coeffs[i], b.coeffs[j], p_), p_);
  }
  // Reduce with the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
  for (std::size_t d = prod.size(); d-- > k_;) {
    const u64 c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i < k_; ++i) {
      const std::size_t at = d - k_ + i;
      prod[at] = sub_mod(prod[at], mul_mod(c, modulus_[i], p_), p_);
    }
  }
  prod.resize(k_);
  return FieldElement{std::move(prod)};
}

FieldElement Field::inv(const FieldElement& a) const {
  require(a);
  if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (k_ == 1) return FieldElement{{inv_mod(a.coeffs[0], p_)}};
  return pow(a, size_ - 2);
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
  require(a);
  FieldElement result = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::pow(const FieldElement& a, const BigInt& e) const {
  require(a);
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (e <= std::numeric_limits<u64>::max()) return pow(a, static_cast<u64>(e));
  FieldElement result = one();
  const unsigned top = boost::multiprecision::msb(e);
  for (unsigned i = top + 1; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(result, a);
  }
  return result;
}

BigInt Field::element_order(const FieldElement& a) const {
  require(a);
  if (is_zero(a)) fail(ErrorCode::ZeroElement, "zero has no multiplicative order");
  const FieldElement unit = one();
  return numth::order_from_group(unit_order_, [&](const BigInt& t) { return pow(a, t) == unit; });
}

FieldElement Field::decode(std::uint64_t code) const { return decode(BigInt(code)); }

FieldElement Field::decode(const BigInt& code) const {
  if (code < 0 || code >= size_)
    fail(ErrorCode::InvalidArgument, "element code " + code.str() + " is outside [0, " + size_.str() + ")");
  FieldElement e = zero();
  BigInt rest = code;
  for (unsigned i = 0; i < k_; ++i) {
    e.coeffs[i] = static_cast<u64>(rest % p_);
    rest /= p_;
  }
  return e;
}

BigInt Field::encode_big(const FieldElement& a) const {
  require(a);
  BigInt code = 0;
  for (unsigned i = k_; i-- > 0;) code = code * p_ + a.coeffs[i];
  return code;
}

std::uint64_t Field::encode(const FieldElement& a) const {
  if (k_ == 1) {
    require(a);
    return a.coeffs[0];
  }
  return to_u64(encode_big(a));
}

// ---------------------------------------------------------------------------

std::vector<FieldElement> split_roots(const Field& field, std::vector<FieldElement> monic) {
  const FieldRing ring{&field};
  trim(ring, monic);
  if (monic.empty()) fail(ErrorCode::InvalidArgument, "cannot split the zero polynomial");
  if (monic.back() != field.one()) fail(ErrorCode::InvalidArgument, "split_roots needs a monic polynomial");
  std::mt19937_64 rng(kSplitSeed);
  std::vector<FieldElement> roots;
  split_into(field, ring, monic, rng, roots);
  std::sort(roots.begin(), roots.end(), [&](const FieldElement& a, const FieldElement& b) {
    return field.encode_big(a) < field.encode_big(b);
  });
  return roots;
}

// ---------------------------------------------------------------------------
// QuadraticExtension

QuadraticExtension::QuadraticExtension(Field base, Field full, FieldElement theta)
    : base_(std::move(base)), full_(std::move(full)), theta_(std::move(theta)) {
  FieldElement power = full_.one();
  for (unsigned i = 0; i < base_.degree(); ++i) {
    basis_images_.push_back(power);
    power = full_.mul(power, theta_);
  }
  q_ = base_.size_u64();
}

QuadraticExtension QuadraticExtension::make(std::uint64_t p, unsigned k) {
  const PrimePower pp = make_prime_power(p, k);
  Field base = Field::make(p, k);
  const BigInt q = pp.q;
  auto unit_order = numth::merge(numth::factorize(q - 1), numth::factorize(q + 1));
  Field full = Field::make(p, 2 * k, std::move(unit_order));

  std::vector<FieldElement> lifted;
  for (u64 c : base.modulus()) {
    FieldElement e = full.zero();
    e.coeffs[0] = c;
    lifted.push_back(std::move(e));
  }
  auto roots = split_roots(full, std::move(lifted));
  if (roots.size() != k)
    fail(ErrorCode::InternalInconsistency, "base modulus does not split in the quadratic extension");
  return QuadraticExtension(std::move(base), std::move(full), roots.front());
}

FieldElement QuadraticExtension::embed(const FieldElement& a) const {
  if (!base_.contains(a)) fail(ErrorCode::InvalidArgument, "element does not belong to the base field");
  FieldElement acc = full_.zero();
  for (unsigned i = 0; i < base_.degree(); ++i) {
    if (a.coeffs[i]) acc = full_.add(acc, full_.scale(basis_images_[i], a.coeffs[i]));
  }
  return acc;
}

std::optional<FieldElement> QuadraticExtension::project(const FieldElement& alpha) const {
  if (!full_.contains(alpha)) fail(ErrorCode::InvalidArgument, "element does not belong to F_{q^2}");
  const unsigned k = base_.degree();
  const u64 p = base_.characteristic();
  if (k == 1) {
    for (unsigned i = 1; i < alpha.coeffs.size(); ++i)
      if (alpha.coeffs[i] != 0) return std::nullopt;
    return FieldElement{{alpha.coeffs[0]}};
  }
  // Solve sum_i c_i theta^i = alpha over F_p: 2k equations, k unknowns.
  const unsigned rows = 2 * k;
  std::vector<std::vector<u64>> m(rows, std::vector<u64>(k + 1));
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < k; ++c) m[r][c] = basis_images_[c].coeffs[r];
    m[r][k] = alpha.coeffs[r];
  }
  unsigned pivot_row = 0;
  std::vector<unsigned> pivot_col_row(k, rows);
  for (unsigned c = 0; c < k && pivot_row < rows; ++c) {
    unsigned sel = pivot_row;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    const u64 inv = inv_mod(m[pivot_row][c], p);
    for (auto& v : m[pivot_row]) v = mul_mod(v, inv, p);
    for (unsigned r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const u64 factor = m[r][c];
      for (unsigned cc = 0; cc <= k; ++cc) m[r][cc] = sub_mod(m[r][cc], mul_mod(factor, m[pivot_row][cc], p), p);
    }
    pivot_col_row[c] = pivot_row++;
  }
  for (unsigned r = pivot_row; r < rows; ++r)
    if (m[r][k] != 0) return std::nullopt;
  FieldElement out = base_.zero();
  for (unsigned c = 0; c < k; ++c) {
    if (pivot_col_row[c] == rows)
      fail(ErrorCode::InternalInconsistency, "embedding basis is not independent");
    out.coeffs[c] = m[pivot_col_row[c]][k];
  }
  return out;
}

bool QuadraticExtension::in_base_units(const FieldElement& alpha) const {
  return !full_.is_zero(alpha) && full_.pow(alpha, q_ - 1) == full_.one();
}

bool QuadraticExtension::in_norm_one(const FieldElement& alpha) const {
  return !full_.is_zero(alpha) && full_.pow(alpha, BigInt(q_) + 1) == full_.one();
}

bool QuadraticExtension::in_domain(const FieldElement& alpha) const {
  return in_base_units(alpha) || in_norm_one(alpha);
}

FieldElement QuadraticExtension::eta(const FieldElement& alpha) const {
  if (!in_domain(alpha)) fail(ErrorCode::OutsideDomain, "eta is defined on F_q* union H only");
  const FieldElement sum = full_.add(alpha, full_.inv(alpha));
  auto projected = project(sum);
  if (!projected) fail(ErrorCode::InternalInconsistency, "alpha + 1/alpha left the base field");
  return *projected;
}

std::vector<FieldElement> QuadraticExtension::eta_preimage(const FieldElement& a) const {
  if (!base_.contains(a)) fail(ErrorCode::InvalidArgument, "element does not belong to the base field");
  const FieldElement two = base_.constant(2);
  if (a == two) return {full_.one()};
  if (a == base_.neg(two)) return {full_.neg(full_.one())};
  std::vector<FieldElement> poly{full_.one(), full_.neg(embed(a)), full_.one()};
  auto roots = split_roots(full_, std::move(poly));
  if (roots.size() != 2) fail(ErrorCode::InternalInconsistency, "x^2 - a x + 1 did not split");
  return roots;
}

std::vector<FieldElement> QuadraticExtension::enumerate_domain(std::uint64_t budget) const {
  if (full_.size() > budget)
    fail(ErrorCode::OutOfBudget, "F_{q^2} has " + full_.size().str() + " elements, over the budget");
  const u64 total = full_.size_u64();
  std::vector<FieldElement> out;
  out.reserve(2 * q_);
  for (u64 code = 1; code < total; ++code) {
    FieldElement alpha = full_.decode(code);
    if (in_domain(alpha)) out.push_back(std::move(alpha));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chebyshev polynomials

FieldElement cheb_eval(const Field& field, const BigInt& n, const FieldElement& a) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "Chebyshev degree must be positive");
  const FieldElement two = field.constant(2);
  FieldElement lo = two;  // T_m(a)
  FieldElement hi = a;    // T_{m+1}(a)
  const unsigned top = boost::multiprecision::msb(n);
  for (unsigned i = top + 1; i-- > 0;) {
    FieldElement cross = field.sub(field.mul(lo, hi), a);
    if (boost::multiprecision::bit_test(n, i)) {
      hi = field.sub(field.mul(hi, hi), two);
      lo = std::move(cross);
    } else {
      lo = field.sub(field.mul(lo, lo), two);
      hi = std::move(cross);
    }
  }
  return lo;
}

std::vector<BigInt> cheb_coeffs(std::uint64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "Chebyshev degree must be positive");
  std::vector<BigInt> prev{2};
  std::vector<BigInt> cur{0, 1};
  for (std::uint64_t i = 1; i < n; ++i) {
    std::vector<BigInt> next(cur.size() + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldElement eval_integer_poly(const Field& field, const std::vector<BigInt>& coeffs,
                               const FieldElement& a) {
  FieldElement acc = field.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = field.mul(acc, a);
    acc = field.add(acc, field.scale(field.one(), residue(coeffs[i], field.characteristic())));
  }
  return acc;
}

}  // namespace chebgraph::ff
