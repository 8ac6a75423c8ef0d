#include "structure.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace chebgraph::structure {

namespace {

struct ArithmeticData {
  numth::NDecomposition lower;  // q - 1
  numth::NDecomposition upper;  // q + 1
};

ArithmeticData decompose(const BigInt& n, const ff::PrimePower& pp) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be a positive integer");
  const BigInt q = pp.q;
  return {numth::n_decomposition(q - 1, n), numth::n_decomposition(q + 1, n)};
}

std::vector<CycleClass> halved_component(const BigInt& n, const numth::NDecomposition& nd) {
  const RootedTree tree = nu_tree(nd.nu, n);
  std::vector<CycleClass> out;
  for (const BigInt& d : numth::divisors(nd.omega)) {
    if (d <= 2) continue;
    const BigInt len = numth::half_order(n, d);
    const BigInt num = numth::euler_phi(d);
    const BigInt den = 2 * len;
    if (num % den != 0)
      fail(ErrorCode::InternalInconsistency,
           "phi(" + d.str() + ")/(2*o~) = " + num.str() + "/" + den.str() + " is not an integer");
    out.push_back({num / den, len, tree});
  }
  return out;
}

Rational ratio(const BigInt& a, const BigInt& b) { return Rational(a, b); }

// sum_{d | omega} phi(d) * o~_d(n)^power
Rational sum_phi_order(const BigInt& n, const BigInt& omega, int power) {
  Rational acc = 0;
  for (const BigInt& d : numth::divisors(omega)) {
    const BigInt phi = numth::euler_phi(d);
    const BigInt o = numth::half_order(n, d);
    acc += power > 0 ? Rational(phi * o) : ratio(phi, o);
  }
  return acc;
}

// sum_{i=1}^{D-1} t_1 ... t_i
BigInt partial_products(const numth::NuSeries& s) {
  BigInt acc = 0;
  BigInt prod = 1;
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
    prod *= s.terms[i];
    acc += prod;
  }
  return acc;
}

}  // namespace

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Chebyshev: return "chebyshev";
    case Domain::PowerMap: return "power_map";
    case Domain::Multiplication: return "multiplication";
  }
  return "?";
}

std::optional<Domain> parse_domain(const std::string& name) {
  if (name == "chebyshev") return Domain::Chebyshev;
  if (name == "power_map") return Domain::PowerMap;
  if (name == "multiplication") return Domain::Multiplication;
  return std::nullopt;
}

BigInt GraphSpec::total_nodes() const {
  BigInt total = 0;
  for (const auto& c : classes) total += c.nodes();
  return total;
}

GraphSpec make_spec(BigInt n, Domain domain, BigInt modulus, std::vector<CycleClass> classes) {
  std::map<std::pair<BigInt, std::string>, CycleClass> merged;
  for (auto& c : classes) {
    if (c.multiplicity < 0 || c.cycle_len < 1)
      fail(ErrorCode::InvalidArgument, "cycle classes need multiplicity >= 0 and length >= 1");
    if (c.multiplicity == 0) continue;
    auto [it, inserted] = merged.try_emplace({c.cycle_len, c.tree.key()}, c);
    if (!inserted) it->second.multiplicity += c.multiplicity;
  }
  GraphSpec spec{std::move(n), domain, std::move(modulus), {}};
  for (auto& [key, c] : merged) spec.classes.push_back(std::move(c));
  return spec;
}

RootedTree nu_tree(const BigInt& nu, const BigInt& n) {
  return trees::tree_of_nu_series(numth::nu_series(nu, n));
}

GraphSpec mult_map_spec(const BigInt& n, const BigInt& m) {
  if (n < 1 || m < 1) fail(ErrorCode::InvalidArgument, "n and m must be positive integers");
  const auto nd = numth::n_decomposition(m, n);
  const RootedTree tree = nu_tree(nd.nu, n);
  std::vector<CycleClass> classes;
  for (const BigInt& d : numth::divisors(nd.omega)) {
    const BigInt len = numth::mult_order(n, d);
    const BigInt phi = numth::euler_phi(d);
    if (phi % len != 0) fail(ErrorCode::InternalInconsistency, "phi(d)/o_d(n) is not an integer");
    classes.push_back({phi / len, len, tree});
  }
  GraphSpec spec = make_spec(n, Domain::Multiplication, m, std::move(classes));
  if (spec.total_nodes() != m)
    fail(ErrorCode::InternalInconsistency, "multiplication-map spec does not cover Z_m");
  return spec;
}

std::vector<CycleClass> rational_component(const BigInt& n, const ff::PrimePower& q) {
  return halved_component(n, decompose(n, q).lower);
}

std::vector<CycleClass> quadratic_component(const BigInt& n, const ff::PrimePower& q) {
  return halved_component(n, decompose(n, q).upper);
}

std::vector<CycleClass> special_component(const BigInt& n, const ff::PrimePower& q) {
  const auto data = decompose(n, q);
  const RootedTree lower = trees::bisect(nu_tree(data.lower.nu, n));
  const RootedTree upper = trees::bisect(nu_tree(data.upper.nu, n));
  RootedTree tree = trees::tree_sum(lower, upper);
  if (q.even()) return {{1, 1, tree}};
  if (boost::multiprecision::bit_test(n, 0)) return {{2, 1, tree}};
  const RootedTree single_edge = RootedTree::from_children({{RootedTree::leaf(), 1}});
  return {{1, 1, trees::tree_sub(tree, single_edge)}};
}

GraphSpec chebyshev_graph_spec(const BigInt& n, const ff::PrimePower& q) {
  auto classes = rational_component(n, q);
  for (auto& c : quadratic_component(n, q)) classes.push_back(std::move(c));
  for (auto& c : special_component(n, q)) classes.push_back(std::move(c));
  GraphSpec spec = make_spec(n, Domain::Chebyshev, q.q, std::move(classes));
  if (spec.total_nodes() != q.q)
    fail(ErrorCode::InternalInconsistency, "Chebyshev spec covers " + spec.total_nodes().str() +
                                               " nodes instead of " + std::to_string(q.q));
  return spec;
}

ParamReport make_params(BigInt domain_size, BigInt N, BigInt T0, BigInt C_hat, BigInt T_hat) {
  if (domain_size < 1) fail(ErrorCode::InvalidArgument, "empty domain");
  ParamReport r;
  r.C = Rational(C_hat, domain_size);
  r.T = Rational(T_hat, domain_size);
  r.R = r.C + r.T;
  r.domain_size = std::move(domain_size);
  r.N = std::move(N);
  r.T0 = std::move(T0);
  r.C_hat = std::move(C_hat);
  r.T_hat = std::move(T_hat);
  return r;
}

ParamReport params_from_spec(const GraphSpec& spec) {
  BigInt N = 0, T0 = 0, C_hat = 0, T_hat = 0;
  for (const auto& c : spec.classes) {
    N += c.multiplicity;
    T0 += c.multiplicity * c.cycle_len;
    C_hat += c.multiplicity * c.cycle_len * c.cycle_len * c.tree.node_count();
    T_hat += c.multiplicity * c.cycle_len * c.tree.depth_sum();
  }
  return make_params(spec.total_nodes(), N, T0, C_hat, T_hat);
}

ClosedFormReport params_closed_form(const BigInt& n, const ff::PrimePower& pp) {
  const auto data = decompose(n, pp);
  const BigInt q = pp.q;
  const BigInt& w0 = data.lower.omega;
  const BigInt& w1 = data.upper.omega;

  ClosedFormReport r;
  r.N = (sum_phi_order(n, w0, -1) + sum_phi_order(n, w1, -1)) / 2;
  r.T0 = Rational(w0 + w1, 2);
  r.C = ratio(q - 1, 2 * q) * sum_phi_order(n, w0, 1) / w0 +
        ratio(q + 1, 2 * q) * sum_phi_order(n, w1, 1) / w1;
  const auto s0 = numth::nu_series(data.lower.nu, n);
  const auto s1 = numth::nu_series(data.upper.nu, n);
  r.T_printed = ratio(q - 1, 2 * q) * ratio(partial_products(s0), data.lower.nu) +
                ratio(q + 1, 2 * q) * ratio(partial_products(s1), data.upper.nu);

  r.structural = params_from_spec(chebyshev_graph_spec(n, pp));
  r.N_agrees = r.N == Rational(r.structural.N);
  r.T0_agrees = r.T0 == Rational(r.structural.T0);
  r.C_agrees = r.C == r.structural.C;
  r.T_agrees = r.T_printed == r.structural.T;
  return r;
}

Orbit per_pper(const BigInt& n, const ff::QuadraticExtension& ext, const ff::FieldElement& a) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be a positive integer");
  const auto preimage = ext.eta_preimage(a);
  Orbit o;
  o.alpha_order = ext.full().element_order(preimage.front());
  const auto nd = numth::n_decomposition(o.alpha_order, n);
  o.u = nd.nu;
  o.d = nd.omega;
  o.period = numth::half_order(n, o.d);
  o.preperiod = numth::min_power_divisible(o.u, n);
  return o;
}

Predicates predicates(const BigInt& n, const ff::PrimePower& pp) {
  const auto data = decompose(n, pp);
  const BigInt q = pp.q;
  Predicates p;
  p.gcd_q2m1_n = numth::gcd(q * q - 1, n);
  p.nu0 = data.lower.nu;
  p.omega0 = data.lower.omega;
  p.nu1 = data.upper.nu;
  p.omega1 = data.upper.omega;
  p.n2_mod_omega0 = numth::powmod(n, 2, p.omega0);
  p.n2_mod_omega1 = numth::powmod(n, 2, p.omega1);
  p.permutation = p.gcd_q2m1_n == 1;
  auto plus_minus_one = [](const BigInt& r, const BigInt& m) { return r == 1 % m || r == m - 1; };
  p.involution = p.nu0 == 1 && p.nu1 == 1 && plus_minus_one(p.n2_mod_omega0, p.omega0) &&
                 plus_minus_one(p.n2_mod_omega1, p.omega1);
  return p;
}

bool is_permutation(const BigInt& n, const ff::PrimePower& q) { return predicates(n, q).permutation; }
bool is_involution(const BigInt& n, const ff::PrimePower& q) { return predicates(n, q).involution; }

GraphSpec cycle_decomposition(const BigInt& n, const ff::PrimePower& q) {
  if (!is_permutation(n, q))
    fail(ErrorCode::InvalidArgument, "T_" + n.str() + " does not permute F_" + std::to_string(q.q));
  GraphSpec spec = chebyshev_graph_spec(n, q);
  for (const auto& c : spec.classes)
    if (!c.tree.is_leaf()) fail(ErrorCode::InternalInconsistency, "permutation spec has a nontrivial tree");
  return spec;
}

}  // namespace chebgraph::structure
