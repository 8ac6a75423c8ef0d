#pragma once

// Closed-form functional graphs. Each function here evaluates the structure
// theorems directly from arithmetic data; nothing iterates the map.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "ff.hpp"
#include "numth.hpp"
#include "trees.hpp"

namespace chebgraph::structure {

using trees::RootedTree;

/// multiplicity x Cyc(cycle_len, tree)
struct CycleClass {
  BigInt multiplicity;
  BigInt cycle_len;
  RootedTree tree;

  BigInt nodes() const { return multiplicity * cycle_len * tree.node_count(); }
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

enum class Domain { Chebyshev, PowerMap, Multiplication };

const char* domain_name(Domain d);
std::optional<Domain> parse_domain(const std::string& name);

struct GraphSpec {
  BigInt n;
  Domain domain = Domain::Chebyshev;
  /// q for Chebyshev and power maps, m for multiplication maps.
  BigInt modulus;
  /// Normal form: sorted by (cycle_len, tree key), equal pairs merged.
  std::vector<CycleClass> classes;

  BigInt total_nodes() const;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Sorts and merges `classes` into normal form.
GraphSpec make_spec(BigInt n, Domain domain, BigInt modulus, std::vector<CycleClass> classes);

/// Structural tree T_{nu(n)} for the nu-part of an n-decomposition.
RootedTree nu_tree(const BigInt& nu, const BigInt& n);

GraphSpec mult_map_spec(const BigInt& n, const BigInt& m);

std::vector<CycleClass> rational_component(const BigInt& n, const ff::PrimePower& q);
std::vector<CycleClass> quadratic_component(const BigInt& n, const ff::PrimePower& q);
std::vector<CycleClass> special_component(const BigInt& n, const ff::PrimePower& q);
/// Union of the three components; asserts the node total equals q.
GraphSpec chebyshev_graph_spec(const BigInt& n, const ff::PrimePower& q);

struct ParamReport {
  BigInt domain_size;
  BigInt N;
  BigInt T0;
  BigInt C_hat;
  BigInt T_hat;
  Rational C;
  Rational T;
  Rational R;

  friend bool operator==(const ParamReport&, const ParamReport&) = default;
};

/// Assembles C, T, R from the four integer sums.
ParamReport make_params(BigInt domain_size, BigInt N, BigInt T0, BigInt C_hat, BigInt T_hat);
ParamReport params_from_spec(const GraphSpec& spec);

struct ClosedFormReport {
  Rational N;
  Rational T0;
  Rational C;
  /// The printed partial-product expression for T, evaluated as written.
  Rational T_printed;
  ParamReport structural;

  bool N_agrees = false;
  bool T0_agrees = false;
  bool C_agrees = false;
  bool T_agrees = false;
};

ClosedFormReport params_closed_form(const BigInt& n, const ff::PrimePower& q);

struct Orbit {
  BigInt period;
  std::uint64_t preperiod = 0;
  /// Order of an eta-preimage of a, and its n-decomposition u * d.
  BigInt alpha_order;
  BigInt u;
  BigInt d;
};

/// (per, pper) of a under T_n from the order of an eta-preimage.
Orbit per_pper(const BigInt& n, const ff::QuadraticExtension& ext, const ff::FieldElement& a);

struct Predicates {
  BigInt gcd_q2m1_n;  // gcd(q^2 - 1, n)
  BigInt nu0, omega0, nu1, omega1;
  BigInt n2_mod_omega0, n2_mod_omega1;
  bool permutation = false;
  bool involution = false;
};

Predicates predicates(const BigInt& n, const ff::PrimePower& q);
bool is_permutation(const BigInt& n, const ff::PrimePower& q);
bool is_involution(const BigInt& n, const ff::PrimePower& q);
/// Cycle type of a permutation T_n; throws InvalidArgument when T_n is not one.
GraphSpec cycle_decomposition(const BigInt& n, const ff::PrimePower& q);

}  // namespace chebgraph::structure
