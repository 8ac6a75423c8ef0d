#pragma once

// Brute-force ground truth. Graphs are built by evaluating the map on every
// element, then canonicalized with AHU-style integer labels so they can be
// compared against the closed-form specs in structure.hpp.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ff.hpp"
#include "structure.hpp"
#include "trees.hpp"

namespace chebgraph::oracle {

using structure::Domain;
using structure::GraphSpec;
using structure::ParamReport;

/// Largest domain the oracle will materialize.
inline constexpr std::uint64_t kOracleBudget = 1u << 22;

struct RawGraph {
  std::vector<std::uint32_t> succ;
  std::vector<std::uint8_t> cyclic;
  std::vector<std::uint32_t> preperiod;
  /// Length of the cycle each node eventually reaches.
  std::vector<std::uint32_t> period;
  /// Index into `cycles`.
  std::vector<std::uint32_t> component;
  /// Cyclic nodes of each cycle, in successor order.
  std::vector<std::vector<std::uint32_t>> cycles;
  /// Non-cyclic predecessors, CSR layout.
  std::vector<std::uint32_t> pred_offset;
  std::vector<std::uint32_t> preds;
  /// Cyclic nodes first, then breadth-first away from the cycles.
  std::vector<std::uint32_t> bfs_order;

  std::size_t size() const { return succ.size(); }
};

RawGraph brute_graph(std::vector<std::uint32_t> successor);

/// Interns rooted trees as small integers: equal labels <=> isomorphic.
/// One interner may be shared across graphs to compare trees between them.
class TreeInterner {
 public:
  TreeInterner();

  std::uint32_t intern(const std::vector<std::uint32_t>& sorted_children);
  trees::RootedTree tree(std::uint32_t label);
  std::size_t size() const { return children_.size(); }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
  };
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> ids_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::vector<trees::RootedTree> trees_;
};

/// Label of the tree rooted at every node (the node plus all its
/// non-cyclic ancestors).
std::vector<std::uint32_t> tree_labels(const RawGraph& g, TreeInterner& interner);

/// Throws NonUniformComponent if two nodes of one cycle carry different trees.
GraphSpec canonical_spec(const RawGraph& g, const BigInt& n, Domain domain, const BigInt& modulus);

ParamReport brute_params(const RawGraph& g);

/// T_n on F_q, nodes indexed by element encoding.
RawGraph cheb_raw_graph(const BigInt& n, const ff::Field& field);
/// x -> n x on Z_m.
RawGraph mult_raw_graph(const BigInt& n, std::uint64_t m);

struct PowerMapGraph {
  RawGraph graph;
  /// Node index -> element of F_{q^2}, ascending encoding.
  std::vector<ff::FieldElement> elements;
  std::unordered_map<std::uint64_t, std::uint32_t> index_of_code;
};

/// alpha -> alpha^n on F_q* union H.
PowerMapGraph power_map_raw_graph(const BigInt& n, const ff::QuadraticExtension& ext);

GraphSpec brute_cheb(const BigInt& n, const ff::PrimePower& q);
GraphSpec brute_mult(const BigInt& n, std::uint64_t m);
GraphSpec brute_power_map(const BigInt& n, const ff::PrimePower& q);
ParamReport brute_params(const BigInt& n, const ff::PrimePower& q);

struct ComponentSplit {
  std::vector<structure::CycleClass> rational;
  std::vector<structure::CycleClass> quadratic;
  std::vector<structure::CycleClass> special;
  std::uint64_t rational_nodes = 0;
  std::uint64_t quadratic_nodes = 0;
  std::uint64_t special_nodes = 0;
};

/// Splits the brute-force graph by component type: special components
/// contain +-2; otherwise the eta-preimages of a cycle lie in F_q* or in H.
ComponentSplit brute_components(const BigInt& n, const ff::PrimePower& q);

struct CoveringReport {
  std::uint64_t transport_checked = 0;
  std::uint64_t inversion_checked = 0;
  std::uint64_t negation_checked = 0;
  std::uint64_t fibers_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Tree isomorphisms between G(r_n / F~_q) and G(T_n / F_q) through eta,
/// inversion, negation for odd n, and the fiber sizes of eta.
CoveringReport covering_checks(const BigInt& n, const ff::PrimePower& q);

}  // namespace chebgraph::oracle
