#pragma once

// Unordered rooted trees as immutable canonical values.
//
// A node stores its distinct child subtrees with multiplicities, sorted by a
// compact key in which a run of k identical children is written once with
// the prefix k. The compact key grows with the number of *distinct* subtrees,
// so trees with hundreds of millions of nodes (the shapes hanging off
// periodic points for large q) stay cheap. The balanced-parenthesis key is
// produced on demand.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "numth.hpp"

namespace chebgraph::trees {

class RootedTree;

struct Child;
using Forest = std::vector<Child>;

class RootedTree {
 public:
  /// The single-node tree.
  RootedTree();

  static RootedTree leaf() { return RootedTree(); }
  /// <m_1 x t_1 (+) ... >; zero multiplicities are dropped, equal subtrees merged.
  static RootedTree from_children(Forest children);

  const Forest& children() const;
  bool is_leaf() const;

  const BigInt& node_count() const;
  std::size_t depth() const;
  /// h[j] = number of nodes at depth j.
  const std::vector<BigInt>& depth_histogram() const;
  /// Sum over nodes of their depth.
  const BigInt& depth_sum() const;

  /// Canonical compact key; equal keys <=> isomorphic.
  const std::string& key() const;
  /// Balanced-parenthesis key ("()" for a single node). Throws OutOfBudget
  /// past `max_nodes` nodes.
  std::string canonical_key(std::uint64_t max_nodes = kDefaultKeyBudget) const;

  /// Nested rendering, e.g. "<2x<6x*> (+) 3x*>"; larger subtrees first.
  std::string pretty() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b);
  friend bool operator<(const RootedTree& a, const RootedTree& b) { return a.key() < b.key(); }

  static constexpr std::uint64_t kDefaultKeyBudget = 1u << 24;

  struct Node;  // opaque

 private:
  explicit RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Child {
  RootedTree tree;
  BigInt multiplicity;

  friend bool operator==(const Child&, const Child&) = default;
};

/// Parses a balanced-parenthesis key. Throws ParseError.
RootedTree parse_canonical_key(const std::string& text);

/// T_{nu(n)} from a nu-series.
RootedTree tree_of_nu_series(const numth::NuSeries& series);

RootedTree tree_sum(const RootedTree& a, const RootedTree& b);
/// Root-level child multiset difference a - b. Throws NotASummand.
RootedTree tree_sub(const RootedTree& a, const RootedTree& b);

enum class ParityKind { Even, QuasiEven, Neither };

const char* parity_name(ParityKind kind);

struct Parity {
  ParityKind kind = ParityKind::Neither;
  /// Even: tree = <2 x half>. QuasiEven: tree = <2 x half (+) distinguished>.
  Forest half;
  /// QuasiEven only: the odd child, itself <2 x inner_half>.
  std::optional<RootedTree> distinguished;
  Forest inner_half;
};

Parity classify_parity(const RootedTree& t);
/// Even <2xF> -> <F>; QuasiEven <2xF (+) <2xF'>> -> <F (+) <F'>>. Throws NotBisectable.
RootedTree bisect(const RootedTree& t);

}  // namespace chebgraph::trees

template <>
struct std::hash<chebgraph::trees::RootedTree> {
  std::size_t operator()(const chebgraph::trees::RootedTree& t) const noexcept {
    return std::hash<std::string>{}(t.key());
  }
};
