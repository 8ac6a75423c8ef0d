#include "trees.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace chebgraph::trees {

struct RootedTree::Node {
  Forest children;
  BigInt node_count;
  std::size_t depth = 0;
  std::vector<BigInt> histogram;
  BigInt depth_sum;
  std::string key;
};

namespace {

std::shared_ptr<const RootedTree::Node> build_node(Forest children) {
  // Merge equal subtrees, drop empty runs, sort by key.
  std::map<std::string, Child> merged;
  for (auto& c : children) {
    if (c.multiplicity < 0) fail(ErrorCode::InvalidArgument, "negative child multiplicity");
    if (c.multiplicity == 0) continue;
    auto [it, inserted] = merged.try_emplace(c.tree.key(), c);
    if (!inserted) it->second.multiplicity += c.multiplicity;
  }
  auto node = std::make_shared<RootedTree::Node>();
  node->children.reserve(merged.size());
  node->node_count = 1;
  node->histogram = {1};
  node->depth_sum = 0;
  node->key = "(";
  for (auto& [key, c] : merged) {
    const BigInt& m = c.multiplicity;
    node->node_count += m * c.tree.node_count();
    node->depth = std::max(node->depth, c.tree.depth() + 1);
    const auto& h = c.tree.depth_histogram();
    if (node->histogram.size() < h.size() + 1) node->histogram.resize(h.size() + 1, 0);
    for (std::size_t j = 0; j < h.size(); ++j) node->histogram[j + 1] += m * h[j];
    // Every node of the child sits one level deeper than in the child.
    node->depth_sum += m * (c.tree.depth_sum() + c.tree.node_count());
    if (m != 1) node->key += m.str();
    node->key += key;
    node->children.push_back(std::move(c));
  }
  node->key += ")";
  return node;
}

std::string paren_key(const RootedTree& t) {
  if (t.is_leaf()) return "()";
  std::vector<std::pair<std::string, std::uint64_t>> parts;
  for (const auto& c : t.children()) parts.emplace_back(paren_key(c.tree), static_cast<std::uint64_t>(c.multiplicity));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& [k, m] : parts)
    for (std::uint64_t i = 0; i < m; ++i) out += k;
  out += ")";
  return out;
}

}  // namespace

RootedTree::RootedTree() {
  static const std::shared_ptr<const Node> leaf = build_node({});
  node_ = leaf;
}

RootedTree RootedTree::from_children(Forest children) {
  if (children.empty()) return RootedTree();
  return RootedTree(build_node(std::move(children)));
}

const Forest& RootedTree::children() const { return node_->children; }
bool RootedTree::is_leaf() const { return node_->children.empty(); }
const BigInt& RootedTree::node_count() const { return node_->node_count; }
std::size_t RootedTree::depth() const { return node_->depth; }
const std::vector<BigInt>& RootedTree::depth_histogram() const { return node_->histogram; }
const BigInt& RootedTree::depth_sum() const { return node_->depth_sum; }
const std::string& RootedTree::key() const { return node_->key; }

bool operator==(const RootedTree& a, const RootedTree& b) {
  return a.node_ == b.node_ || a.key() == b.key();
}

std::string RootedTree::canonical_key(std::uint64_t max_nodes) const {
  if (node_count() > max_nodes)
    fail(ErrorCode::OutOfBudget, "tree has " + node_count().str() + " nodes; parenthesis key too large");
  return paren_key(*this);
}

std::string RootedTree::pretty() const {
  if (is_leaf()) return "*";
  std::vector<const Child*> order;
  for (const auto& c : children()) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const Child* a, const Child* b) {
    if (a->tree.node_count() != b->tree.node_count()) return a->tree.node_count() > b->tree.node_count();
    return a->tree.key() < b->tree.key();
  });
  std::string out = "<";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " (+) ";
    out += order[i]->multiplicity.str() + "x" + order[i]->tree.pretty();
  }
  out += ">";
  return out;
}

RootedTree parse_canonical_key(const std::string& text) {
  std::vector<Forest> stack;
  std::optional<RootedTree> result;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (result) fail(ErrorCode::ParseError, "trailing characters after tree key at offset " + std::to_string(i));
    if (ch == '(') {
      stack.emplace_back();
    } else if (ch == ')') {
      if (stack.empty()) fail(ErrorCode::ParseError, "unbalanced ')' at offset " + std::to_string(i));
      RootedTree t = RootedTree::from_children(std::move(stack.back()));
      stack.pop_back();
      if (stack.empty()) {
        result = std::move(t);
      } else {
        stack.back().push_back({std::move(t), 1});
      }
    } else {
      fail(ErrorCode::ParseError, std::string("unexpected character '") + ch + "' in tree key");
    }
  }
  if (!result) fail(ErrorCode::ParseError, "incomplete tree key");
  return *result;
}

RootedTree tree_of_nu_series(const numth::NuSeries& series) {
  const auto& nu = series.terms;
  if (nu.empty()) fail(ErrorCode::InvalidArgument, "empty nu-series");
  const std::size_t depth = nu.size();
  // levels[k] = T^k.
  std::vector<RootedTree> levels{RootedTree::leaf()};
  auto tail = [&](std::size_t k) {
    Forest f;
    for (std::size_t i = 1; i < k; ++i) f.push_back({levels[i - 1], nu[i - 1] - nu[i]});
    return f;
  };
  for (std::size_t k = 1; k < depth; ++k) {
    Forest f = tail(k);
    f.push_back({levels[k - 1], nu[k - 1]});
    levels.push_back(RootedTree::from_children(std::move(f)));
  }
  Forest f = tail(depth);
  f.push_back({levels[depth - 1], nu[depth - 1] - 1});
  return RootedTree::from_children(std::move(f));
}

RootedTree tree_sum(const RootedTree& a, const RootedTree& b) {
  Forest f = a.children();
  f.insert(f.end(), b.children().begin(), b.children().end());
  return RootedTree::from_children(std::move(f));
}

RootedTree tree_sub(const RootedTree& a, const RootedTree& b) {
  Forest f = a.children();
  for (const auto& c : b.children()) {
    auto it = std::find_if(f.begin(), f.end(), [&](const Child& x) { return x.tree == c.tree; });
    if (it == f.end() || it->multiplicity < c.multiplicity)
      fail(ErrorCode::NotASummand, "subtrahend " + b.pretty() + " is not a summand of " + a.pretty());
    it->multiplicity -= c.multiplicity;
  }
  return RootedTree::from_children(std::move(f));
}

const char* parity_name(ParityKind kind) {
  switch (kind) {
    case ParityKind::Even: return "even";
    case ParityKind::QuasiEven: return "quasi-even";
    case ParityKind::Neither: return "neither";
  }
  return "?";
}

Parity classify_parity(const RootedTree& t) {
  Parity out;
  std::vector<const Child*> odd;
  for (const auto& c : t.children()) {
    if (boost::multiprecision::bit_test(c.multiplicity, 0)) odd.push_back(&c);
    const BigInt half = c.multiplicity / 2;
    if (half != 0) out.half.push_back({c.tree, half});
  }
  if (odd.empty()) {
    out.kind = ParityKind::Even;
    return out;
  }
  if (odd.size() == 1) {
    const Parity inner = classify_parity(odd.front()->tree);
    if (inner.kind == ParityKind::Even) {
      out.kind = ParityKind::QuasiEven;
      out.distinguished = odd.front()->tree;
      out.inner_half = inner.half;
      return out;
    }
  }
  out.half.clear();
  return out;
}

RootedTree bisect(const RootedTree& t) {
  Parity p = classify_parity(t);
  switch (p.kind) {
    case ParityKind::Even:
      return RootedTree::from_children(std::move(p.half));
    case ParityKind::QuasiEven: {
      Forest f = std::move(p.half);
      f.push_back({RootedTree::from_children(std::move(p.inner_half)), 1});
      return RootedTree::from_children(std::move(f));
    }
    case ParityKind::Neither:
      break;
  }
  fail(ErrorCode::NotBisectable, "tree " + t.pretty() + " is neither even nor quasi-even");
}

}  // namespace chebgraph::trees
