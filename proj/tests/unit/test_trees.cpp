#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "error.hpp"
#include "helpers.hpp"
#include "numth.hpp"
#include "trees.hpp"

using namespace chebgraph;
using namespace chebgraph::trees;
using namespace testing_helpers;

namespace {

RootedTree nu_tree_of(std::uint64_t nu, std::uint64_t n) {
  return tree_of_nu_series(numth::nu_series(BigInt(nu), BigInt(n)));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

// A plain ordered tree, independent of RootedTree.
struct Plain {
  std::vector<Plain> kids;
};

Plain random_plain(std::mt19937_64& rng, int budget, int depth) {
  Plain t;
  if (depth == 0) return t;
  int remaining = budget;
  while (remaining > 0 && rng() % 3 != 0) {
    const int share = 1 + static_cast<int>(rng() % remaining);
    remaining -= share;
    t.kids.push_back(random_plain(rng, share - 1, depth - 1));
  }
  return t;
}

// Textbook AHU encoding: sorted concatenation of child encodings.
std::string ahu(const Plain& t) {
  std::vector<std::string> parts;
  for (const Plain& k : t.kids) parts.push_back(ahu(k));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& s : parts) out += s;
  return out + ")";
}

RootedTree build(const Plain& t, std::mt19937_64& rng) {
  Forest kids;
  for (const Plain& k : t.kids) kids.push_back(Child{build(k, rng), BigInt(1)});
  std::shuffle(kids.begin(), kids.end(), rng);
  return RootedTree::from_children(std::move(kids));
}

std::uint64_t plain_size(const Plain& t) {
  std::uint64_t s = 1;
  for (const Plain& k : t.kids) s += plain_size(k);
  return s;
}

// Random valid (nu, n): every prime of nu divides n.
std::pair<std::uint64_t, std::uint64_t> random_nu_n(std::mt19937_64& rng) {
  for (;;) {
    const std::uint64_t n = 2 + rng() % 60, nu = 1 + rng() % 10000;
    bool ok = true;
    for (auto [p, e] : trial_factor(nu)) ok = ok && n % p == 0;
    if (ok) return {nu, n};
  }
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("trees of nu-series") {
  CHECK(nu_tree_of(1, 30) == dot());
  const RootedTree t63 = nu_tree_of(18, 30);
  CHECK(t63 == node({times(2, star(6)), times(3, dot())}));
  CHECK(t63.node_count() == 18);
  CHECK(t63.depth() == 2);
  CHECK(t63.depth_histogram() == std::vector<BigInt>{1, 5, 12});
  CHECK(t63.pretty() == "<2x<6x*> (+) 3x*>");

  const RootedTree t622 = nu_tree_of(24, 30);
  CHECK(t622 == node({times(4, dot()), times(1, node({times(4, dot()), times(2, star(6))}))}));
  CHECK(t622.node_count() == 24);
  CHECK(t622.depth() == 3);
}

TEST_CASE("sizes and depth census match the multiplication map") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto [nu, n] = random_nu_n(rng);
    CAPTURE(nu);
    CAPTURE(n);
    const auto series = numth::nu_series(BigInt(nu), BigInt(n));
    const RootedTree t = tree_of_nu_series(series);
    REQUIRE(t.node_count() == nu);
    REQUIRE(t.depth() == (nu == 1 ? 0 : series.depth()));
    const auto census = mult_depth_census(n, nu);
    const auto& hist = t.depth_histogram();
    REQUIRE(hist.size() == census.size());
    BigInt cumulative = 0, prefix = 1;
    for (std::size_t j = 0; j < hist.size(); ++j) {
      REQUIRE(hist[j] == census[j]);
      cumulative += hist[j];
      if (j > 0) prefix *= series.terms[j - 1];
      REQUIRE(cumulative == prefix);
    }
  }
}

TEST_CASE("sum and subtraction") {
  const RootedTree t63 = nu_tree_of(18, 30);
  CHECK(tree_sum(dot(), t63) == t63);
  CHECK(tree_sum(t63, dot()) == t63);
  CHECK(tree_sum(star(1), star(1)) == star(2));
  CHECK(tree_sub(t63, dot()) == t63);

  const RootedTree a = node({times(2, dot()), times(1, star(6))});
  const RootedTree diff = tree_sub(a, star(1));
  CHECK(diff == node({times(1, dot()), times(1, star(6))}));
  CHECK(tree_sum(diff, star(1)) == a);
  CHECK(code_of([] { tree_sub(node({times(1, star(6))}), star(1)); }) == ErrorCode::NotASummand);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const RootedTree x = build(random_plain(rng, 30, 5), rng);
    const RootedTree y = build(random_plain(rng, 30, 5), rng);
    const RootedTree z = build(random_plain(rng, 30, 5), rng);
    REQUIRE(tree_sum(x, y).node_count() == x.node_count() + y.node_count() - 1);
    REQUIRE(tree_sum(x, y) == tree_sum(y, x));
    REQUIRE(tree_sum(tree_sum(x, y), z) == tree_sum(x, tree_sum(y, z)));
    REQUIRE(tree_sub(tree_sum(x, y), y) == x);
  }
}

TEST_CASE("parity and bisection") {
  CHECK(classify_parity(dot()).kind == ParityKind::Even);
  CHECK(bisect(dot()) == dot());
  const RootedTree t63 = nu_tree_of(18, 30);
  CHECK(classify_parity(t63).kind == ParityKind::QuasiEven);
  const RootedTree half63 = bisect(t63);
  CHECK(half63 == node({times(1, star(6)), times(2, dot())}));
  CHECK(half63.node_count() == 10);

  const RootedTree half622 = bisect(nu_tree_of(24, 30));
  CHECK(half622 == node({times(2, dot()), times(1, node({times(2, dot()), times(1, star(6))}))}));
  CHECK(half622.node_count() == 13);

  const RootedTree neither = node({times(1, dot()), times(1, star(1))});
  CHECK(classify_parity(neither).kind == ParityKind::Neither);
  CHECK(code_of([&] { bisect(neither); }) == ErrorCode::NotBisectable);
  // One odd child that is not itself even.
  CHECK(classify_parity(node({times(1, star(1))})).kind == ParityKind::Neither);
  CHECK(std::string(parity_name(ParityKind::QuasiEven)) == "quasi-even");
}

TEST_CASE("parity of nu-trees and bisection cardinality") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const auto [nu, n] = random_nu_n(rng);
    const RootedTree t = nu_tree_of(nu, n);
    const Parity parity = classify_parity(t);
    REQUIRE(parity.kind == (nu % 2 ? ParityKind::Even : ParityKind::QuasiEven));
    const BigInt half = bisect(t).node_count();
    REQUIRE(half == (nu % 2 ? (nu + 1) / 2 : (nu + 2) / 2));
  }
}

TEST_CASE("bisection distributes over sums of even trees") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const RootedTree f = build(random_plain(rng, 20, 4), rng);
    const RootedTree g = build(random_plain(rng, 20, 4), rng);
    Forest ff = f.children(), gg = g.children();
    for (auto& c : ff) c.multiplicity *= 2;
    for (auto& c : gg) c.multiplicity *= 2;
    const RootedTree ef = RootedTree::from_children(ff), eg = RootedTree::from_children(gg);
    REQUIRE(classify_parity(ef).kind == ParityKind::Even);
    REQUIRE(bisect(ef) == f);
    REQUIRE(bisect(tree_sum(ef, eg)) == tree_sum(bisect(ef), bisect(eg)));
    REQUIRE(bisect(tree_sum(ef, eg)) == tree_sum(f, g));
  }
}

TEST_CASE("canonical keys") {
  CHECK(dot().canonical_key() == "()");
  CHECK(star(2).canonical_key() == "(()())");
  const RootedTree a = RootedTree::from_children({times(1, star(1)), times(1, dot())});
  const RootedTree b = RootedTree::from_children({times(1, dot()), times(1, star(1))});
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a == b);
  CHECK(parse_canonical_key("(()(()))") == a);
  CHECK(code_of([] { parse_canonical_key("(()"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_canonical_key("()()"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_canonical_key("(x)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { star(100).canonical_key(50); }) == ErrorCode::OutOfBudget);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const Plain p = random_plain(rng, 60, 6);
    const RootedTree x = build(p, rng), y = build(p, rng);
    const std::string key = ahu(p);
    REQUIRE(x.canonical_key() == key);
    REQUIRE(y.canonical_key() == key);
    REQUIRE(x.key() == y.key());
    REQUIRE(std::hash<RootedTree>{}(x) == std::hash<RootedTree>{}(y));
    REQUIRE(x.node_count() == plain_size(p));
    REQUIRE(parse_canonical_key(key) == x);
  }
}

TEST_CASE("huge multiplicities stay compact") {
  const BigInt big = BigInt(1) << 100;
  const RootedTree t = RootedTree::from_children({Child{star(3), big}});
  CHECK(t.node_count() == 4 * big + 1);
  CHECK(t.depth_sum() == big * (1 + 2 * 3));
  CHECK(t.key().size() < 64);
  CHECK(code_of([&] { t.canonical_key(); }) == ErrorCode::OutOfBudget);
}

}  // TEST_SUITE
