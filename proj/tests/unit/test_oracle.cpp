#include <doctest.h>

#include <map>

#include "error.hpp"
#include "ff.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "structure.hpp"

using namespace chebgraph;
using namespace chebgraph::oracle;
using namespace testing_helpers;
using structure::CycleClass;

namespace {

std::vector<std::uint32_t> constant_map(std::uint32_t size, std::uint32_t target) {
  return std::vector<std::uint32_t>(size, target);
}

std::vector<std::uint32_t> identity_map(std::uint32_t size) {
  std::vector<std::uint32_t> v(size);
  for (std::uint32_t i = 0; i < size; ++i) v[i] = i;
  return v;
}

// Per-node (period, preperiod) by walking from each node with a visit map.
std::pair<std::uint64_t, std::uint64_t> walk_sums(const std::vector<std::uint32_t>& succ) {
  std::uint64_t per_sum = 0, pper_sum = 0;
  for (std::uint32_t start = 0; start < succ.size(); ++start) {
    std::map<std::uint32_t, std::uint64_t> seen;
    std::uint32_t x = start;
    for (std::uint64_t step = 0;; ++step) {
      auto [it, fresh] = seen.emplace(x, step);
      if (!fresh) {
        per_sum += step - it->second;
        pper_sum += it->second;
        break;
      }
      x = succ[x];
    }
  }
  return {per_sum, pper_sum};
}

GraphSpec spec_of(std::vector<std::uint32_t> succ) {
  return canonical_spec(brute_graph(std::move(succ)), BigInt(1), Domain::Multiplication, BigInt(1));
}

const RootedTree kT19 = node({times(1, star(6)), times(1, star(5)), times(5, dot())});
const RootedTree kT13 = node({times(2, dot()), times(1, node({times(2, dot()), times(1, star(6))}))});

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("raw graphs of simple maps") {
  const RawGraph c = brute_graph(constant_map(5, 2));
  CHECK(c.cycles.size() == 1);
  CHECK(c.cycles[0] == std::vector<std::uint32_t>{2});
  for (std::uint32_t v = 0; v < 5; ++v) {
    CHECK(c.preperiod[v] == (v == 2 ? 0u : 1u));
    CHECK(c.period[v] == 1);
  }
  CHECK(spec_of(constant_map(5, 2)).classes == std::vector{CycleClass{1, 1, star(4)}});

  const RawGraph id = brute_graph(identity_map(6));
  CHECK(id.cycles.size() == 6);
  CHECK(spec_of(identity_map(6)).classes == std::vector{CycleClass{6, 1, dot()}});

  // 0 -> 1 -> 2 -> 0 with a tail 3 -> 4 -> 0.
  const RawGraph t = brute_graph({1, 2, 0, 4, 0});
  CHECK(t.cycles.size() == 1);
  CHECK(t.cycles[0].size() == 3);
  CHECK(t.preperiod[3] == 2);
  CHECK(t.period[3] == 3);
  CHECK(t.bfs_order.size() == 5);
}

TEST_CASE("multiplication by 30 on Z_18") {
  const RawGraph g = mult_raw_graph(BigInt(30), 18);
  CHECK(g.cycles.size() == 1);
  CHECK(g.cycles[0] == std::vector<std::uint32_t>{0});
  CHECK(brute_mult(BigInt(30), 18).classes ==
        std::vector{CycleClass{1, 1, node({times(2, star(6)), times(3, dot())})}});
  for (std::uint64_t m = 1; m <= 300; ++m)
    for (std::uint64_t n = 1; n <= 20; ++n)
      REQUIRE(brute_mult(BigInt(n), m) == structure::mult_map_spec(BigInt(n), BigInt(m)));
}

TEST_CASE("non-uniform components are rejected") {
  // Cycle 0 <-> 1 where only node 0 has a predecessor.
  CHECK_THROWS_AS(spec_of({1, 0, 0}), Error);
  try {
    spec_of({1, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUniformComponent);
  }
}

TEST_CASE("brute-force Chebyshev graphs of the worked examples") {
  const auto g19 = brute_cheb(BigInt(30), ff::prime_power_of(19));
  CHECK(g19.classes == std::vector{CycleClass{1, 1, kT19}});
  const auto g23 = brute_cheb(BigInt(30), ff::prime_power_of(23));
  CHECK(g23 == structure::make_spec(BigInt(30), Domain::Chebyshev, BigInt(23),
                                    {CycleClass{1, 5, star(1)}, CycleClass{1, 1, kT13}}));
  const auto perm = brute_cheb(BigInt(7), ff::prime_power_of(16));
  for (const auto& c : perm.classes) CHECK(c.tree.is_leaf());
  CHECK(perm.total_nodes() == 16);
}

TEST_CASE("brute-force parameters agree with naive orbit walks") {
  const auto p = brute_params(BigInt(30), ff::prime_power_of(23));
  CHECK(p.N == 2);
  CHECK(p.T0 == 6);
  CHECK(p.C_hat == 63);
  CHECK(p.T_hat == 32);
  const auto id = brute_params(BigInt(1), ff::prime_power_of(5));
  CHECK(id.T_hat == 0);
  CHECK(id.C == 1);
  const auto big = brute_params(BigInt(30), ff::prime_power_of(739));
  CHECK(big.N == 4);
  CHECK(big.T0 == 39);

  for (std::uint64_t q : {7, 16, 19, 23, 25, 27, 49}) {
    const auto pp = ff::prime_power_of(q);
    const ff::Field f = ff::Field::make(pp.p, pp.k);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      const RawGraph g = cheb_raw_graph(BigInt(n), f);
      const auto [per_sum, pper_sum] = walk_sums(g.succ);
      const auto r = brute_params(g);
      REQUIRE(r.C_hat == per_sum);
      REQUIRE(r.T_hat == pper_sum);
      REQUIRE(r == structure::params_from_spec(brute_cheb(BigInt(n), pp)));
    }
  }
}

TEST_CASE("power map over the covering domain") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const auto pp = ff::prime_power_of(q);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto g = brute_power_map(BigInt(n), pp);
      REQUIRE(g.total_nodes() == (pp.even() ? 2 * q - 1 : 2 * q - 2));
      const auto split = brute_components(BigInt(n), pp);
      REQUIRE(split.rational_nodes + split.quadratic_nodes + split.special_nodes == q);
      REQUIRE(split.special_nodes >= 1);
    }
  }
}

TEST_CASE("covering checks") {
  const auto r19 = covering_checks(BigInt(30), ff::prime_power_of(19));
  CHECK(r19.ok());
  const auto r16 = covering_checks(BigInt(3), ff::prime_power_of(16));
  CHECK(r16.ok());
  const auto r7 = covering_checks(BigInt(2), ff::prime_power_of(7));
  CHECK(r7.ok());
  // F~_7 has 6 + 8 - 2 = 12 elements; all but +-1 are transported.
  CHECK(r7.transport_checked == 10);
  CHECK(r7.inversion_checked == 12);
  CHECK(r7.negation_checked == 0);
  const auto r5 = covering_checks(BigInt(3), ff::prime_power_of(5));
  CHECK(r5.ok());
  CHECK(r5.negation_checked == 5);
}

TEST_CASE("tree interner") {
  TreeInterner in;
  const std::uint32_t leaf = in.intern({});
  CHECK(leaf == 0);
  const std::uint32_t pair = in.intern({leaf, leaf});
  CHECK(in.intern({leaf, leaf}) == pair);
  CHECK(in.tree(pair) == star(2));
  CHECK(in.intern({leaf, pair}) != pair);
}

}  // TEST_SUITE
