#pragma once

// Small independent oracles and tree literals shared by the unit suites.
// Everything here is deliberately naive: plain loops over machine integers.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "trees.hpp"

namespace testing_helpers {

using chebgraph::BigInt;
using chebgraph::trees::Child;
using chebgraph::trees::Forest;
using chebgraph::trees::RootedTree;

inline RootedTree dot() { return RootedTree::leaf(); }

inline Child times(int k, const RootedTree& t) { return Child{t, BigInt(k)}; }

/// <k_1 x t_1 (+) k_2 x t_2 ...>
inline RootedTree node(std::initializer_list<Child> kids) {
  return RootedTree::from_children(Forest(kids));
}

/// <k x *>
inline RootedTree star(int k) { return node({times(k, dot())}); }

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

inline std::uint64_t naive_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Least t >= 1 with n^t = target (mod d) for some target in `targets`.
inline std::uint64_t naive_order(std::uint64_t n, std::uint64_t d, bool allow_minus_one) {
  if (d <= 2) return 1;
  std::uint64_t x = n % d;
  for (std::uint64_t t = 1; t <= d; ++t) {
    if (x == 1 || (allow_minus_one && x == d - 1)) return t;
    x = x * (n % d) % d;
  }
  return 0;
}

/// Nodes of x -> n x on Z_m that eventually reach 0, by depth.
inline std::vector<std::uint64_t> mult_depth_census(std::uint64_t n, std::uint64_t m) {
  std::vector<std::uint64_t> hist;
  for (std::uint64_t x = 0; x < m; ++x) {
    std::uint64_t y = x, depth = 0;
    while (y != 0 && depth <= 64) {
      y = static_cast<std::uint64_t>((static_cast<unsigned __int128>(y) * n) % m);
      ++depth;
    }
    if (y != 0) continue;
    if (hist.size() <= depth) hist.resize(depth + 1, 0);
    ++hist[depth];
  }
  return hist;
}

}  // namespace testing_helpers
