#include "oracle.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace chebgraph::oracle {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void require_budget(const BigInt& size, const char* what) {
  if (size > kOracleBudget)
    fail(ErrorCode::OutOfBudget, std::string(what) + " has " + size.str() + " nodes; oracle budget is " +
                                     std::to_string(kOracleBudget));
}

void require_n(const BigInt& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be a positive integer");
}

// Bits of n from the most significant down, for repeated ladder evaluation.
std::vector<bool> ladder_bits(const BigInt& n) {
  std::vector<bool> bits;
  for (unsigned i = boost::multiprecision::msb(n) + 1; i-- > 0;) bits.push_back(boost::multiprecision::bit_test(n, i));
  return bits;
}

ff::FieldElement ladder(const ff::Field& f, const std::vector<bool>& bits, const ff::FieldElement& a,
                        const ff::FieldElement& two) {
  ff::FieldElement lo = two;
  ff::FieldElement hi = a;
  for (bool bit : bits) {
    ff::FieldElement cross = f.sub(f.mul(lo, hi), a);
    if (bit) {
      hi = f.sub(f.mul(hi, hi), two);
      lo = std::move(cross);
    } else {
      lo = f.sub(f.mul(lo, lo), two);
      hi = std::move(cross);
    }
  }
  return lo;
}

std::vector<structure::CycleClass> classes_of(const RawGraph& g, const std::vector<u32>& labels,
                                              TreeInterner& interner, const std::vector<u32>& cycle_ids) {
  std::map<std::pair<u32, u32>, u64> counts;  // (length, label) -> multiplicity
  for (u32 c : cycle_ids) {
    const auto& cyc = g.cycles[c];
    const u32 label = labels[cyc.front()];
    for (u32 v : cyc) {
      if (labels[v] != label)
        fail(ErrorCode::NonUniformComponent,
             "cycle through node " + std::to_string(cyc.front()) + " carries non-isomorphic trees");
    }
    ++counts[{static_cast<u32>(cyc.size()), label}];
  }
  std::vector<structure::CycleClass> out;
  for (const auto& [key, mult] : counts) out.push_back({mult, key.first, interner.tree(key.second)});
  return out;
}

std::vector<u32> all_cycles(const RawGraph& g) {
  std::vector<u32> ids(g.cycles.size());
  for (u32 i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

RawGraph brute_graph(std::vector<std::uint32_t> successor) {
  RawGraph g;
  const std::size_t size = successor.size();
  if (size > kOracleBudget) require_budget(size, "graph");
  g.succ = std::move(successor);
  for (u32 s : g.succ)
    if (s >= size) fail(ErrorCode::InvalidArgument, "successor index out of range");

  constexpr u32 kNone = ~u32{0};
  g.cyclic.assign(size, 0);
  g.preperiod.assign(size, 0);
  g.period.assign(size, 0);
  g.component.assign(size, kNone);

  // Three-colour walk: 0 unvisited, 1 on the current path, 2 finished.
  std::vector<std::uint8_t> colour(size, 0);
  std::vector<u32> path;
  for (u32 start = 0; start < size; ++start) {
    if (colour[start]) continue;
    path.clear();
    u32 v = start;
    while (colour[v] == 0) {
      colour[v] = 1;
      path.push_back(v);
      v = g.succ[v];
    }
    if (colour[v] == 1) {
      std::vector<u32> cycle;
      u32 w = v;
      do {
        cycle.push_back(w);
        w = g.succ[w];
      } while (w != v);
      const u32 id = static_cast<u32>(g.cycles.size());
      for (u32 c : cycle) {
        g.cyclic[c] = 1;
        g.component[c] = id;
        g.period[c] = static_cast<u32>(cycle.size());
      }
      g.cycles.push_back(std::move(cycle));
    }
    for (u32 p : path) colour[p] = 2;
  }

  // Predecessor lists restricted to non-cyclic nodes.
  g.pred_offset.assign(size + 1, 0);
  for (u32 u = 0; u < size; ++u)
    if (!g.cyclic[u]) ++g.pred_offset[g.succ[u] + 1];
  for (std::size_t i = 0; i < size; ++i) g.pred_offset[i + 1] += g.pred_offset[i];
  g.preds.assign(g.pred_offset[size], 0);
  std::vector<u32> fill(g.pred_offset.begin(), g.pred_offset.end() - 1);
  for (u32 u = 0; u < size; ++u)
    if (!g.cyclic[u]) g.preds[fill[g.succ[u]]++] = u;

  g.bfs_order.reserve(size);
  for (const auto& cyc : g.cycles) g.bfs_order.insert(g.bfs_order.end(), cyc.begin(), cyc.end());
  for (std::size_t head = 0; head < g.bfs_order.size(); ++head) {
    const u32 v = g.bfs_order[head];
    for (u32 i = g.pred_offset[v]; i < g.pred_offset[v + 1]; ++i) {
      const u32 u = g.preds[i];
      g.preperiod[u] = g.preperiod[v] + 1;
      g.period[u] = g.period[v];
      g.component[u] = g.component[v];
      g.bfs_order.push_back(u);
    }
  }
  if (g.bfs_order.size() != size) fail(ErrorCode::InternalInconsistency, "BFS did not reach every node");
  return g;
}

std::size_t TreeInterner::VecHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
  for (u32 x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

TreeInterner::TreeInterner() { intern({}); }

std::uint32_t TreeInterner::intern(const std::vector<std::uint32_t>& sorted_children) {
  auto [it, inserted] = ids_.try_emplace(sorted_children, static_cast<u32>(children_.size()));
  if (inserted) children_.push_back(sorted_children);
  return it->second;
}

trees::RootedTree TreeInterner::tree(std::uint32_t label) {
  if (label >= children_.size()) fail(ErrorCode::InvalidArgument, "unknown tree label");
  // Children always carry smaller labels than their parent, so materialize in label order.
  while (trees_.size() <= label) {
    const auto& kids = children_[trees_.size()];
    trees::Forest forest;
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j] == kids[i]) ++j;
      forest.push_back({trees_[kids[i]], static_cast<u64>(j - i)});
      i = j;
    }
    trees_.push_back(trees::RootedTree::from_children(std::move(forest)));
  }
  return trees_[label];
}

std::vector<std::uint32_t> tree_labels(const RawGraph& g, TreeInterner& interner) {
  std::vector<u32> labels(g.size(), 0);
  std::vector<u32> kids;
  for (std::size_t i = g.bfs_order.size(); i-- > 0;) {
    const u32 v = g.bfs_order[i];
    const u32 begin = g.pred_offset[v];
    const u32 end = g.pred_offset[v + 1];
    if (begin == end) continue;  // leaf: label 0
    kids.clear();
    for (u32 k = begin; k < end; ++k) kids.push_back(labels[g.preds[k]]);
    std::sort(kids.begin(), kids.end());
    labels[v] = interner.intern(kids);
  }
  return labels;
}

GraphSpec canonical_spec(const RawGraph& g, const BigInt& n, Domain domain, const BigInt& modulus) {
  TreeInterner interner;
  const auto labels = tree_labels(g, interner);
  return structure::make_spec(n, domain, modulus, classes_of(g, labels, interner, all_cycles(g)));
}

ParamReport brute_params(const RawGraph& g) {
  BigInt C_hat = 0, T_hat = 0, T0 = 0;
  u64 per_sum = 0, pper_sum = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    per_sum += g.period[v];
    pper_sum += g.preperiod[v];
  }
  C_hat = per_sum;
  T_hat = pper_sum;
  for (const auto& c : g.cycles) T0 += c.size();
  return structure::make_params(BigInt(g.size()), BigInt(g.cycles.size()), T0, C_hat, T_hat);
}

RawGraph cheb_raw_graph(const BigInt& n, const ff::Field& field) {
  require_n(n);
  require_budget(field.size(), "F_q");
  const u64 q = field.size_u64();
  const auto bits = ladder_bits(n);
  const ff::FieldElement two = field.constant(2);
  std::vector<u32> succ(q);
  for (u64 code = 0; code < q; ++code)
    succ[code] = static_cast<u32>(field.encode(ladder(field, bits, field.decode(code), two)));
  return brute_graph(std::move(succ));
}

RawGraph mult_raw_graph(const BigInt& n, std::uint64_t m) {
  require_n(n);
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be a positive integer");
  require_budget(m, "Z_m");
  const u64 r = static_cast<u64>(n % m);
  std::vector<u32> succ(m);
  for (u64 x = 0; x < m; ++x) succ[x] = static_cast<u32>(static_cast<unsigned __int128>(x) * r % m);
  return brute_graph(std::move(succ));
}

PowerMapGraph power_map_raw_graph(const BigInt& n, const ff::QuadraticExtension& ext) {
  require_n(n);
  require_budget(BigInt(2) * ext.q(), "F~_q");
  PowerMapGraph out;
  out.elements = ext.enumerate_domain(kOracleBudget * 4);
  for (u32 i = 0; i < out.elements.size(); ++i) out.index_of_code[ext.full().encode(out.elements[i])] = i;
  std::vector<u32> succ(out.elements.size());
  for (u32 i = 0; i < out.elements.size(); ++i) {
    const auto image = ext.full().pow(out.elements[i], n);
    succ[i] = out.index_of_code.at(ext.full().encode(image));
  }
  out.graph = brute_graph(std::move(succ));
  return out;
}

GraphSpec brute_cheb(const BigInt& n, const ff::PrimePower& q) {
  const ff::Field field = ff::Field::make(q.p, q.k);
  const GraphSpec spec = canonical_spec(cheb_raw_graph(n, field), n, Domain::Chebyshev, q.q);
  return spec;
}

GraphSpec brute_mult(const BigInt& n, std::uint64_t m) {
  return canonical_spec(mult_raw_graph(n, m), n, Domain::Multiplication, m);
}

GraphSpec brute_power_map(const BigInt& n, const ff::PrimePower& q) {
  const auto ext = ff::QuadraticExtension::make(q);
  const auto pm = power_map_raw_graph(n, ext);
  const u64 expected = q.even() ? 2 * q.q - 1 : 2 * q.q - 2;
  if (pm.graph.size() != expected)
    fail(ErrorCode::InternalInconsistency, "F~_q has " + std::to_string(pm.graph.size()) +
                                               " elements, expected " + std::to_string(expected));
  return canonical_spec(pm.graph, n, Domain::PowerMap, q.q);
}

ParamReport brute_params(const BigInt& n, const ff::PrimePower& q) {
  return brute_params(cheb_raw_graph(n, ff::Field::make(q.p, q.k)));
}

ComponentSplit brute_components(const BigInt& n, const ff::PrimePower& q) {
  const auto ext = ff::QuadraticExtension::make(q);
  const ff::Field& field = ext.base();
  const RawGraph g = cheb_raw_graph(n, field);
  TreeInterner interner;
  const auto labels = tree_labels(g, interner);

  const u64 plus_two = field.encode(field.constant(2));
  const u64 minus_two = field.encode(field.constant(-2));
  enum Kind { R, Q, S };
  std::vector<Kind> kind(g.cycles.size());
  std::vector<u32> by_kind[3];
  for (u32 c = 0; c < g.cycles.size(); ++c) {
    const auto& cyc = g.cycles[c];
    const bool special = std::any_of(cyc.begin(), cyc.end(), [&](u32 v) { return v == plus_two || v == minus_two; });
    if (special) {
      kind[c] = S;
    } else {
      const auto alpha = ext.eta_preimage(field.decode(static_cast<u64>(cyc.front())));
      kind[c] = ext.in_base_units(alpha.front()) ? R : Q;
    }
    by_kind[kind[c]].push_back(c);
  }

  ComponentSplit out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    switch (kind[g.component[v]]) {
      case R: ++out.rational_nodes; break;
      case Q: ++out.quadratic_nodes; break;
      case S: ++out.special_nodes; break;
    }
  }
  auto normalized = [&](Kind k) {
    return structure::make_spec(n, Domain::Chebyshev, q.q, classes_of(g, labels, interner, by_kind[k])).classes;
  };
  out.rational = normalized(R);
  out.quadratic = normalized(Q);
  out.special = normalized(S);
  return out;
}

CoveringReport covering_checks(const BigInt& n, const ff::PrimePower& q) {
  const auto ext = ff::QuadraticExtension::make(q);
  const ff::Field& base = ext.base();
  const ff::Field& full = ext.full();
  const RawGraph cheb = cheb_raw_graph(n, base);
  const PowerMapGraph pm = power_map_raw_graph(n, ext);

  // A shared interner makes labels comparable across the two graphs.
  TreeInterner interner;
  const auto cheb_labels = tree_labels(cheb, interner);
  const auto pm_labels = tree_labels(pm.graph, interner);

  CoveringReport report;
  auto violation = [&](std::string what) {
    if (report.violations.size() < 50) report.violations.push_back(std::move(what));
  };
  const ff::FieldElement one = full.one();
  const ff::FieldElement minus_one = full.neg(one);

  std::vector<u64> fiber(q.q, 0);
  for (u32 i = 0; i < pm.elements.size(); ++i) {
    const auto& alpha = pm.elements[i];
    const u64 alpha_code = full.encode(alpha);
    const u64 a = base.encode(ext.eta(alpha));
    ++fiber[a];

    if (alpha != one && alpha != minus_one) {
      ++report.transport_checked;
      if (pm_labels[i] != cheb_labels[a])
        violation("eta-transport: tree at alpha=" + std::to_string(alpha_code) + " differs from tree at a=" +
                  std::to_string(a));
    }
    ++report.inversion_checked;
    const u32 inv_index = pm.index_of_code.at(full.encode(full.inv(alpha)));
    if (pm_labels[i] != pm_labels[inv_index])
      violation("inversion: trees at alpha=" + std::to_string(alpha_code) + " and its inverse differ");
  }

  if (boost::multiprecision::bit_test(n, 0)) {
    for (u64 a = 0; a < q.q; ++a) {
      ++report.negation_checked;
      const u64 neg = base.encode(base.neg(base.decode(a)));
      if (cheb_labels[a] != cheb_labels[neg])
        violation("negation: trees at a=" + std::to_string(a) + " and -a differ");
    }
  }

  const u64 plus_two = base.encode(base.constant(2));
  const u64 minus_two = base.encode(base.constant(-2));
  for (u64 a = 0; a < q.q; ++a) {
    ++report.fibers_checked;
    const u64 expected = (a == plus_two || a == minus_two) ? 1 : 2;
    if (fiber[a] != expected)
      violation("eta fiber over a=" + std::to_string(a) + " has " + std::to_string(fiber[a]) +
                " elements, expected " + std::to_string(expected));
  }
  return report;
}

}  // namespace chebgraph::oracle
