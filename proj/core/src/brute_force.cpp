#include "bex/brute_force.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace bex {

PairDistanceMap bf_pair_distances(const MatroidOracle& m, ElementSet a1, ElementSet a2,
                                  std::int64_t cap_nodes) {
  PairDistanceMap dist;
  std::deque<PairGraphNode> queue;
  dist.emplace(PairGraphNode{a1, a2}, 0);
  queue.push_back({a1, a2});

#ifndef NDEBUG
  const ElementSet inv_union = a1 | a2;
  const ElementSet inv_inter = a1 & a2;
#endif

  while (!queue.empty()) {
    const PairGraphNode node = queue.front();
    queue.pop_front();
    const int d = dist.at(node);
#ifndef NDEBUG
    assert((node.first | node.second) == inv_union && (node.first & node.second) == inv_inter &&
           "exchange edges must preserve union and intersection");
#endif
    for (int x : node.first - node.second) {
      for (int y : node.second - node.first) {
        const ElementSet n1 = node.first.without(x).with(y);
        const ElementSet n2 = node.second.with(x).without(y);
        if (!m.is_independent(n1) || !m.is_independent(n2)) continue;
        const PairGraphNode next{n1, n2};
        if (dist.find(next) != dist.end()) continue;
        if (static_cast<std::int64_t>(dist.size()) >= cap_nodes) {
          throw CapacityError("basis-pair search exceeded the node cap");
        }
        dist.emplace(next, d + 1);
        queue.push_back(next);
      }
    }
  }
  return dist;
}

std::optional<int> bf_exchange_distance(const MatroidOracle& m, const BasisPairInstance& p,
                                        std::int64_t cap_nodes) {
  const PairDistanceMap dist = bf_pair_distances(m, p.a1, p.a2, cap_nodes);
  const auto it = dist.find(PairGraphNode{p.b1, p.b2});
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

namespace {

struct MonotoneSearch {
  const MatroidOracle& m;
  std::vector<int> xs, ys;  // candidates: a1 ∩ b2 and a2 ∩ b1, ascending
  std::vector<signed char> memo;

  int state_index(unsigned xmask, unsigned ymask) const {
    return static_cast<int>((xmask << ys.size()) | ymask);
  }

  int run(ElementSet cur1, ElementSet cur2, unsigned xmask, unsigned ymask) {
    signed char& slot = memo[static_cast<std::size_t>(state_index(xmask, ymask))];
    if (slot >= 0) return slot;
    int best = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if ((xmask >> i) & 1u) continue;
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if ((ymask >> j) & 1u) continue;
        if (!(cur1 - cur2).contains(xs[i]) || !(cur2 - cur1).contains(ys[j])) continue;
        const ElementSet n1 = cur1.without(xs[i]).with(ys[j]);
        const ElementSet n2 = cur2.with(xs[i]).without(ys[j]);
        if (!m.is_independent(n1) || !m.is_independent(n2)) continue;
        const int len = 1 + run(n1, n2, xmask | (1u << i), ymask | (1u << j));
        if (len > best) best = len;
      }
    }
    slot = static_cast<signed char>(best);
    return best;
  }
};

}  // namespace

int bf_longest_monotone(const MatroidOracle& m, const BasisPairInstance& p, int cap_rank) {
  if (p.a1.size() > cap_rank) {
    throw CapacityError("rank exceeds the monotone search cap");
  }
  MonotoneSearch search{m, (p.a1 & p.b2).to_vector(), (p.a2 & p.b1).to_vector(), {}};
  search.memo.assign(std::size_t{1} << (search.xs.size() + search.ys.size()), -1);
  return search.run(p.a1, p.a2, 0, 0);
}

namespace {

bool gabow_backtrack(const MatroidOracle& m, const std::vector<int>& av, const std::vector<int>& bv,
                     ElementSet a, ElementSet b, unsigned used_a, unsigned used_b,
                     std::vector<int>& a_order, std::vector<int>& b_order) {
  const std::size_t r = av.size();
  if (a_order.size() == r) return true;
  ElementSet prefix_a, prefix_b;
  for (int e : a_order) prefix_a = prefix_a.with(e);
  for (int e : b_order) prefix_b = prefix_b.with(e);
  for (std::size_t i = 0; i < r; ++i) {
    if ((used_a >> i) & 1u) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if ((used_b >> j) & 1u) continue;
      const ElementSet pa = prefix_a.with(av[i]);
      const ElementSet pb = prefix_b.with(bv[j]);
      const ElementSet mixed1 = pa | (b - pb);
      const ElementSet mixed2 = pb | (a - pa);
      if (mixed1.size() != static_cast<int>(r) || mixed2.size() != static_cast<int>(r)) continue;
      if (!m.is_independent(mixed1) || !m.is_independent(mixed2)) continue;
      a_order.push_back(av[i]);
      b_order.push_back(bv[j]);
      if (gabow_backtrack(m, av, bv, a, b, used_a | (1u << i), used_b | (1u << j), a_order, b_order)) {
        return true;
      }
      a_order.pop_back();
      b_order.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<CyclicOrdering> gabow_ordering(const MatroidOracle& m, ElementSet a, ElementSet b,
                                             int cap_rank) {
  if (a.size() > cap_rank) throw CapacityError("rank exceeds the ordering search cap");
  CyclicOrdering ord;
  const std::vector<int> av = a.to_vector();
  const std::vector<int> bv = b.to_vector();
  if (!gabow_backtrack(m, av, bv, a, b, 0, 0, ord.a_order, ord.b_order)) return std::nullopt;
  assert(gabow_ordering_valid(m, a, b, ord));
  return ord;
}

bool gabow_ordering_valid(const MatroidOracle& m, ElementSet a, ElementSet b,
                          const CyclicOrdering& ord) {
  const int r = a.size();
  if (static_cast<int>(ord.a_order.size()) != r || static_cast<int>(ord.b_order.size()) != r) {
    return false;
  }
  if (ElementSet::of(ord.a_order) != a || ElementSet::of(ord.b_order) != b) return false;
  for (int i = 0; i <= r; ++i) {
    ElementSet pa, pb;
    for (int k = 0; k < i; ++k) {
      pa = pa.with(ord.a_order[static_cast<std::size_t>(k)]);
      pb = pb.with(ord.b_order[static_cast<std::size_t>(k)]);
    }
    const ElementSet mixed1 = pa | (b - pb);
    const ElementSet mixed2 = pb | (a - pa);
    if (mixed1.size() != r || !m.is_independent(mixed1)) return false;
    if (mixed2.size() != r || !m.is_independent(mixed2)) return false;
  }
  return true;
}

bool white2_equivalent(const MatroidOracle& m, const BasisPairInstance& p, std::int64_t cap_nodes) {
  return bf_exchange_distance(m, p, cap_nodes).has_value();
}

std::vector<ElementSet> enumerate_bases(const MatroidOracle& m, int cap_n) {
  const ElementSet members = m.ground().members;
  const int n = members.size();
  if (n > cap_n) throw CapacityError("ground set too large for basis enumeration");
  const int r = oracle_rank(m, members);
  const std::vector<int> elems = members.to_vector();
  std::vector<ElementSet> bases;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) != r) continue;
    ElementSet x;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) x = x.with(elems[static_cast<std::size_t>(i)]);
    }
    if (m.is_independent(x)) bases.push_back(x);
  }
  return bases;
}

EquitableResult equitable_check(const MatroidOracle& m, int cap_n) {
  const ElementSet members = m.ground().members;
  const int n = members.size();
  if (n > cap_n) throw CapacityError("ground set too large for the equitability check");

  EquitableResult result;
  const int r = oracle_rank(m, members);
  if (2 * r != n) return result;  // not partitionable by cardinality

  std::vector<ElementSet> splittable;
  for (const ElementSet& b : enumerate_bases(m, cap_n)) {
    if (m.is_independent(members - b) && (members - b).size() == r) splittable.push_back(b);
  }
  if (splittable.empty()) return result;

  const std::vector<int> elems = members.to_vector();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet x;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) x = x.with(elems[static_cast<std::size_t>(i)]);
    }
    // The same witness basis serves a subset and its complement.
    if ((members - x) < x) continue;
    const int lo = x.size() / 2;
    const int hi = (x.size() + 1) / 2;
    bool found = false;
    for (const ElementSet& b : splittable) {
      const int c = (b & x).size();
      if (c >= lo && c <= hi) {
        result.witnesses.emplace_back(x, b);
        found = true;
        break;
      }
    }
    if (!found) {
      result.status = EquitableStatus::counterexample;
      result.violating_set = x;
      result.witnesses.clear();
      return result;
    }
  }
  result.status = EquitableStatus::equitable;
  return result;
}

namespace {

bool kuhn_augment(const std::vector<std::vector<int>>& adj, int u, std::vector<char>& visited,
                  std::vector<int>& match_of_right) {
  for (int v : adj[static_cast<std::size_t>(u)]) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    visited[static_cast<std::size_t>(v)] = 1;
    if (match_of_right[static_cast<std::size_t>(v)] < 0 ||
        kuhn_augment(adj, match_of_right[static_cast<std::size_t>(v)], visited, match_of_right)) {
      match_of_right[static_cast<std::size_t>(v)] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> base_orderable_pair(const MatroidOracle& m,
                                                                    ElementSet a, ElementSet b,
                                                                    int cap_rank) {
  const int r = a.size();
  if (r > cap_rank) throw CapacityError("rank exceeds the matching cap");
  const std::vector<int> av = a.to_vector();
  const std::vector<int> bv = b.to_vector();

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const int e = av[static_cast<std::size_t>(i)];
      const int f = bv[static_cast<std::size_t>(j)];
      const ElementSet swapped_a = a.without(e).with(f);
      const ElementSet swapped_b = b.without(f).with(e);
      if (swapped_a.size() == r && swapped_b.size() == r && m.is_independent(swapped_a) &&
          m.is_independent(swapped_b)) {
        adj[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }

  std::vector<int> match_of_right(static_cast<std::size_t>(r), -1);
  for (int u = 0; u < r; ++u) {
    std::vector<char> visited(static_cast<std::size_t>(r), 0);
    if (!kuhn_augment(adj, u, visited, match_of_right)) return std::nullopt;
  }
  std::vector<std::pair<int, int>> mapping(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    const int i = match_of_right[static_cast<std::size_t>(j)];
    mapping[static_cast<std::size_t>(i)] = {av[static_cast<std::size_t>(i)], bv[static_cast<std::size_t>(j)]};
  }
  return mapping;
}

}  // namespace bex
