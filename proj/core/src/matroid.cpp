#include "bex/matroid.hpp"

#include <numeric>
#include <utility>

namespace bex {

GroundSet GroundSet::dense(int n) {
  if (n < 0 || n > ElementSet::kMaxElements) {
    throw InputError("ground set size must be in 0.." + std::to_string(ElementSet::kMaxElements));
  }
  return GroundSet{n, ElementSet::first_n(n)};
}

MatroidOracle::MatroidOracle(GroundSet ground, Predicate is_independent)
    : ground_(ground), pred_(std::move(is_independent)) {
  if (!pred_) throw InputError("independence predicate must be callable");
  if (!pred_(ElementSet{})) throw InputError("the empty set must be independent");
}

bool MatroidOracle::is_independent(ElementSet x) const {
  if (!ground_.contains(x)) {
    throw InputError("element out of ground-set range in independence query");
  }
  return pred_(x);
}

bool is_basis(const MatroidOracle& m, ElementSet x) {
  if (!m.is_independent(x)) return false;
  for (int e : m.ground().members - x) {
    if (m.is_independent(x.with(e))) return false;
  }
  return true;
}

int oracle_rank(const MatroidOracle& m, ElementSet z) {
  if (!m.ground().contains(z)) throw InputError("element out of range in rank query");
  ElementSet acc;
  for (int e : z) {
    if (m.is_independent(acc.with(e))) acc = acc.with(e);
  }
  return acc.size();
}

bool compatible(const BasisPairInstance& p) {
  return (p.a1 & p.a2) == (p.b1 & p.b2) && (p.a1 | p.a2) == (p.b1 | p.b2);
}

bool symmetric_exchange_valid(const MatroidOracle& m, ElementSet a1, ElementSet a2, int x, int y) {
  if (!(a1 - a2).contains(x)) throw InputError("x must lie in a1 - a2");
  if (!(a2 - a1).contains(y)) throw InputError("y must lie in a2 - a1");
  return is_basis(m, a1.without(x).with(y)) && is_basis(m, a2.with(x).without(y));
}

int co_exchange_find(const MatroidOracle& m, ElementSet a, ElementSet b, int f) {
  if (!(b - a).contains(f)) throw InputError("f must lie in b - a");
  for (int e : a - b) {
    if (m.is_independent(a.without(e).with(f))) return e;
  }
  throw InternalError("co-exchange axiom violated: oracle is not a matroid");
}

bool verify_sequence(const MatroidOracle& m, const BasisPairInstance& p, const ExchangeSequence& seq) {
  const GroundSet& g = m.ground();
  ElementSet x1 = p.a1;
  ElementSet x2 = p.a2;
  const int r = x1.size();
  for (const ExchangeStep& step : seq) {
    if (!g.contains(step.x) || !g.contains(step.y)) {
      throw InputError("exchange step references an element outside the ground set");
    }
    if (!(x1 - x2).contains(step.x) || !(x2 - x1).contains(step.y)) return false;
    x1 = x1.without(step.x).with(step.y);
    x2 = x2.with(step.x).without(step.y);
    if (x1.size() != r || !m.is_independent(x1) || !m.is_independent(x2)) return false;
  }
  return x1 == p.b1 && x2 == p.b2;
}

namespace {

// Disjoint-set forest over element ids.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ElementSet> connected_components(const MatroidOracle& m, int cap) {
  const ElementSet members = m.ground().members;
  const int n = members.size();
  if (n > cap) {
    throw CapacityError("ground set too large for circuit enumeration (" + std::to_string(n) +
                        " > cap " + std::to_string(cap) + ")");
  }
  const std::vector<int> elems = members.to_vector();
  UnionFind uf(m.ground().universe);

  // A circuit is a minimal dependent set; every circuit merges its elements.
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    ElementSet x;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) x = x.with(elems[static_cast<std::size_t>(i)]);
    }
    if (m.is_independent(x)) continue;
    bool minimal = true;
    for (int e : x) {
      if (!m.is_independent(x.without(e))) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    const int head = x.smallest();
    for (int e : x) uf.unite(e, head);
  }

  std::vector<ElementSet> classes;
  for (int e : members) {
    const int root = uf.find(e);
    bool placed = false;
    for (ElementSet& c : classes) {
      if (uf.find(c.smallest()) == root) {
        c = c.with(e);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(ElementSet::single(e));
  }
  return classes;
}

MatroidOracle contract_oracle(const MatroidOracle& m, ElementSet t) {
  if (!m.is_independent(t)) throw InputError("contraction set must be independent");
  GroundSet g = m.ground();
  g.members = g.members - t;
  return MatroidOracle(g, [m, t](ElementSet x) { return m.is_independent(x | t); });
}

}  // namespace bex
