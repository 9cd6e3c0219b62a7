#pragma once

#include <numeric>
#include <vector>

#include "bex/generators.hpp"
#include "bex/matroid.hpp"
#include "bex/split_matroid.hpp"

namespace bex::testing {

// Rank-3 matroid on six elements with one circuit-hyperplane {0,1,2}.
inline SplitRepresentation one_block_rep() {
  SplitRepresentation rep;
  rep.ground = GroundSet::dense(6);
  rep.rank = 3;
  rep.constraints = {{ElementSet::of({0, 1, 2}), 2}};
  return rep;
}

// Spanning-forest test for edge subsets of the complete graph on four
// vertices, independent of the hyperedge representation. Edge order matches
// k4(): 0=ab, 1=ac, 2=ad, 3=bc, 4=bd, 5=cd.
inline bool k4_forest(ElementSet edges) {
  static const int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<int> parent(4);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (int e : edges) {
    const int a = find(ends[e][0]);
    const int b = find(ends[e][1]);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

inline MatroidOracle k4_graphic_oracle() {
  return MatroidOracle(GroundSet::dense(6), [](ElementSet x) { return k4_forest(x); });
}

// Independent reference for oracle_rank: maximum independent subset by
// enumeration over all subsets of z.
inline int brute_force_rank(const MatroidOracle& m, ElementSet z) {
  const std::vector<int> elems = z.to_vector();
  const int n = static_cast<int>(elems.size());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet x;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) x = x.with(elems[static_cast<std::size_t>(i)]);
    }
    if (m.is_independent(x) && x.size() > best) best = x.size();
  }
  return best;
}

// All subsets of the ground members of a representation.
inline std::vector<ElementSet> all_subsets(const SplitRepresentation& rep) {
  const std::vector<int> elems = rep.ground.members.to_vector();
  const int n = static_cast<int>(elems.size());
  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet x;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) x = x.with(elems[static_cast<std::size_t>(i)]);
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace bex::testing
