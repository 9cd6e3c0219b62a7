#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bex/matroid.hpp"

namespace bex {

// Node of the basis-pair graph: an ordered pair of bases. Union and
// intersection are invariant along symmetric-exchange edges.
struct PairGraphNode {
  ElementSet first, second;

  friend bool operator==(const PairGraphNode&, const PairGraphNode&) = default;
};

struct PairGraphNodeHash {
  std::size_t operator()(const PairGraphNode& n) const {
    std::uint64_t h = n.first.bits() * 0x9e3779b97f4a7c15ULL;
    h ^= n.second.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using PairDistanceMap = std::unordered_map<PairGraphNode, int, PairGraphNodeHash>;

// Breadth-first search over symmetric exchanges starting from (a1, a2);
// distances to every reachable ordered pair. Throws CapacityError when more
// than `cap_nodes` pairs are reached.
PairDistanceMap bf_pair_distances(const MatroidOracle& m, ElementSet a1, ElementSet a2,
                                  std::int64_t cap_nodes = 1'000'000);

// Exact exchange distance by BFS; nullopt when (b1, b2) is unreachable.
std::optional<int> bf_exchange_distance(const MatroidOracle& m, const BasisPairInstance& p,
                                        std::int64_t cap_nodes = 1'000'000);

// Maximum length of a strictly monotone exchange sequence for p, by
// exhaustive search with memoization. Requires rank <= cap_rank.
int bf_longest_monotone(const MatroidOracle& m, const BasisPairInstance& p, int cap_rank = 6);

// Orderings of two bases such that every mixed prefix/suffix set
// {a_1..a_i, b_(i+1)..b_r} and {b_1..b_i, a_(i+1)..a_r} is a basis.
struct CyclicOrdering {
  std::vector<int> a_order, b_order;
};

// Backtracking search for a sequential symmetric exchange ordering of bases
// a and b; nullopt when none exists. Requires rank <= cap_rank.
std::optional<CyclicOrdering> gabow_ordering(const MatroidOracle& m, ElementSet a, ElementSet b,
                                             int cap_rank = 6);

// Whether the ordering is valid for bases a and b (direct basis checks).
bool gabow_ordering_valid(const MatroidOracle& m, ElementSet a, ElementSet b,
                          const CyclicOrdering& ord);

// The two-member basis sequences (a1, a2) and (b1, b2) are equivalent under
// symmetric exchanges iff their exchange distance is finite.
bool white2_equivalent(const MatroidOracle& m, const BasisPairInstance& p,
                       std::int64_t cap_nodes = 1'000'000);

enum class EquitableStatus { equitable, counterexample, not_partitionable };

struct EquitableResult {
  EquitableStatus status = EquitableStatus::not_partitionable;
  // For every canonical subset x (smaller of x and its complement), the basis
  // witnessing the balance bounds; meaningful when status == equitable.
  std::vector<std::pair<ElementSet, ElementSet>> witnesses;
  ElementSet violating_set;  // meaningful when status == counterexample
};

// Checks that for every subset x there is a basis b with complement a basis
// and floor(|x|/2) <= |b ∩ x| <= ceil(|x|/2). Distinguishes "the ground set
// does not partition into two bases" from a genuine counterexample.
// Requires |ground| <= cap_n.
EquitableResult equitable_check(const MatroidOracle& m, int cap_n = 12);

// A bijection phi between bases a and b with a - e + phi(e) and
// b - phi(e) + e both bases for every e, found as a perfect matching in the
// exchange-compatibility graph; nullopt when none exists.
std::optional<std::vector<std::pair<int, int>>> base_orderable_pair(const MatroidOracle& m,
                                                                    ElementSet a, ElementSet b,
                                                                    int cap_rank = 8);

// All bases of the matroid, ascending by bitmask. Requires |ground| <= cap_n.
std::vector<ElementSet> enumerate_bases(const MatroidOracle& m, int cap_n = 16);

}  // namespace bex
