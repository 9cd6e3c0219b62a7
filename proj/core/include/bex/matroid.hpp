#pragma once

#include <functional>
#include <vector>

#include "bex/element_set.hpp"
#include "bex/errors.hpp"

namespace bex {

// Ground set of a matroid. Element ids live in 0..universe-1; `members` is
// the set of ids that actually belong to the ground set. Freshly constructed
// ground sets are dense (members = {0..universe-1}); contractions leave holes
// so that element ids stay stable across minors.
struct GroundSet {
  int universe = 0;
  ElementSet members;

  static GroundSet dense(int n);
  int size() const { return members.size(); }
  bool contains(ElementSet s) const { return s.subset_of(members); }
  bool contains(int e) const { return e >= 0 && e < universe && members.contains(e); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

// A matroid given by an independence predicate over subsets of its ground
// set. The predicate must be downward closed with is_independent(empty) true
// and satisfy augmentation; well-formedness is validated only by tests.
class MatroidOracle {
 public:
  using Predicate = std::function<bool(ElementSet)>;

  MatroidOracle(GroundSet ground, Predicate is_independent);

  const GroundSet& ground() const { return ground_; }
  bool is_independent(ElementSet x) const;

 private:
  GroundSet ground_;
  Predicate pred_;
};

// Ordered basis pairs (a1, a2) and (b1, b2) over a shared ground set.
struct BasisPairInstance {
  ElementSet a1, a2, b1, b2;

  friend bool operator==(const BasisPairInstance&, const BasisPairInstance&) = default;
};

// One symmetric exchange: x leaves the first set and enters the second,
// y moves the other way.
struct ExchangeStep {
  int x = -1;
  int y = -1;

  friend bool operator==(const ExchangeStep&, const ExchangeStep&) = default;
};

using ExchangeSequence = std::vector<ExchangeStep>;

// True iff x is independent and maximally so.
bool is_basis(const MatroidOracle& m, ElementSet x);

// Size of a maximum independent subset of z (greedy over the oracle).
int oracle_rank(const MatroidOracle& m, ElementSet z);

// a1 ∩ a2 == b1 ∩ b2 and a1 ∪ a2 == b1 ∪ b2.
bool compatible(const BasisPairInstance& p);

// True iff a1 - x + y and a2 + x - y are both bases. Requires x in a1 - a2
// and y in a2 - a1; a1, a2 must be bases.
bool symmetric_exchange_valid(const MatroidOracle& m, ElementSet a1, ElementSet a2, int x, int y);

// Smallest e in a - b such that a - e + f is a basis. Existence is guaranteed
// by the co-exchange axiom for bases a, b and f in b - a; a missing e signals
// a broken oracle.
int co_exchange_find(const MatroidOracle& m, ElementSet a, ElementSet b, int f);

// Applies the steps to (p.a1, p.a2) and returns true iff every step is a
// valid symmetric exchange and the final pair equals (p.b1, p.b2).
bool verify_sequence(const MatroidOracle& m, const BasisPairInstance& p, const ExchangeSequence& seq);

// Partition of the ground members into connected components: classes of the
// transitive closure of "lies on a common circuit". Loops and coloops are
// singletons. Uses brute-force circuit enumeration; refuses ground sets
// larger than `cap` elements.
std::vector<ElementSet> connected_components(const MatroidOracle& m, int cap = 16);

// Matroid on ground - t where x is independent iff x ∪ t is independent in m.
// Requires t independent.
MatroidOracle contract_oracle(const MatroidOracle& m, ElementSet t);

}  // namespace bex
