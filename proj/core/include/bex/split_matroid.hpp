#pragma once

#include <string>
#include <vector>

#include "bex/matroid.hpp"

namespace bex {

// One hyperedge constraint: independent sets meet `elements` in at most
// `bound` elements.
struct HyperedgeConstraint {
  ElementSet elements;
  int bound = 0;

  friend bool operator==(const HyperedgeConstraint&, const HyperedgeConstraint&) = default;
};

// Hypergraph representation of an elementary split matroid: a set X is
// independent iff |X| <= rank and |X ∩ H_i| <= bound_i for every constraint.
// Valid representations satisfy, for all i < j,
//   intersection condition: |H_i ∩ H_j| <= bound_i + bound_j - rank
//   complement condition:   |S - H_i| + bound_i >= rank
struct SplitRepresentation {
  GroundSet ground;
  int rank = 0;
  std::vector<HyperedgeConstraint> constraints;

  friend bool operator==(const SplitRepresentation&, const SplitRepresentation&) = default;
};

enum class ViolationKind { structural, intersection, complement };

struct Violation {
  ViolationKind kind = ViolationKind::structural;
  int first = -1;   // constraint index, -1 for representation-level issues
  int second = -1;  // second constraint index for pair conditions
  std::string message;
};

// Empty iff the representation is valid. Violations are data, not errors.
std::vector<Violation> validate_representation(const SplitRepresentation& rep);

// Drops constraints that can never bind (bound >= rank, or |H| <= bound),
// keeping input order. The independent-set family is unchanged, and every
// surviving constraint has bound <= rank-1 and |H| >= bound+1.
SplitRepresentation normalize_nonredundant(const SplitRepresentation& rep);

// The canonical independence predicate of a representation.
bool rep_is_independent(const SplitRepresentation& rep, ElementSet x);

// Closed-form rank: min{rank, |Z|, min_i |Z - H_i| + bound_i}.
int rep_rank(const SplitRepresentation& rep, ElementSet z);

// MatroidOracle view backed by rep_is_independent.
MatroidOracle rep_oracle(const SplitRepresentation& rep);

struct TightnessReport {
  ElementSet set;
  std::vector<int> tight_indices;  // i with |set ∩ H_i| == bound_i
};

// Indices of constraints met with equality by f. For a non-redundant
// representation, a size-rank set with a tight index is a basis, and a set
// tight at two indices i, j satisfies H_i ∩ H_j ⊆ f ⊆ H_i ∪ H_j; both facts
// are assert-checked in debug builds.
TightnessReport tight_hyperedges(const SplitRepresentation& rep, ElementSet f);

// Representation of the contraction by an independent set t: ground - t,
// rank - |t|, constraints (H_i - t, bound_i - |H_i ∩ t|), normalized.
SplitRepresentation contract_representation(const SplitRepresentation& rep, ElementSet t);

}  // namespace bex
