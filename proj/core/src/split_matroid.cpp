#include "bex/split_matroid.hpp"

#include <cassert>

namespace bex {

std::vector<Violation> validate_representation(const SplitRepresentation& rep) {
  std::vector<Violation> out;
  const ElementSet ground = rep.ground.members;

  if (rep.rank < 0 || rep.rank > ground.size()) {
    out.push_back({ViolationKind::structural, -1, -1,
                   "rank must lie in 0..|ground| (" + std::to_string(rep.rank) + " given)"});
  }
  const int q = static_cast<int>(rep.constraints.size());
  for (int i = 0; i < q; ++i) {
    const HyperedgeConstraint& c = rep.constraints[static_cast<std::size_t>(i)];
    if (!c.elements.subset_of(ground)) {
      out.push_back({ViolationKind::structural, i, -1,
                     "hyperedge " + std::to_string(i) + " leaves the ground set"});
    }
    if (c.elements.empty() || c.elements == ground) {
      out.push_back({ViolationKind::structural, i, -1,
                     "hyperedge " + std::to_string(i) + " must be a nonempty proper subset"});
    }
    if (c.bound < 0) {
      out.push_back({ViolationKind::structural, i, -1,
                     "hyperedge " + std::to_string(i) + " has negative bound"});
    }
  }
  if (!out.empty()) return out;  // pair conditions assume structural sanity

  for (int i = 0; i < q; ++i) {
    const HyperedgeConstraint& ci = rep.constraints[static_cast<std::size_t>(i)];
    if ((ground - ci.elements).size() + ci.bound < rep.rank) {
      out.push_back({ViolationKind::complement, i, -1,
                     "constraint " + std::to_string(i) + ": |S-H| + bound < rank"});
    }
    for (int j = i + 1; j < q; ++j) {
      const HyperedgeConstraint& cj = rep.constraints[static_cast<std::size_t>(j)];
      if ((ci.elements & cj.elements).size() > ci.bound + cj.bound - rep.rank) {
        out.push_back({ViolationKind::intersection, i, j,
                       "constraints (" + std::to_string(i) + "," + std::to_string(j) +
                           "): |H_i ∩ H_j| > bound_i + bound_j - rank"});
      }
    }
  }
  return out;
}

SplitRepresentation normalize_nonredundant(const SplitRepresentation& rep) {
  if (!validate_representation(rep).empty()) {
    throw InputError("cannot normalize an invalid representation");
  }
  SplitRepresentation out;
  out.ground = rep.ground;
  out.rank = rep.rank;
  for (const HyperedgeConstraint& c : rep.constraints) {
    if (c.bound >= rep.rank) continue;            // |X ∩ H| <= |X| <= rank <= bound
    if (c.elements.size() <= c.bound) continue;   // |X ∩ H| <= |H| <= bound
    out.constraints.push_back(c);
  }
  return out;
}

bool rep_is_independent(const SplitRepresentation& rep, ElementSet x) {
  if (!rep.ground.contains(x)) throw InputError("element out of range in independence query");
  if (x.size() > rep.rank) return false;
  for (const HyperedgeConstraint& c : rep.constraints) {
    if ((x & c.elements).size() > c.bound) return false;
  }
  return true;
}

int rep_rank(const SplitRepresentation& rep, ElementSet z) {
  if (!rep.ground.contains(z)) throw InputError("element out of range in rank query");
  int best = rep.rank < z.size() ? rep.rank : z.size();
  for (const HyperedgeConstraint& c : rep.constraints) {
    const int v = (z - c.elements).size() + c.bound;
    if (v < best) best = v;
  }
  return best;
}

MatroidOracle rep_oracle(const SplitRepresentation& rep) {
  return MatroidOracle(rep.ground, [rep](ElementSet x) { return rep_is_independent(rep, x); });
}

TightnessReport tight_hyperedges(const SplitRepresentation& rep, ElementSet f) {
  TightnessReport report;
  report.set = f;
  const int q = static_cast<int>(rep.constraints.size());
  for (int i = 0; i < q; ++i) {
    const HyperedgeConstraint& c = rep.constraints[static_cast<std::size_t>(i)];
    if ((f & c.elements).size() == c.bound) report.tight_indices.push_back(i);
  }
#ifndef NDEBUG
  if (f.size() == rep.rank && !report.tight_indices.empty()) {
    assert(rep_is_independent(rep, f) && "size-rank tight set must be a basis");
    for (std::size_t a = 0; a < report.tight_indices.size(); ++a) {
      for (std::size_t b = a + 1; b < report.tight_indices.size(); ++b) {
        const ElementSet hi = rep.constraints[static_cast<std::size_t>(report.tight_indices[a])].elements;
        const ElementSet hj = rep.constraints[static_cast<std::size_t>(report.tight_indices[b])].elements;
        assert((hi & hj).subset_of(f) && f.subset_of(hi | hj) &&
               "doubly tight set must be sandwiched between intersection and union");
      }
    }
  }
#endif
  return report;
}

SplitRepresentation contract_representation(const SplitRepresentation& rep, ElementSet t) {
  if (!rep_is_independent(rep, t)) throw InputError("contraction set must be independent");
  SplitRepresentation out;
  out.ground.universe = rep.ground.universe;
  out.ground.members = rep.ground.members - t;
  out.rank = rep.rank - t.size();
  for (const HyperedgeConstraint& c : rep.constraints) {
    const int bound = c.bound - (c.elements & t).size();
    BEX_INTERNAL_CHECK(bound >= 0, "contraction by an independent set produced a negative bound");
    const ElementSet h = c.elements - t;
    // Same drop rule as normalize_nonredundant, applied inline because a
    // contracted hyperedge may cover the whole contracted ground; such a
    // constraint never binds (the complement condition forces bound >= rank).
    if (bound >= out.rank || h.size() <= bound) continue;
    out.constraints.push_back({h, bound});
  }
  return out;
}

}  // namespace bex
