#include "doctest.h"

#include "bex/generators.hpp"
#include "bex/split_matroid.hpp"
#include "helpers.hpp"

using namespace bex;
using bex::testing::all_subsets;
using bex::testing::one_block_rep;

TEST_CASE("validate_representation") {
  CHECK(validate_representation(one_block_rep()).empty());
  CHECK(validate_representation(k4()).empty());

  SplitRepresentation bad;
  bad.ground = GroundSet::dense(6);
  bad.rank = 3;
  bad.constraints = {{ElementSet::of({0, 1, 2}), 2}, {ElementSet::of({0, 1, 3}), 2}};
  const std::vector<Violation> violations = validate_representation(bad);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::intersection);
  CHECK(violations[0].first == 0);
  CHECK(violations[0].second == 1);

  SplitRepresentation low;  // complement condition fails
  low.ground = GroundSet::dense(4);
  low.rank = 3;
  low.constraints = {{ElementSet::of({0, 1, 2}), 1}};
  bool has_complement = false;
  for (const Violation& v : validate_representation(low)) {
    if (v.kind == ViolationKind::complement) has_complement = true;
  }
  CHECK(has_complement);

  SplitRepresentation structural;
  structural.ground = GroundSet::dense(4);
  structural.rank = 2;
  structural.constraints = {{ElementSet{}, 1}};
  CHECK_FALSE(validate_representation(structural).empty());
}

TEST_CASE("normalize_nonredundant") {
  CHECK(normalize_nonredundant(one_block_rep()) == one_block_rep());

  SplitRepresentation high_bound;
  high_bound.ground = GroundSet::dense(5);
  high_bound.rank = 2;
  high_bound.constraints = {{ElementSet::of({0, 1, 2}), 2}};
  CHECK(normalize_nonredundant(high_bound).constraints.empty());

  SplitRepresentation small_edge;
  small_edge.ground = GroundSet::dense(5);
  small_edge.rank = 3;
  small_edge.constraints = {{ElementSet::of({0, 1}), 2}};
  CHECK(normalize_nonredundant(small_edge).constraints.empty());

  SplitRepresentation invalid;
  invalid.ground = GroundSet::dense(6);
  invalid.rank = 3;
  invalid.constraints = {{ElementSet::of({0, 1, 2}), 2}, {ElementSet::of({0, 1, 3}), 2}};
  CHECK_THROWS_AS(normalize_nonredundant(invalid), InputError);
}

TEST_CASE("normalization preserves the independent sets") {
  const SplitRepresentation reps[] = {gen_elementary_split(8, 4, 3, 3), gen_paving(7, 3, 4, 2)};
  for (const SplitRepresentation& rep : reps) {
    SplitRepresentation padded = rep;
    padded.constraints.push_back({ElementSet::of({0, 1}), padded.rank + 2});  // never binds
    REQUIRE(validate_representation(padded).empty());
    const SplitRepresentation norm = normalize_nonredundant(padded);
    for (const HyperedgeConstraint& c : norm.constraints) {
      CHECK(c.bound <= norm.rank - 1);
      CHECK(c.elements.size() >= c.bound + 1);
    }
    for (const ElementSet x : all_subsets(rep)) {
      CHECK(rep_is_independent(padded, x) == rep_is_independent(norm, x));
    }
  }
}

TEST_CASE("rep_is_independent") {
  const SplitRepresentation rep = one_block_rep();
  CHECK(rep_is_independent(rep, ElementSet::of({0, 1, 3})));
  CHECK_FALSE(rep_is_independent(rep, ElementSet::of({0, 1, 2})));
  CHECK_FALSE(rep_is_independent(k4(), ElementSet::of({0, 1, 3})));  // triangle
  CHECK_THROWS_AS(rep_is_independent(rep, ElementSet::of({6})), InputError);
}

TEST_CASE("k4 representation equals the graphic matroid") {
  const SplitRepresentation rep = k4();
  for (const ElementSet x : all_subsets(rep)) {
    CHECK(rep_is_independent(rep, x) == bex::testing::k4_forest(x));
  }
}

TEST_CASE("rep_rank matches the formula and the oracle") {
  const SplitRepresentation rep = one_block_rep();
  CHECK(rep_rank(rep, ElementSet::of({0, 1, 2})) == 2);
  CHECK(rep_rank(rep, rep.ground.members) == 3);
  CHECK(rep_rank(rep, ElementSet::of({0, 1})) == 2);

  const SplitRepresentation reps[] = {rep, k4(), gen_elementary_split(8, 4, 17, 3)};
  for (const SplitRepresentation& r : reps) {
    const MatroidOracle m = rep_oracle(r);
    for (const ElementSet z : all_subsets(r)) CHECK(rep_rank(r, z) == oracle_rank(m, z));
  }

  // Sampled subsets on a larger ground set.
  const SplitRepresentation big = gen_elementary_split(12, 4, 99, 4);
  const MatroidOracle m = rep_oracle(big);
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const ElementSet z = ElementSet::from_bits(rng.next() & big.ground.members.bits());
    CHECK(rep_rank(big, z) == oracle_rank(m, z));
  }
}

TEST_CASE("tight_hyperedges") {
  const TightnessReport a = tight_hyperedges(one_block_rep(), ElementSet::of({0, 1, 3}));
  CHECK(a.tight_indices == std::vector<int>{0});
  const TightnessReport b = tight_hyperedges(k4(), ElementSet::of({0, 1, 2}));
  CHECK(b.tight_indices == std::vector<int>{0, 1, 2});
  const TightnessReport c = tight_hyperedges(gen_uniform(4, 2), ElementSet::of({0, 1}));
  CHECK(c.tight_indices.empty());
}

TEST_CASE("size-rank tight sets are bases and doubly tight sets are sandwiched") {
  const SplitRepresentation reps[] = {one_block_rep(), k4(), gen_sparse_paving(8, 4, 23, 4),
                                      gen_elementary_split(8, 3, 31, 3)};
  for (const SplitRepresentation& rep : reps) {
    const SplitRepresentation norm = normalize_nonredundant(rep);
    for (const ElementSet f : all_subsets(norm)) {
      if (f.size() != norm.rank) continue;
      const TightnessReport report = tight_hyperedges(norm, f);
      if (!report.tight_indices.empty()) CHECK(rep_is_independent(norm, f));
      for (std::size_t i = 0; i < report.tight_indices.size(); ++i) {
        for (std::size_t j = i + 1; j < report.tight_indices.size(); ++j) {
          const ElementSet hi = norm.constraints[static_cast<std::size_t>(report.tight_indices[i])].elements;
          const ElementSet hj = norm.constraints[static_cast<std::size_t>(report.tight_indices[j])].elements;
          CHECK((hi & hj).subset_of(f));
          CHECK(f.subset_of(hi | hj));
        }
      }
    }
  }
}

TEST_CASE("contract_representation") {
  const SplitRepresentation rep = one_block_rep();

  CHECK(contract_representation(rep, ElementSet{}) == rep);

  const SplitRepresentation c0 = contract_representation(rep, ElementSet::of({0}));
  CHECK(c0.rank == 2);
  CHECK(c0.ground.members == ElementSet::of({1, 2, 3, 4, 5}));
  REQUIRE(c0.constraints.size() == 1);
  CHECK(c0.constraints[0].elements == ElementSet::of({1, 2}));
  CHECK(c0.constraints[0].bound == 1);

  const SplitRepresentation c3 = contract_representation(rep, ElementSet::of({3}));
  CHECK(c3.rank == 2);
  CHECK(c3.constraints.empty());  // uniform of rank 2 on five elements

  CHECK_THROWS_AS(contract_representation(rep, ElementSet::of({0, 1, 2})), InputError);
}

TEST_CASE("representation contraction commutes with oracle contraction") {
  const SplitRepresentation reps[] = {one_block_rep(), k4(), gen_elementary_split(7, 3, 41, 3),
                                      gen_paving(7, 3, 43, 2)};
  for (const SplitRepresentation& rep : reps) {
    const MatroidOracle m = rep_oracle(rep);
    for (const ElementSet t : all_subsets(rep)) {
      if (t.size() > 2 || !rep_is_independent(rep, t)) continue;
      const SplitRepresentation rc = contract_representation(rep, t);
      REQUIRE(validate_representation(rc).empty());
      const MatroidOracle mc = contract_oracle(m, t);
      for (const ElementSet x : all_subsets(rep)) {
        if (!x.subset_of(rep.ground.members - t)) continue;
        CHECK(rep_is_independent(rc, x) == mc.is_independent(x));
      }
    }
  }
}
