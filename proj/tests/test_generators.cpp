#include "doctest.h"

#include "bex/brute_force.hpp"
#include "bex/generators.hpp"
#include "helpers.hpp"

using namespace bex;
using bex::testing::all_subsets;

TEST_CASE("gen_uniform") {
  const SplitRepresentation u24 = gen_uniform(4, 2);
  CHECK(u24.constraints.empty());
  CHECK(u24.rank == 2);

  const SplitRepresentation zero = gen_uniform(3, 0);
  CHECK(rep_is_independent(zero, ElementSet{}));
  CHECK_FALSE(rep_is_independent(zero, ElementSet::of({0})));

  const SplitRepresentation free = gen_uniform(5, 5);
  CHECK(rep_is_independent(free, ElementSet::first_n(5)));

  CHECK_THROWS_AS(gen_uniform(3, 4), InputError);
}

TEST_CASE("generators are deterministic") {
  for (Family family : {Family::sparse_paving, Family::paving, Family::elementary_split}) {
    GeneratorConfig config{family, 8, 4, 42, 4};
    CHECK(generate(config) == generate(config));
    GeneratorConfig other = config;
    other.seed = 43;
    // Different seeds almost surely give different hyperedges.
    CHECK(generate(config) != generate(other));
  }
}

TEST_CASE("generated instances validate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(validate_representation(gen_sparse_paving(8, 4, seed, 4)).empty());
    CHECK(validate_representation(gen_paving(7, 3, seed, 3)).empty());
    CHECK(validate_representation(gen_elementary_split(8, 4, seed, 4)).empty());
  }
  CHECK(gen_sparse_paving(6, 3, 1, 0).constraints.empty());
  CHECK(gen_paving(6, 3, 1, 0).constraints.empty());
}

TEST_CASE("sparse paving structure") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SplitRepresentation rep = gen_sparse_paving(8, 4, seed, 5);
    for (const HyperedgeConstraint& c : rep.constraints) {
      CHECK(c.elements.size() == rep.rank);
      CHECK(c.bound == rep.rank - 1);
    }
    // Every set below the rank is independent; every rank-sized set is a
    // basis or a minimal dependent set.
    for (const ElementSet x : all_subsets(rep)) {
      if (x.size() <= rep.rank - 1) CHECK(rep_is_independent(rep, x));
      if (x.size() == rep.rank && !rep_is_independent(rep, x)) {
        for (int e : x) CHECK(rep_is_independent(rep, x.without(e)));
      }
    }
  }
}

TEST_CASE("paving hyperedges span the allowed size range") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SplitRepresentation rep = gen_paving(7, 3, seed, 2);
    for (const HyperedgeConstraint& c : rep.constraints) {
      CHECK(c.bound == rep.rank - 1);
      CHECK(c.elements.size() >= rep.rank);
      CHECK(c.elements.size() <= rep.ground.universe - 1);
    }
    for (std::size_t i = 0; i < rep.constraints.size(); ++i) {
      for (std::size_t j = i + 1; j < rep.constraints.size(); ++j) {
        CHECK((rep.constraints[i].elements & rep.constraints[j].elements).size() <= rep.rank - 2);
      }
    }
  }
}

TEST_CASE("k4 named instance") {
  const SplitRepresentation rep = k4();
  CHECK(validate_representation(rep).empty());
  CHECK_FALSE(rep_is_independent(rep, ElementSet::of({0, 1, 3})));
  CHECK(rep_is_independent(rep, ElementSet::of({0, 1, 5})));
  CHECK(rep.constraints.size() == 4);
}

TEST_CASE("elementary split instances stay valid under contraction") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SplitRepresentation rep = gen_elementary_split(8, 4, seed, 3);
    SplitMix64 rng(seed + 1);
    const ElementSet basis = random_basis(rep, rng);
    ElementSet t;
    for (int e : basis) {
      if (rng.below(2) == 1) t = t.with(e);
    }
    const SplitRepresentation contracted = contract_representation(rep, t);
    CHECK(validate_representation(contracted).empty());
  }
}

TEST_CASE("gen_compatible_pairs") {
  const SplitRepresentation rep = gen_sparse_paving(8, 4, 5, 4);
  const std::vector<BasisPairInstance> pairs = gen_compatible_pairs(rep, 17, 25);
  CHECK(pairs.size() == 25);
  for (const BasisPairInstance& p : pairs) {
    CHECK(compatible(p));
    for (const ElementSet s : {p.a1, p.a2, p.b1, p.b2}) {
      CHECK(s.size() == rep.rank);
      CHECK(rep_is_independent(rep, s));
    }
  }
  CHECK(gen_compatible_pairs(rep, 17, 0).empty());
}

TEST_CASE("enumerate_pair_classes covers all ordered basis pairs") {
  const SplitRepresentation u24 = gen_uniform(4, 2);
  const std::vector<PairClass> classes = enumerate_pair_classes(u24);
  std::size_t total = 0;
  bool has_swap_class = false;
  for (const PairClass& cls : classes) {
    total += cls.members.size();
    for (const BasisPairInstance& p : cls.members) {
      CHECK((p.a1 | p.a2) == cls.union_set);
      CHECK((p.a1 & p.a2) == cls.inter_set);
    }
    if (cls.union_set == ElementSet::first_n(4) && cls.inter_set.empty()) has_swap_class = true;
  }
  CHECK(total == 36);  // six bases, ordered pairs
  CHECK(has_swap_class);
}

TEST_CASE("random_basis respects the representation") {
  const SplitRepresentation rep = k4();
  SplitMix64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const ElementSet b = random_basis(rep, rng);
    CHECK(b.size() == 3);
    CHECK(rep_is_independent(rep, b));
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::uniform, Family::sparse_paving, Family::paving, Family::elementary_split,
                   Family::k4}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("nonsense"), InputError);
}
