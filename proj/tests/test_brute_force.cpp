#include "doctest.h"

#include <algorithm>

#include "bex/brute_force.hpp"
#include "bex/generators.hpp"
#include "helpers.hpp"

using namespace bex;
using bex::testing::one_block_rep;

TEST_CASE("bf_exchange_distance") {
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  const BasisPairInstance same{ElementSet::of({0, 1}), ElementSet::of({2, 3}), ElementSet::of({0, 1}),
                               ElementSet::of({2, 3})};
  CHECK(bf_exchange_distance(u24, same) == 0);

  const BasisPairInstance swap{ElementSet::of({0, 1}), ElementSet::of({2, 3}), ElementSet::of({2, 3}),
                               ElementSet::of({0, 1})};
  CHECK(bf_exchange_distance(u24, swap) == 2);

  const BasisPairInstance incompatible{ElementSet::of({0, 1}), ElementSet::of({2, 3}),
                                       ElementSet::of({0, 2}), ElementSet::of({0, 3})};
  CHECK_FALSE(bf_exchange_distance(u24, incompatible).has_value());

  CHECK_THROWS_AS(bf_exchange_distance(u24, swap, 2), CapacityError);
}

TEST_CASE("brute-force distance respects the lower bound") {
  const SplitRepresentation rep = gen_sparse_paving(7, 3, 3, 3);
  const MatroidOracle m = rep_oracle(rep);
  for (const BasisPairInstance& p : gen_compatible_pairs(rep, 8, 50)) {
    const std::optional<int> d = bf_exchange_distance(m, p);
    REQUIRE(d.has_value());
    CHECK(*d >= p.a1.size() - (p.a1 & p.b1).size());
  }
}

TEST_CASE("distance is invariant under relabeling and symmetric in the pairs") {
  const SplitRepresentation rep = gen_elementary_split(7, 3, 21, 3);
  const MatroidOracle m = rep_oracle(rep);
  SplitMix64 rng(5);
  for (const BasisPairInstance& p : gen_compatible_pairs(rep, 9, 20)) {
    const std::optional<int> forward = bf_exchange_distance(m, p);
    const std::optional<int> backward = bf_exchange_distance(m, {p.b1, p.b2, p.a1, p.a2});
    CHECK(forward == backward);

    // Random permutation of the ground set.
    std::vector<int> perm = rep.ground.members.to_vector();
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(perm.size() - i));
      std::swap(perm[i], perm[j]);
    }
    const auto map_set = [&](ElementSet s) {
      ElementSet out;
      for (int e : s) out = out.with(perm[static_cast<std::size_t>(e)]);
      return out;
    };
    const auto inverse_map_set = [&](ElementSet s) {
      ElementSet out;
      for (int e : s) {
        const auto it = std::find(perm.begin(), perm.end(), e);
        out = out.with(static_cast<int>(it - perm.begin()));
      }
      return out;
    };
    const MatroidOracle permuted(m.ground(),
                                 [&, m](ElementSet x) { return m.is_independent(inverse_map_set(x)); });
    const BasisPairInstance q{map_set(p.a1), map_set(p.a2), map_set(p.b1), map_set(p.b2)};
    CHECK(bf_exchange_distance(permuted, q) == forward);
  }
}

TEST_CASE("bf_longest_monotone") {
  const MatroidOracle m = rep_oracle(one_block_rep());
  const BasisPairInstance same{ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}),
                               ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5})};
  CHECK(bf_longest_monotone(m, same) == 0);

  const BasisPairInstance p{ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}),
                            ElementSet::of({0, 1, 4}), ElementSet::of({2, 3, 5})};
  CHECK(bf_longest_monotone(m, p) == 1);

  const MatroidOracle u36 = rep_oracle(gen_uniform(6, 3));
  const BasisPairInstance u{ElementSet::of({0, 1, 2}), ElementSet::of({3, 4, 5}),
                            ElementSet::of({0, 4, 5}), ElementSet::of({1, 2, 3})};
  CHECK(bf_longest_monotone(u36, u) == 2);  // rank minus |a1 ∩ b1|

  CHECK_THROWS_AS(bf_longest_monotone(rep_oracle(gen_uniform(14, 7)),
                                      {ElementSet::first_n(7), ElementSet::of({7, 8, 9, 10, 11, 12, 13}),
                                       ElementSet::first_n(7), ElementSet::of({7, 8, 9, 10, 11, 12, 13})}),
                  CapacityError);
}

TEST_CASE("gabow_ordering") {
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  const auto ord = gabow_ordering(u24, ElementSet::of({0, 1}), ElementSet::of({2, 3}));
  REQUIRE(ord.has_value());
  CHECK(gabow_ordering_valid(u24, ElementSet::of({0, 1}), ElementSet::of({2, 3}), *ord));

  const MatroidOracle k4m = rep_oracle(k4());
  // Two disjoint spanning trees.
  const ElementSet t1 = ElementSet::of({0, 1, 5});
  const ElementSet t2 = ElementSet::of({2, 3, 4});
  REQUIRE(is_basis(k4m, t1));
  REQUIRE(is_basis(k4m, t2));
  const auto k4ord = gabow_ordering(k4m, t1, t2);
  REQUIRE(k4ord.has_value());
  CHECK(gabow_ordering_valid(k4m, t1, t2, *k4ord));

  const MatroidOracle rank1 = rep_oracle(gen_uniform(2, 1));
  const auto tiny = gabow_ordering(rank1, ElementSet::of({0}), ElementSet::of({1}));
  REQUIRE(tiny.has_value());
  CHECK(tiny->a_order == std::vector<int>{0});
  CHECK(tiny->b_order == std::vector<int>{1});
}

TEST_CASE("white2_equivalent") {
  const SplitRepresentation rep = one_block_rep();
  const MatroidOracle m = rep_oracle(rep);
  const BasisPairInstance p{ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}),
                            ElementSet::of({0, 1, 4}), ElementSet::of({2, 3, 5})};
  CHECK(white2_equivalent(m, p));
  CHECK(compatible(p));

  const BasisPairInstance incompatible{ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}),
                                       ElementSet::of({0, 1, 4}), ElementSet::of({2, 4, 5})};
  CHECK_FALSE(white2_equivalent(m, incompatible));

  const BasisPairInstance same{p.a1, p.a2, p.a1, p.a2};
  CHECK(white2_equivalent(m, same));
}

TEST_CASE("equitable_check") {
  CHECK(equitable_check(rep_oracle(gen_uniform(4, 2))).status == EquitableStatus::equitable);
  CHECK(equitable_check(rep_oracle(k4())).status == EquitableStatus::equitable);
  CHECK(equitable_check(rep_oracle(gen_uniform(5, 2))).status == EquitableStatus::not_partitionable);
}

TEST_CASE("base_orderable_pair") {
  const MatroidOracle u36 = rep_oracle(gen_uniform(6, 3));
  CHECK(base_orderable_pair(u36, ElementSet::of({0, 1, 2}), ElementSet::of({3, 4, 5})).has_value());

  // The four-vertex graphic matroid has a disjoint spanning-tree pair with no
  // exchange bijection.
  const MatroidOracle k4m = rep_oracle(k4());
  const std::vector<ElementSet> bases = enumerate_bases(k4m);
  bool missing = false;
  for (const ElementSet& a : bases) {
    for (const ElementSet& b : bases) {
      if (!(a & b).empty()) continue;
      if (!base_orderable_pair(k4m, a, b).has_value()) missing = true;
    }
  }
  CHECK(missing);

  // The one-hyperedge instance admits a bijection for every pair of bases.
  const MatroidOracle m = rep_oracle(one_block_rep());
  for (const ElementSet& a : enumerate_bases(m)) {
    for (const ElementSet& b : enumerate_bases(m)) {
      const auto phi = base_orderable_pair(m, a, b);
      REQUIRE(phi.has_value());
      for (const auto& [e, f] : *phi) {
        CHECK(m.is_independent(a.without(e).with(f)));
        CHECK(m.is_independent(b.without(f).with(e)));
      }
    }
  }
}

TEST_CASE("enumerate_bases") {
  CHECK(enumerate_bases(rep_oracle(gen_uniform(4, 2))).size() == 6);
  CHECK(enumerate_bases(rep_oracle(k4())).size() == 16);  // spanning trees of K4
  CHECK_THROWS_AS(enumerate_bases(rep_oracle(gen_uniform(20, 2))), CapacityError);
}
