#include "doctest.h"

#include "bex/brute_force.hpp"
#include "bex/generators.hpp"
#include "bex/matroid.hpp"
#include "bex/solver.hpp"
#include "bex/split_matroid.hpp"
#include "helpers.hpp"

using namespace bex;
using bex::testing::all_subsets;
using bex::testing::brute_force_rank;
using bex::testing::one_block_rep;

namespace {

MatroidOracle one_block_oracle() { return rep_oracle(one_block_rep()); }

}  // namespace

TEST_CASE("is_basis") {
  const MatroidOracle m = one_block_oracle();
  CHECK(is_basis(m, ElementSet::of({0, 1, 3})));
  CHECK_FALSE(is_basis(m, ElementSet::of({0, 1, 2})));
  CHECK_FALSE(is_basis(m, ElementSet::of({0, 1})));  // independent but not maximal
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  CHECK(is_basis(u24, ElementSet::of({0, 1})));
}

TEST_CASE("oracle_rank matches subset enumeration") {
  const MatroidOracle m = one_block_oracle();
  CHECK(oracle_rank(m, ElementSet::of({0, 1, 2})) == 2);
  CHECK(oracle_rank(m, ElementSet{}) == 0);
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  CHECK(oracle_rank(u24, ElementSet::of({0, 1, 2})) == 2);
  for (const ElementSet z : all_subsets(one_block_rep())) {
    CHECK(oracle_rank(m, z) == brute_force_rank(m, z));
  }
}

TEST_CASE("compatible") {
  CHECK(compatible({ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}), ElementSet::of({0, 1, 4}),
                    ElementSet::of({2, 3, 5})}));
  CHECK_FALSE(compatible({ElementSet::of({0, 1}), ElementSet::of({2, 3}), ElementSet::of({0, 1}),
                          ElementSet::of({0, 3})}));
  const BasisPairInstance same{ElementSet::of({0, 1}), ElementSet::of({2, 3}), ElementSet::of({0, 1}),
                               ElementSet::of({2, 3})};
  CHECK(compatible(same));
}

TEST_CASE("symmetric_exchange_valid") {
  const MatroidOracle m = one_block_oracle();
  const ElementSet a1 = ElementSet::of({0, 1, 3});
  const ElementSet a2 = ElementSet::of({2, 4, 5});
  CHECK(symmetric_exchange_valid(m, a1, a2, 3, 4));
  CHECK_FALSE(symmetric_exchange_valid(m, a1, a2, 3, 2));  // creates {0,1,2}
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  CHECK(symmetric_exchange_valid(u24, ElementSet::of({0, 1}), ElementSet::of({2, 3}), 0, 2));
  CHECK_THROWS_AS(symmetric_exchange_valid(m, a1, a2, 4, 3), InputError);
  CHECK_THROWS_AS(symmetric_exchange_valid(m, a1, a2, 0, 0), InputError);
}

TEST_CASE("co_exchange_find") {
  const MatroidOracle m = one_block_oracle();
  CHECK(co_exchange_find(m, ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}), 4) == 0);
  CHECK(co_exchange_find(m, ElementSet::of({0, 1, 3}), ElementSet::of({0, 2, 4}), 2) == 1);
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  CHECK(co_exchange_find(u24, ElementSet::of({0, 1}), ElementSet::of({2, 3}), 2) == 0);
  CHECK_THROWS_AS(co_exchange_find(m, ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}), 0),
                  InputError);
}

TEST_CASE("verify_sequence") {
  const MatroidOracle m = one_block_oracle();
  const BasisPairInstance p{ElementSet::of({0, 1, 3}), ElementSet::of({2, 4, 5}),
                            ElementSet::of({0, 1, 4}), ElementSet::of({2, 3, 5})};
  CHECK(verify_sequence(m, p, {{3, 4}}));
  CHECK_FALSE(verify_sequence(m, p, {{3, 2}}));
  CHECK_FALSE(verify_sequence(m, p, {}));  // does not reach the target
  const BasisPairInstance same{p.a1, p.a2, p.a1, p.a2};
  CHECK(verify_sequence(m, same, {}));
  CHECK_THROWS_AS(verify_sequence(m, p, {{9, 4}}), InputError);
}

TEST_CASE("verify_sequence respects the trivial lower bound") {
  const SplitRepresentation rep = k4();
  const MatroidOracle m = rep_oracle(rep);
  for (const BasisPairInstance& p : gen_compatible_pairs(rep, 11, 60)) {
    const ExchangeSequence seq = solve(rep, p).sequence;
    REQUIRE(verify_sequence(m, p, seq));
    CHECK(static_cast<int>(seq.size()) >= p.a1.size() - (p.a1 & p.b1).size());
  }
}

TEST_CASE("connected_components") {
  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  CHECK(connected_components(u24) == std::vector<ElementSet>{ElementSet::of({0, 1, 2, 3})});

  SplitRepresentation two_blocks;  // direct sum of two rank-1 two-element matroids
  two_blocks.ground = GroundSet::dense(4);
  two_blocks.rank = 2;
  two_blocks.constraints = {{ElementSet::of({0, 1}), 1}, {ElementSet::of({2, 3}), 1}};
  REQUIRE(validate_representation(two_blocks).empty());
  CHECK(connected_components(rep_oracle(two_blocks)) ==
        std::vector<ElementSet>{ElementSet::of({0, 1}), ElementSet::of({2, 3})});

  CHECK(connected_components(rep_oracle(k4())) == std::vector<ElementSet>{ElementSet::first_n(6)});
  CHECK_THROWS_AS(connected_components(rep_oracle(gen_uniform(20, 3))), CapacityError);
}

TEST_CASE("contract_oracle") {
  const MatroidOracle m = one_block_oracle();
  const MatroidOracle same = contract_oracle(m, ElementSet{});
  for (const ElementSet x : all_subsets(one_block_rep())) CHECK(same.is_independent(x) == m.is_independent(x));

  const MatroidOracle u24 = rep_oracle(gen_uniform(4, 2));
  const MatroidOracle u13 = contract_oracle(u24, ElementSet::of({0}));
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const ElementSet x = ElementSet::from_bits(mask);
    if (!x.subset_of(ElementSet::of({1, 2, 3}))) continue;
    CHECK(u13.is_independent(x) == (x.size() <= 1));
  }

  const MatroidOracle c3 = contract_oracle(m, ElementSet::of({3}));
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const ElementSet x = ElementSet::from_bits(mask);
    if (!x.subset_of(ElementSet::of({0, 1, 2, 4, 5}))) continue;
    CHECK(c3.is_independent(x) == (x.size() <= 2));  // uniform of rank 2 on five elements
  }
  CHECK_THROWS_AS(contract_oracle(m, ElementSet::of({0, 1, 2})), InputError);
}

TEST_CASE("symmetric exchange property holds exhaustively") {
  const SplitRepresentation reps[] = {one_block_rep(), k4(), gen_uniform(5, 2),
                                      gen_sparse_paving(7, 3, 5, 3)};
  for (const SplitRepresentation& rep : reps) {
    const MatroidOracle m = rep_oracle(rep);
    const std::vector<ElementSet> bases = enumerate_bases(m);
    for (const ElementSet& a : bases) {
      for (const ElementSet& b : bases) {
        for (int e : a - b) {
          bool found = false;
          for (int f : b - a) {
            if (m.is_independent(a.without(e).with(f)) && m.is_independent(b.with(e).without(f))) {
              found = true;
              break;
            }
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("oracle rank is monotone and submodular") {
  const SplitRepresentation reps[] = {one_block_rep(), k4(), gen_elementary_split(6, 3, 9, 2)};
  for (const SplitRepresentation& rep : reps) {
    const MatroidOracle m = rep_oracle(rep);
    const std::vector<ElementSet> subsets = all_subsets(rep);
    std::vector<int> rank(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) rank[i] = oracle_rank(m, subsets[i]);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        const ElementSet x = subsets[i];
        const ElementSet y = subsets[j];
        if (x.subset_of(y)) CHECK(rank[i] <= rank[j]);
        const int rank_union = oracle_rank(m, x | y);
        const int rank_inter = oracle_rank(m, x & y);
        CHECK(rank[i] + rank[j] >= rank_union + rank_inter);
      }
    }
  }
}

TEST_CASE("contraction rank identity") {
  const SplitRepresentation rep = one_block_rep();
  const MatroidOracle m = rep_oracle(rep);
  for (const ElementSet t : all_subsets(rep)) {
    if (t.size() > 2 || !m.is_independent(t)) continue;
    const MatroidOracle mc = contract_oracle(m, t);
    for (const ElementSet x : all_subsets(rep)) {
      if (!x.subset_of(rep.ground.members - t)) continue;
      CHECK(oracle_rank(mc, x) == oracle_rank(m, x | t) - t.size());
    }
  }
}
