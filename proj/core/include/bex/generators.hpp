#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bex/split_matroid.hpp"

namespace bex {

// Identifier of the pseudo-random generator recorded in instance headers;
// instances are reproducible from (family, n, r, seed, density) alone.
inline constexpr const char* kRngAlgorithm = "splitmix64";

// SplitMix64: tiny, fixed, platform-independent PRNG.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform value in [0, bound), bound > 0, via rejection sampling.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class Family { uniform, sparse_paving, paving, elementary_split, k4 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct GeneratorConfig {
  Family family = Family::uniform;
  int n = 0;
  int r = 0;
  std::uint64_t seed = 0;
  int density = 0;  // target number of hyperedges
};

// Rank-r matroid on n elements with no hyperedge constraints.
SplitRepresentation gen_uniform(int n, int r);

// Seeded greedy family of size-r hyperedges with bound r-1 and pairwise
// intersections at most r-2 (circuit-hyperplanes). Accepts until `density`
// hyperedges are found or the attempt budget runs out.
SplitRepresentation gen_sparse_paving(int n, int r, std::uint64_t seed, int density);

// Like gen_sparse_paving but with hyperedge sizes anywhere in [r, n-1].
SplitRepresentation gen_paving(int n, int r, std::uint64_t seed, int density);

// General seeded construction: hyperedges with bounds in [1, r-1] accepted
// whenever the intersection and complement conditions stay satisfied.
SplitRepresentation gen_elementary_split(int n, int r, std::uint64_t seed, int density);

// Dispatch on config.family.
SplitRepresentation generate(const GeneratorConfig& config);

// The rank-3 matroid of spanning trees of the complete graph on four
// vertices: six elements, four triangle hyperedges with bound 2. Edge labels:
// 0=ab, 1=ac, 2=ad, 3=bc, 4=bd, 5=cd.
SplitRepresentation k4();

// A uniformly seeded random basis of the representation.
ElementSet random_basis(const SplitRepresentation& rep, SplitMix64& rng);

// Samples `count` compatible basis-pair instances: (a1, a2) are random bases
// and (b1, b2) is reached from them by a short random walk of valid
// symmetric exchanges, so every output is solvable.
std::vector<BasisPairInstance> gen_compatible_pairs(const SplitRepresentation& rep,
                                                    std::uint64_t seed, int count);

// Exhaustive grouping of all ordered basis pairs by (union, intersection);
// two pairs are compatible exactly when they share a class. Requires
// |ground| <= cap_n.
struct PairClass {
  ElementSet union_set, inter_set;
  std::vector<BasisPairInstance> members;  // (a1, a2) stored with b1 = a1, b2 = a2
};
std::vector<PairClass> enumerate_pair_classes(const SplitRepresentation& rep, int cap_n = 8);

}  // namespace bex
