#include "bex/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bex/brute_force.hpp"

namespace bex {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("below(0) is undefined");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::uniform: return "uniform";
    case Family::sparse_paving: return "sparse-paving";
    case Family::paving: return "paving";
    case Family::elementary_split: return "elementary-split";
    case Family::k4: return "k4";
  }
  throw InputError("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "uniform") return Family::uniform;
  if (name == "sparse-paving") return Family::sparse_paving;
  if (name == "paving") return Family::paving;
  if (name == "elementary-split") return Family::elementary_split;
  if (name == "k4") return Family::k4;
  throw InputError("unknown family: " + name);
}

SplitRepresentation gen_uniform(int n, int r) {
  if (r < 0 || r > n) throw InputError("uniform matroid requires 0 <= r <= n");
  SplitRepresentation rep;
  rep.ground = GroundSet::dense(n);
  rep.rank = r;
  return rep;
}

namespace {

// Random size-k subset of the ground members via partial Fisher-Yates.
ElementSet random_subset(const std::vector<int>& pool, int k, SplitMix64& rng) {
  std::vector<int> work = pool;
  ElementSet out;
  for (int i = 0; i < k; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(work.size() - static_cast<std::size_t>(i)));
    std::swap(work[static_cast<std::size_t>(i)], work[j]);
    out = out.with(work[static_cast<std::size_t>(i)]);
  }
  return out;
}

void assert_valid(const SplitRepresentation& rep, const char* what) {
  BEX_INTERNAL_CHECK(validate_representation(rep).empty(),
                     std::string("generator produced an invalid representation: ") + what);
}

}  // namespace

SplitRepresentation gen_sparse_paving(int n, int r, std::uint64_t seed, int density) {
  if (r < 2 || r > n - 1) throw InputError("sparse paving requires 2 <= r <= n-1");
  if (density < 0) throw InputError("density must be non-negative");
  SplitRepresentation rep = gen_uniform(n, r);
  SplitMix64 rng(seed);
  const std::vector<int> pool = rep.ground.members.to_vector();
  int attempts = 64 * density + 256;
  while (static_cast<int>(rep.constraints.size()) < density && attempts-- > 0) {
    const ElementSet h = random_subset(pool, r, rng);
    bool ok = true;
    for (const HyperedgeConstraint& c : rep.constraints) {
      if ((c.elements & h).size() > r - 2) {
        ok = false;
        break;
      }
    }
    if (ok) rep.constraints.push_back({h, r - 1});
  }
  assert_valid(rep, "sparse paving");
  return rep;
}

SplitRepresentation gen_paving(int n, int r, std::uint64_t seed, int density) {
  if (r < 2 || r > n - 1) throw InputError("paving requires 2 <= r <= n-1");
  if (density < 0) throw InputError("density must be non-negative");
  SplitRepresentation rep = gen_uniform(n, r);
  SplitMix64 rng(seed);
  const std::vector<int> pool = rep.ground.members.to_vector();
  int attempts = 64 * density + 256;
  while (static_cast<int>(rep.constraints.size()) < density && attempts-- > 0) {
    const int size = r + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - r)));
    const ElementSet h = random_subset(pool, size, rng);
    bool ok = true;
    for (const HyperedgeConstraint& c : rep.constraints) {
      if ((c.elements & h).size() > r - 2) {
        ok = false;
        break;
      }
    }
    if (ok) rep.constraints.push_back({h, r - 1});
  }
  assert_valid(rep, "paving");
  return rep;
}

SplitRepresentation gen_elementary_split(int n, int r, std::uint64_t seed, int density) {
  if (r < 1 || r > n) throw InputError("elementary split requires 1 <= r <= n");
  if (density < 0) throw InputError("density must be non-negative");
  SplitRepresentation rep = gen_uniform(n, r);
  if (r < 2 || r > n - 1) return rep;  // no non-trivial hyperedge fits
  SplitMix64 rng(seed);
  const std::vector<int> pool = rep.ground.members.to_vector();
  int attempts = 64 * density + 256;
  while (static_cast<int>(rep.constraints.size()) < density && attempts-- > 0) {
    const int bound = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r - 1)));
    const int size_lo = bound + 1;
    const int size_hi = std::min(n - 1, n - r + bound);
    if (size_lo > size_hi) continue;
    const int size = size_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(size_hi - size_lo + 1)));
    const ElementSet h = random_subset(pool, size, rng);
    bool ok = true;
    for (const HyperedgeConstraint& c : rep.constraints) {
      if ((c.elements & h).size() > c.bound + bound - r) {
        ok = false;
        break;
      }
    }
    if (ok) rep.constraints.push_back({h, bound});
  }
  assert_valid(rep, "elementary split");
  return rep;
}

SplitRepresentation generate(const GeneratorConfig& config) {
  switch (config.family) {
    case Family::uniform: return gen_uniform(config.n, config.r);
    case Family::sparse_paving: return gen_sparse_paving(config.n, config.r, config.seed, config.density);
    case Family::paving: return gen_paving(config.n, config.r, config.seed, config.density);
    case Family::elementary_split:
      return gen_elementary_split(config.n, config.r, config.seed, config.density);
    case Family::k4: return k4();
  }
  throw InputError("unknown family");
}

SplitRepresentation k4() {
  SplitRepresentation rep;
  rep.ground = GroundSet::dense(6);
  rep.rank = 3;
  rep.constraints = {
      {ElementSet::of({0, 1, 3}), 2},  // triangle abc
      {ElementSet::of({0, 2, 4}), 2},  // triangle abd
      {ElementSet::of({1, 2, 5}), 2},  // triangle acd
      {ElementSet::of({3, 4, 5}), 2},  // triangle bcd
  };
  assert_valid(rep, "k4");
  return rep;
}

ElementSet random_basis(const SplitRepresentation& rep, SplitMix64& rng) {
  std::vector<int> perm = rep.ground.members.to_vector();
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(perm.size() - i));
    std::swap(perm[i], perm[j]);
  }
  ElementSet acc;
  for (int e : perm) {
    if (acc.size() == rep.rank) break;
    if (rep_is_independent(rep, acc.with(e))) acc = acc.with(e);
  }
  BEX_INTERNAL_CHECK(acc.size() == rep.rank, "greedy failed to reach a basis");
  return acc;
}

std::vector<BasisPairInstance> gen_compatible_pairs(const SplitRepresentation& rep,
                                                    std::uint64_t seed, int count) {
  if (!validate_representation(rep).empty()) throw InputError("invalid representation");
  std::vector<BasisPairInstance> out;
  SplitMix64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const ElementSet a1 = random_basis(rep, rng);
    const ElementSet a2 = random_basis(rep, rng);
    ElementSet b1 = a1;
    ElementSet b2 = a2;
    const int walk = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * rep.rank + 1)));
    for (int step = 0; step < walk; ++step) {
      std::vector<ExchangeStep> moves;
      for (int x : b1 - b2) {
        for (int y : b2 - b1) {
          if (rep_is_independent(rep, b1.without(x).with(y)) &&
              rep_is_independent(rep, b2.with(x).without(y))) {
            moves.push_back({x, y});
          }
        }
      }
      if (moves.empty()) break;
      const ExchangeStep move = moves[static_cast<std::size_t>(rng.below(moves.size()))];
      b1 = b1.without(move.x).with(move.y);
      b2 = b2.with(move.x).without(move.y);
    }
    out.push_back({a1, a2, b1, b2});
  }
  return out;
}

std::vector<PairClass> enumerate_pair_classes(const SplitRepresentation& rep, int cap_n) {
  const std::vector<ElementSet> bases = enumerate_bases(rep_oracle(rep), cap_n);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
  std::vector<PairClass> classes;
  for (const ElementSet& x1 : bases) {
    for (const ElementSet& x2 : bases) {
      const std::pair<std::uint64_t, std::uint64_t> key{(x1 | x2).bits(), (x1 & x2).bits()};
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, classes.size()).first;
        classes.push_back({x1 | x2, x1 & x2, {}});
      }
      classes[it->second].members.push_back({x1, x2, x1, x2});
    }
  }
  return classes;
}

}  // namespace bex
