#include "bex/cli/harness.hpp"

#include <algorithm>
#include <chrono>

#include "bex/brute_force.hpp"
#include "bex/solver.hpp"

namespace bex::cli {

Scale scale_from_name(const std::string& name) {
  if (name == "smoke") return Scale::smoke;
  if (name == "small") return Scale::small;
  if (name == "full") return Scale::full;
  throw InputError("unknown scale: " + name + " (expected smoke, small or full)");
}

std::string scale_name(Scale scale) {
  switch (scale) {
    case Scale::smoke: return "smoke";
    case Scale::small: return "small";
    case Scale::full: return "full";
  }
  return "?";
}

std::vector<CorpusEntry> build_corpus(Scale scale, std::uint64_t seed) {
  std::vector<CorpusEntry> corpus;

  corpus.push_back({"k4", k4(), Family::k4});
  {
    SplitRepresentation e1;
    e1.ground = GroundSet::dense(6);
    e1.rank = 3;
    e1.constraints = {{ElementSet::of({0, 1, 2}), 2}};
    corpus.push_back({"one-circuit-hyperplane", e1, Family::sparse_paving});
  }
  corpus.push_back({"uniform-2-4", gen_uniform(4, 2), Family::uniform});
  corpus.push_back({"uniform-3-6", gen_uniform(6, 3), Family::uniform});
  {
    // Direct sum of a rank-1 two-element matroid and a uniform remainder.
    SplitRepresentation sum;
    sum.ground = GroundSet::dense(6);
    sum.rank = 3;
    sum.constraints = {{ElementSet::of({0, 1}), 1}};
    corpus.push_back({"split-sum-6", sum, Family::elementary_split});
  }
  {
    SplitRepresentation sum;
    sum.ground = GroundSet::dense(7);
    sum.rank = 3;
    sum.constraints = {{ElementSet::of({0, 1, 2}), 1}};
    corpus.push_back({"split-sum-7", sum, Family::elementary_split});
  }
  {
    // k4 with two extra elements inside every hyperedge: contracting them
    // gives k4 back, so pairs sharing both extras reach the blocked path
    // through the contraction step.
    SplitRepresentation lifted;
    lifted.ground = GroundSet::dense(8);
    lifted.rank = 5;
    lifted.constraints = {{ElementSet::of({0, 1, 3, 6, 7}), 4},
                          {ElementSet::of({0, 2, 4, 6, 7}), 4},
                          {ElementSet::of({1, 2, 5, 6, 7}), 4},
                          {ElementSet::of({3, 4, 5, 6, 7}), 4}};
    corpus.push_back({"k4-lifted", lifted, Family::elementary_split});

    // Same matroid family with a leading constraint that only binds before
    // the contraction, so certificate indices must be remapped.
    SplitRepresentation shifted = lifted;
    shifted.constraints.insert(shifted.constraints.begin(), {ElementSet::of({0, 1, 4, 5}), 3});
    corpus.push_back({"k4-lifted-shifted", shifted, Family::elementary_split});
  }

  int generated = 0;
  switch (scale) {
    case Scale::smoke: generated = 24; break;
    case Scale::small: generated = 200; break;
    case Scale::full: generated = 320; break;
  }
  const Family cycle[] = {Family::elementary_split, Family::sparse_paving, Family::paving};
  for (int i = 0; i < generated; ++i) {
    GeneratorConfig config;
    config.family = cycle[i % 3];
    config.n = 5 + (i / 3) % 4;
    const int rmax = std::min(4, config.n - 1);
    config.r = 2 + (i / 12) % (rmax - 1);
    config.density = 1 + i % 4;
    config.seed = seed + static_cast<std::uint64_t>(i);
    CorpusEntry entry;
    entry.family = config.family;
    entry.rep = generate(config);
    entry.name = family_name(config.family) + "-n" + std::to_string(config.n) + "-r" +
                 std::to_string(config.r) + "-d" + std::to_string(config.density) + "-s" +
                 std::to_string(config.seed);
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

namespace {

struct Tracker {
  long long checked = 0;
  std::vector<std::string> failures;

  void fail(const std::string& msg) {
    if (failures.size() < 3) failures.push_back(msg);
  }
  bool ok() const { return failures.empty(); }
};

std::string pair_to_string(const BasisPairInstance& p) {
  return "A1=" + p.a1.to_string() + " A2=" + p.a2.to_string() + " B1=" + p.b1.to_string() +
         " B2=" + p.b2.to_string();
}

class Suite {
 public:
  Suite(const AcceptanceConfig& config, std::ostream& log) : config_(config), log_(log) {}

  std::vector<CriterionOutcome> run() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CorpusEntry> corpus = build_corpus(config_.scale, config_.seed);

    for (const CorpusEntry& entry : corpus) run_instance(entry);
    run_bound_tightness(corpus);
    if (config_.inject_failure) {
      c2.fail("injected failure requested via --inject-failure");
      record_replay(corpus.front(), std::nullopt, 2, "injected failure");
    }

    std::vector<CriterionOutcome> outcomes;
    const auto emit = [&](int id, const std::string& title, const Tracker& t, const std::string& extra) {
      CriterionOutcome o;
      o.id = id;
      o.title = title;
      o.passed = t.ok();
      o.detail = t.ok() ? extra : t.failures.front();
      outcomes.push_back(o);
      log_ << (o.passed ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " ("
           << o.detail << ")\n";
    };

    emit(1, "solver distance equals brute-force distance on all compatible pairs", c1,
         std::to_string(instances_) + " instances, " + std::to_string(c1.checked) + " pairs of pairs");
    emit(2, "the +1 bound is attained on the four-vertex graphic matroid", c2,
         std::to_string(c2.checked) + " extremal pairs matched");
    emit(3, "maximal monotone length equals brute-force longest", c3,
         std::to_string(c3.checked) + " pairs of pairs");
    emit(4, "solving (A,B) to (B,A) yields sequential exchange orderings", c4,
         std::to_string(c4.checked) + " basis pairs");
    emit(5, "brute-force distance is finite exactly on compatible pairs", c5,
         std::to_string(c5.checked) + " compatibility classes");
    emit(6, "ground sets partitionable into two bases are equitable", c6,
         std::to_string(c6.checked) + " partitionable instances");
    emit(7, "monotone length meets the class lower bounds", c7,
         std::to_string(c7.checked) + " pair checks, " + std::to_string(bo_instances_) +
             " base-orderable instances");
    emit(8, "representation layer matches the independence oracle", c8,
         std::to_string(c8.checked) + " instances, exhaustive subsets");
    emit(9, "blocked-path certificates satisfy every structural invariant", c9,
         std::to_string(c9.checked) + " certificates");

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    const bool good = all_passed(outcomes);
    log_ << "RESULT: " << (good ? "all criteria passed" : "FAILURES present") << " at scale "
         << scale_name(config_.scale) << " in " << elapsed.count() << " ms\n";
    if (!good) log_ << "first failing case written to " << config_.failure_path << "\n";
    return outcomes;
  }

 private:
  void record_replay(const CorpusEntry& entry, std::optional<BasisPairInstance> pair, int criterion,
                     const std::string& note) {
    if (replay_written_) return;
    replay_written_ = true;
    InstanceFile file;
    file.name = entry.name;
    file.comment = "selftest failure replay: criterion " + std::to_string(criterion) + "; " + note;
    file.rep = entry.rep;
    if (pair.has_value()) file.pairs.push_back(*pair);
    try {
      save_text(config_.failure_path, serialize_instance(file));
    } catch (const InputError&) {
      // Replay persistence must not mask the original failure.
    }
  }

  void check_pair(const CorpusEntry& entry, SolveContext& ctx, const MatroidOracle& oracle,
                  const PairDistanceMap& dmap, const BasisPairInstance& p, bool paving_instance,
                  bool bo_instance) {
    const int r = entry.rep.rank;
    const int common = (p.a1 & p.b1).size();
    const int lower = r - common;

    SolveResult res;
    try {
      res = ctx.solve(p);
    } catch (const std::exception& e) {
      c1.fail(entry.name + ": solver raised \"" + e.what() + "\" on " + pair_to_string(p));
      record_replay(entry, p, 1, e.what());
      return;
    }

    ++c1.checked;
    const auto it = dmap.find(PairGraphNode{p.b1, p.b2});
    if (it == dmap.end()) {
      c1.fail(entry.name + ": compatible pair unreachable by brute force " + pair_to_string(p));
      record_replay(entry, p, 1, "unreachable");
      return;
    }
    if (res.distance != it->second || res.distance > std::min(r, lower + 1) ||
        !verify_sequence(oracle, p, res.sequence)) {
      c1.fail(entry.name + ": distance " + std::to_string(res.distance) + " vs brute force " +
              std::to_string(it->second) + " on " + pair_to_string(p));
      record_replay(entry, p, 1, "distance mismatch");
    }

    ++c3.checked;
    const int bf_longest = bf_longest_monotone(oracle, p);
    if (res.monotone_length != bf_longest) {
      c3.fail(entry.name + ": monotone length " + std::to_string(res.monotone_length) +
              " vs brute force " + std::to_string(bf_longest) + " on " + pair_to_string(p));
      record_replay(entry, p, 3, "monotone mismatch");
    }

    ++c7.checked;
    if (res.monotone_length < r - 3 * common) {
      c7.fail(entry.name + ": split bound violated on " + pair_to_string(p));
      record_replay(entry, p, 7, "split bound");
    }
    if (bo_instance && res.monotone_length < r - 2 * common) {
      c7.fail(entry.name + ": base-orderable bound violated on " + pair_to_string(p));
      record_replay(entry, p, 7, "base-orderable bound");
    }
    if (paving_instance && res.monotone_length < r - common - 2) {
      c7.fail(entry.name + ": paving bound violated on " + pair_to_string(p));
      record_replay(entry, p, 7, "paving bound");
    }

    if (res.certificate.has_value()) {
      ++c9.checked;
      const BlockingCertificate& cert = *res.certificate;
      const int tail = res.distance - res.monotone_length;
      const bool distinct = cert.hyperedges[0] != cert.hyperedges[1] &&
                            cert.hyperedges[0] != cert.hyperedges[2] &&
                            cert.hyperedges[0] != cert.hyperedges[3] &&
                            cert.hyperedges[1] != cert.hyperedges[2] &&
                            cert.hyperedges[1] != cert.hyperedges[3] &&
                            cert.hyperedges[2] != cert.hyperedges[3];
      const int half = cert.d / 2;
      const SplitRepresentation& norm = ctx.normalized();
      const auto in_edge = [&](int slot) {
        return norm.constraints[static_cast<std::size_t>(cert.hyperedges[static_cast<std::size_t>(slot)])]
            .elements.contains(cert.pivot);
      };
      // The pivot must match its case pattern: inside the first hyperedge
      // only, or inside the first and third but not the second. (The third
      // case pattern lies in an even number of hyperedges on instances like
      // the four-vertex graphic matroid, so oddness alone is not the test.)
      const bool pattern_ok = cert.pivot_case == PivotCase::z1
                                  ? (in_edge(0) && !in_edge(1) && !in_edge(2) && !in_edge(3))
                                  : (in_edge(0) && in_edge(2) && !in_edge(1));
      const bool pivot_in_place = (cert.a1_prime & cert.b1_target).contains(cert.pivot);
      if (!distinct || cert.d <= 0 || cert.d % 2 != 0 || tail != cert.d + 1 ||
          cert.class_e.size() != half || cert.class_f.size() != half ||
          cert.class_g.size() != half || cert.class_h.size() != half ||
          cert.d > 2 * common || !pattern_ok || !pivot_in_place) {
        c9.fail(entry.name + ": certificate invariants broken on " + pair_to_string(p));
        record_replay(entry, p, 9, "certificate invariants");
      }
    }
  }

  void run_instance(const CorpusEntry& entry) {
    ++instances_;
    const MatroidOracle oracle = rep_oracle(entry.rep);
    SolveContext ctx(entry.rep);
    const int r = entry.rep.rank;

    bool paving_instance = !ctx.normalized().constraints.empty();
    for (const HyperedgeConstraint& c : ctx.normalized().constraints) {
      if (c.bound != r - 1) paving_instance = false;
    }

    const std::vector<ElementSet> bases = enumerate_bases(oracle);
    bool bo_instance = true;
    for (std::size_t i = 0; i < bases.size() && bo_instance; ++i) {
      for (std::size_t j = i; j < bases.size() && bo_instance; ++j) {
        if (!base_orderable_pair(oracle, bases[i], bases[j]).has_value()) bo_instance = false;
      }
    }
    if (bo_instance) ++bo_instances_;

    // All compatible ordered pairs of basis pairs, grouped by class.
    const std::vector<PairClass> classes = enumerate_pair_classes(entry.rep);
    for (const PairClass& cls : classes) {
      for (std::size_t src = 0; src < cls.members.size(); ++src) {
        const BasisPairInstance& s = cls.members[src];
        const PairDistanceMap dmap = bf_pair_distances(oracle, s.a1, s.a2);
        if (src == 0) {
          ++c5.checked;
          bool class_ok = dmap.size() == cls.members.size();
          for (const auto& [node, dist] : dmap) {
            if ((node.first | node.second) != cls.union_set ||
                (node.first & node.second) != cls.inter_set) {
              class_ok = false;
            }
          }
          for (const BasisPairInstance& t : cls.members) {
            if (dmap.find(PairGraphNode{t.a1, t.a2}) == dmap.end()) class_ok = false;
          }
          if (!class_ok) {
            c5.fail(entry.name + ": compatibility class is not a single exchange component");
            record_replay(entry, s, 5, "class connectivity");
          }
        }
        for (const BasisPairInstance& t : cls.members) {
          check_pair(entry, ctx, oracle, dmap, BasisPairInstance{s.a1, s.a2, t.a1, t.a2},
                     paving_instance, bo_instance);
        }
      }
    }

    // Sequential exchange orderings via the solver, for every basis pair.
    for (const ElementSet& a : bases) {
      for (const ElementSet& b : bases) {
        ++c4.checked;
        const BasisPairInstance p{a, b, b, a};
        SolveResult res;
        try {
          res = ctx.solve(p);
        } catch (const std::exception& e) {
          c4.fail(entry.name + ": solver raised \"" + e.what() + "\" on (A,B)->(B,A)");
          record_replay(entry, p, 4, e.what());
          continue;
        }
        if (res.distance != r - (a & b).size()) {
          c4.fail(entry.name + ": (A,B)->(B,A) distance above the surplus size");
          record_replay(entry, p, 4, "swap distance");
          continue;
        }
        CyclicOrdering ord;
        for (const ExchangeStep& step : res.sequence) {
          ord.a_order.push_back(step.x);
          ord.b_order.push_back(step.y);
        }
        for (int e : a & b) {
          ord.a_order.push_back(e);
          ord.b_order.push_back(e);
        }
        if (!gabow_ordering_valid(oracle, a, b, ord)) {
          c4.fail(entry.name + ": solver steps do not form a valid ordering");
          record_replay(entry, p, 4, "ordering invalid");
        }
        if (!gabow_ordering(oracle, a, b).has_value()) {
          c4.fail(entry.name + ": backtracking found no ordering");
          record_replay(entry, p, 4, "ordering search");
        }
      }
    }

    // Equitability.
    const EquitableResult eq = equitable_check(oracle);
    if (eq.status != EquitableStatus::not_partitionable) {
      ++c6.checked;
      if (eq.status == EquitableStatus::counterexample) {
        c6.fail(entry.name + ": equitability fails for " + eq.violating_set.to_string());
        record_replay(entry, std::nullopt, 6, "equitability");
      }
    }

    run_representation_layer(entry, oracle);
  }

  void run_representation_layer(const CorpusEntry& entry, const MatroidOracle& oracle) {
    ++c8.checked;
    const SplitRepresentation& rep = entry.rep;
    const ElementSet members = rep.ground.members;
    const int n = members.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    const SplitRepresentation norm = normalize_nonredundant(rep);

    std::vector<ElementSet> small_independent;  // |T| <= 2
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const ElementSet x = ElementSet::from_bits(mask);
      if (!x.subset_of(members)) continue;
      if (rep_rank(rep, x) != oracle_rank(oracle, x)) {
        c8.fail(entry.name + ": rank formula disagrees with the oracle on " + x.to_string());
        record_replay(entry, std::nullopt, 8, "rank formula");
      }
      if (rep_is_independent(rep, x) != rep_is_independent(norm, x)) {
        c8.fail(entry.name + ": normalization changed the independent sets at " + x.to_string());
        record_replay(entry, std::nullopt, 8, "normalization");
      }
      if (x.size() <= 2 && rep_is_independent(rep, x)) small_independent.push_back(x);
      if (x.size() == rep.rank) {
        const TightnessReport tight = tight_hyperedges(norm, x);
        if (!tight.tight_indices.empty() && !rep_is_independent(rep, x)) {
          c8.fail(entry.name + ": tight size-rank set is not a basis: " + x.to_string());
          record_replay(entry, std::nullopt, 8, "tightness basis");
        }
        for (std::size_t a = 0; a < tight.tight_indices.size(); ++a) {
          for (std::size_t b = a + 1; b < tight.tight_indices.size(); ++b) {
            const ElementSet hi = norm.constraints[static_cast<std::size_t>(tight.tight_indices[a])].elements;
            const ElementSet hj = norm.constraints[static_cast<std::size_t>(tight.tight_indices[b])].elements;
            if (!(hi & hj).subset_of(x) || !x.subset_of(hi | hj)) {
              c8.fail(entry.name + ": doubly tight set is not sandwiched: " + x.to_string());
              record_replay(entry, std::nullopt, 8, "tightness sandwich");
            }
          }
        }
      }
    }

    for (const ElementSet& t : small_independent) {
      const SplitRepresentation rc = contract_representation(rep, t);
      const MatroidOracle oc = contract_oracle(oracle, t);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        const ElementSet x = ElementSet::from_bits(mask);
        if (!x.subset_of(members - t)) continue;
        if (rep_is_independent(rc, x) != oc.is_independent(x)) {
          c8.fail(entry.name + ": contracted representation disagrees with the contracted oracle");
          record_replay(entry, std::nullopt, 8, "contraction");
          return;
        }
      }
    }
  }

  void run_bound_tightness(const std::vector<CorpusEntry>& corpus) {
    // On the four-vertex graphic matroid some compatible pair needs one more
    // exchange than the plain lower bound; the solver must reproduce it.
    const CorpusEntry* k4_entry = nullptr;
    for (const CorpusEntry& entry : corpus) {
      if (entry.family == Family::k4) k4_entry = &entry;
    }
    if (k4_entry == nullptr) {
      c2.fail("corpus has no k4 entry");
      return;
    }
    const MatroidOracle oracle = rep_oracle(k4_entry->rep);
    SolveContext ctx(k4_entry->rep);
    const int r = k4_entry->rep.rank;
    bool found = false;
    for (const PairClass& cls : enumerate_pair_classes(k4_entry->rep)) {
      for (const BasisPairInstance& s : cls.members) {
        const PairDistanceMap dmap = bf_pair_distances(oracle, s.a1, s.a2);
        for (const BasisPairInstance& t : cls.members) {
          const BasisPairInstance p{s.a1, s.a2, t.a1, t.a2};
          const int lower = r - (p.a1 & p.b1).size();
          const auto it = dmap.find(PairGraphNode{t.a1, t.a2});
          if (it == dmap.end() || it->second != lower + 1) continue;
          found = true;
          ++c2.checked;
          const SolveResult res = ctx.solve(p);
          if (res.distance != lower + 1 || !res.certificate.has_value()) {
            c2.fail("solver missed the extremal distance on " + pair_to_string(p));
            record_replay(*k4_entry, p, 2, "extremal pair");
            return;
          }
        }
      }
    }
    if (!found) {
      c2.fail("no compatible pair at distance lower_bound + 1 exists on k4");
      record_replay(*k4_entry, std::nullopt, 2, "no extremal pair");
    }
  }

  const AcceptanceConfig& config_;
  std::ostream& log_;
  bool replay_written_ = false;
  int instances_ = 0;
  int bo_instances_ = 0;
  Tracker c1, c2, c3, c4, c5, c6, c7, c8, c9;
};

}  // namespace

std::vector<CriterionOutcome> run_acceptance(const AcceptanceConfig& config, std::ostream& log) {
  Suite suite(config, log);
  return suite.run();
}

bool all_passed(const std::vector<CriterionOutcome>& outcomes) {
  for (const CriterionOutcome& o : outcomes) {
    if (!o.passed) return false;
  }
  return true;
}

}  // namespace bex::cli
