#include "bex/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "CLI11.hpp"

#include "bex/brute_force.hpp"
#include "bex/cli/harness.hpp"
#include "bex/cli/instance_io.hpp"
#include "bex/generators.hpp"
#include "bex/solver.hpp"

namespace bex::cli {

namespace {

std::int64_t micros_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

void emit_report(const Json& report, const std::string& output_path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (output_path.empty()) {
    out << text;
  } else {
    save_text(output_path, text);
  }
}

void require_pairs(const InstanceFile& inst) {
  if (inst.pairs.empty()) {
    throw InputError("instance \"" + inst.name + "\" carries no basis pairs");
  }
}

void validate_or_throw(const InstanceFile& inst, std::ostream& err) {
  const std::vector<Violation> violations = validate_representation(inst.rep);
  if (violations.empty()) return;
  for (const Violation& v : violations) err << "violation: " << v.message << "\n";
  throw InputError("representation of \"" + inst.name + "\" is invalid (" +
                   std::to_string(violations.size()) + " violations)");
}

int cmd_gen(const GeneratorConfig& config, const std::string& name, int pair_count,
            const std::string& output_path, std::ostream& out) {
  InstanceFile file;
  file.rep = generate(config);
  file.name = name.empty()
                  ? family_name(config.family) + "-n" + std::to_string(file.rep.ground.universe) +
                        "-r" + std::to_string(file.rep.rank) + "-s" + std::to_string(config.seed)
                  : name;
  file.comment = "generator=" + family_name(config.family) +
                 " n=" + std::to_string(file.rep.ground.universe) +
                 " r=" + std::to_string(file.rep.rank) + " seed=" + std::to_string(config.seed) +
                 " density=" + std::to_string(config.density) + " rng=" + kRngAlgorithm;
  if (pair_count > 0) {
    file.pairs = gen_compatible_pairs(file.rep, config.seed ^ 0x5bd1e995u, pair_count);
  }
  const std::string text = serialize_instance(file);
  if (output_path.empty()) {
    out << text;
  } else {
    save_text(output_path, text);
  }
  return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& output_path, bool cross_check,
              std::int64_t cap_nodes, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = load_instance(instance_path);
  validate_or_throw(inst, err);
  require_pairs(inst);
  SolveContext ctx(inst.rep);
  const MatroidOracle oracle = rep_oracle(inst.rep);

  Json report;
  report["instance"] = inst.name;
  report["command"] = "solve";
  Json results = Json::array();
  int max_distance = 0;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const SolveResult res = ctx.solve(inst.pairs[i]);
    Json record = solve_result_to_json(res);
    record["pair_index"] = static_cast<int>(i);
    if (cross_check) {
      const std::optional<int> bf = bf_exchange_distance(oracle, inst.pairs[i], cap_nodes);
      Json check;
      check["bf_distance"] = bf.has_value() ? Json(*bf) : Json(nullptr);
      check["matches"] = bf.has_value() && *bf == res.distance;
      record["cross_check"] = std::move(check);
      if (!bf.has_value() || *bf != res.distance) {
        throw InternalError("brute-force cross-check disagrees with the solver");
      }
    } else {
      record["cross_check"] = nullptr;
    }
    record["timing_us"] = micros_since(start);
    results.push_back(std::move(record));
    max_distance = std::max(max_distance, res.distance);
  }
  report["results"] = std::move(results);
  Json summary;
  summary["pairs"] = static_cast<int>(inst.pairs.size());
  summary["max_distance"] = max_distance;
  report["summary"] = std::move(summary);
  emit_report(report, output_path, out);
  return 0;
}

int cmd_distance_bf(const std::string& instance_path, const std::string& output_path,
                    std::int64_t cap_nodes, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = load_instance(instance_path);
  validate_or_throw(inst, err);
  require_pairs(inst);
  const MatroidOracle oracle = rep_oracle(inst.rep);

  Json report;
  report["instance"] = inst.name;
  report["command"] = "distance-bf";
  Json results = Json::array();
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const BasisPairInstance& p = inst.pairs[i];
    const std::optional<int> bf = bf_exchange_distance(oracle, p, cap_nodes);
    Json record;
    record["pair_index"] = static_cast<int>(i);
    record["compatible"] = compatible(p);
    record["lower_bound"] = p.a1.size() - (p.a1 & p.b1).size();
    record["distance"] = bf.has_value() ? Json(*bf) : Json(nullptr);
    record["timing_us"] = micros_since(start);
    results.push_back(std::move(record));
  }
  report["results"] = std::move(results);
  emit_report(report, output_path, out);
  return 0;
}

int cmd_longest_monotone(const std::string& instance_path, const std::string& output_path,
                         int cap_rank, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = load_instance(instance_path);
  validate_or_throw(inst, err);
  require_pairs(inst);
  SolveContext ctx(inst.rep);
  const MatroidOracle oracle = rep_oracle(inst.rep);

  Json report;
  report["instance"] = inst.name;
  report["command"] = "longest-monotone";
  Json results = Json::array();
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const BasisPairInstance& p = inst.pairs[i];
    const int bf = bf_longest_monotone(oracle, p, cap_rank);
    const ExchangeSequence mono = ctx.longest_monotone(p);
    Json record;
    record["pair_index"] = static_cast<int>(i);
    record["bf_length"] = bf;
    record["solver_length"] = static_cast<int>(mono.size());
    record["sequence"] = sequence_to_json(mono);
    record["timing_us"] = micros_since(start);
    results.push_back(std::move(record));
    if (bf != static_cast<int>(mono.size())) {
      report["results"] = std::move(results);
      emit_report(report, output_path, out);
      throw InternalError("monotone length disagrees with brute force on pair " +
                          std::to_string(i));
    }
  }
  report["results"] = std::move(results);
  emit_report(report, output_path, out);
  return 0;
}

int cmd_check_gabow(const std::string& instance_path, const std::string& output_path, int cap_rank,
                    int cap_ground, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = load_instance(instance_path);
  validate_or_throw(inst, err);
  const MatroidOracle oracle = rep_oracle(inst.rep);
  if (inst.rep.rank > cap_rank) throw CapacityError("rank exceeds --cap-rank");
  const std::vector<ElementSet> bases = enumerate_bases(oracle, cap_ground);

  Json report;
  report["instance"] = inst.name;
  report["command"] = "check-gabow";
  long long checked = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i; j < bases.size(); ++j) {
      ++checked;
      const std::optional<CyclicOrdering> ord = gabow_ordering(oracle, bases[i], bases[j], cap_rank);
      if (!ord.has_value()) {
        InstanceFile witness;
        witness.name = inst.name + "-gabow-counterexample";
        witness.comment = "no sequential exchange ordering for the recorded pair";
        witness.rep = inst.rep;
        witness.pairs.push_back({bases[i], bases[j], bases[j], bases[i]});
        save_text(output_path.empty() ? "gabow_counterexample.json" : output_path,
                  serialize_instance(witness));
        throw InternalError("ordering missing for a basis pair; witness written");
      }
    }
  }
  report["pairs_checked"] = checked;
  report["all_ordered"] = true;
  emit_report(report, output_path, out);
  return 0;
}

int cmd_check_white2(const std::string& instance_path, const std::string& output_path,
                     std::int64_t cap_nodes, int cap_ground, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = load_instance(instance_path);
  validate_or_throw(inst, err);
  const MatroidOracle oracle = rep_oracle(inst.rep);

  Json report;
  report["instance"] = inst.name;
  report["command"] = "check-white2";
  long long classes_checked = 0;
  for (const PairClass& cls : enumerate_pair_classes(inst.rep, cap_ground)) {
    ++classes_checked;
    const BasisPairInstance& s = cls.members.front();
    const PairDistanceMap dmap = bf_pair_distances(oracle, s.a1, s.a2, cap_nodes);
    bool ok = dmap.size() == cls.members.size();
    for (const BasisPairInstance& t : cls.members) {
      if (dmap.find(PairGraphNode{t.a1, t.a2}) == dmap.end()) ok = false;
    }
    if (!ok) {
      InstanceFile witness;
      witness.name = inst.name + "-white2-counterexample";
      witness.comment = "compatible pair with infinite exchange distance";
      witness.rep = inst.rep;
      witness.pairs.push_back(s);
      save_text(output_path.empty() ? "white2_counterexample.json" : output_path,
                serialize_instance(witness));
      throw InternalError("a compatibility class splits into several components; witness written");
    }
  }
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const BasisPairInstance& p = inst.pairs[i];
    if (white2_equivalent(oracle, p, cap_nodes) != compatible(p)) {
      throw InternalError("equivalence does not match compatibility on pair " + std::to_string(i));
    }
  }
  report["classes_checked"] = classes_checked;
  report["pairs_checked"] = static_cast<int>(inst.pairs.size());
  report["equivalence_matches_compatibility"] = true;
  emit_report(report, output_path, out);
  return 0;
}

int cmd_check_equitable(const std::string& instance_path, const std::string& output_path,
                        int cap_exhaustive, int samples, std::uint64_t seed, std::ostream& out,
                        std::ostream& err) {
  const InstanceFile inst = load_instance(instance_path);
  validate_or_throw(inst, err);
  const MatroidOracle oracle = rep_oracle(inst.rep);
  const int n = inst.rep.ground.members.size();

  Json report;
  report["instance"] = inst.name;
  report["command"] = "check-equitable";
  if (n <= cap_exhaustive) {
    report["mode"] = "exhaustive";
    const EquitableResult res = equitable_check(oracle, cap_exhaustive);
    switch (res.status) {
      case EquitableStatus::not_partitionable:
        report["status"] = "not-partitionable";
        report["skipped"] = true;
        break;
      case EquitableStatus::equitable:
        report["status"] = "equitable";
        report["subsets_checked"] = static_cast<long long>(res.witnesses.size());
        break;
      case EquitableStatus::counterexample: {
        report["status"] = "counterexample";
        report["violating_set"] = element_set_to_json(res.violating_set);
        emit_report(report, output_path, out);
        throw InternalError("equitability counterexample found");
      }
    }
    emit_report(report, output_path, out);
    return 0;
  }

  // Sampled mode for larger ground sets: evidence only, never verification.
  report["mode"] = "sampled";
  const ElementSet members = inst.rep.ground.members;
  if (2 * inst.rep.rank != n) {
    report["status"] = "not-partitionable";
    report["skipped"] = true;
    emit_report(report, output_path, out);
    return 0;
  }
  SplitMix64 rng(seed);
  std::vector<ElementSet> splittable;
  for (int tries = 0; tries < 50 * samples && static_cast<int>(splittable.size()) < 64; ++tries) {
    const ElementSet b = random_basis(inst.rep, rng);
    if (rep_is_independent(inst.rep, members - b) && (members - b).size() == inst.rep.rank) {
      if (std::find(splittable.begin(), splittable.end(), b) == splittable.end()) {
        splittable.push_back(b);
      }
    }
  }
  if (splittable.empty()) {
    report["status"] = "not-partitionable";
    report["skipped"] = true;
    emit_report(report, output_path, out);
    return 0;
  }
  for (int s = 0; s < samples; ++s) {
    ElementSet x;
    for (int e : members) {
      if (rng.below(2) == 1) x = x.with(e);
    }
    const int lo = x.size() / 2;
    const int hi = (x.size() + 1) / 2;
    bool found = false;
    for (const ElementSet& b : splittable) {
      const int c = (b & x).size();
      if (c >= lo && c <= hi) {
        found = true;
        break;
      }
    }
    if (!found) {
      // Sampling is incomplete evidence either way; report, do not conclude.
      report["status"] = "inconclusive";
      report["unbalanced_sample"] = element_set_to_json(x);
      emit_report(report, output_path, out);
      return 0;
    }
  }
  report["status"] = "no-counterexample-found";
  report["samples"] = samples;
  emit_report(report, output_path, out);
  return 0;
}

int cmd_selftest(Scale scale, std::uint64_t seed, const std::string& output_path,
                 bool inject_failure, std::ostream& out) {
  AcceptanceConfig config;
  config.scale = scale;
  config.seed = seed;
  if (!output_path.empty()) config.failure_path = output_path;
  config.inject_failure = inject_failure;
  const std::vector<CriterionOutcome> outcomes = run_acceptance(config, out);
  return all_passed(outcomes) ? 0 : 5;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bex: exact symmetric basis-exchange distances in split matroids"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded instance file");
  std::string gen_family = "uniform";
  GeneratorConfig config;
  std::string gen_name, gen_output;
  int gen_pairs = 4;
  gen->add_option("--family", gen_family, "uniform|sparse-paving|paving|elementary-split|k4")
      ->required();
  gen->add_option("--n", config.n, "ground set size");
  gen->add_option("--r", config.r, "rank");
  gen->add_option("--seed", config.seed, "generator seed")->default_val(1);
  gen->add_option("--density", config.density, "target number of hyperedges")->default_val(0);
  gen->add_option("--pairs", gen_pairs, "number of sampled compatible pairs")->default_val(4);
  gen->add_option("--name", gen_name, "instance name");
  gen->add_option("--output", gen_output, "output path (stdout when omitted)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact exchange distances for the instance pairs");
  std::string solve_instance, solve_output;
  bool solve_cross = false;
  std::int64_t solve_cap_nodes = 1'000'000;
  solve_cmd->add_option("--instance", solve_instance, "instance file")->required();
  solve_cmd->add_option("--output", solve_output, "report path (stdout when omitted)");
  solve_cmd->add_flag("--cross-check", solve_cross, "also run the brute-force distance");
  solve_cmd->add_option("--cap-nodes", solve_cap_nodes, "node cap for the cross-check");

  // distance-bf
  auto* bf_cmd = app.add_subcommand("distance-bf", "brute-force exchange distances");
  std::string bf_instance, bf_output;
  std::int64_t bf_cap_nodes = 1'000'000;
  bf_cmd->add_option("--instance", bf_instance, "instance file")->required();
  bf_cmd->add_option("--output", bf_output, "report path (stdout when omitted)");
  bf_cmd->add_option("--cap-nodes", bf_cap_nodes, "search node cap");

  // longest-monotone
  auto* mono_cmd = app.add_subcommand("longest-monotone",
                                      "longest strictly monotone sequences, solver vs brute force");
  std::string mono_instance, mono_output;
  int mono_cap_rank = 6;
  mono_cmd->add_option("--instance", mono_instance, "instance file")->required();
  mono_cmd->add_option("--output", mono_output, "report path (stdout when omitted)");
  mono_cmd->add_option("--cap-rank", mono_cap_rank, "rank cap for the brute-force search");

  // check-gabow
  auto* gabow_cmd = app.add_subcommand("check-gabow", "sequential exchange orderings for all basis pairs");
  std::string gabow_instance, gabow_output;
  int gabow_cap_rank = 6, gabow_cap_ground = 10;
  gabow_cmd->add_option("--instance", gabow_instance, "instance file")->required();
  gabow_cmd->add_option("--output", gabow_output, "report path (stdout when omitted)");
  gabow_cmd->add_option("--cap-rank", gabow_cap_rank, "rank cap for the ordering search");
  gabow_cmd->add_option("--cap-ground", gabow_cap_ground, "ground-size cap for basis enumeration");

  // check-white2
  auto* white_cmd = app.add_subcommand("check-white2",
                                       "finite exchange distance must coincide with compatibility");
  std::string white_instance, white_output;
  std::int64_t white_cap_nodes = 1'000'000;
  int white_cap_ground = 8;
  white_cmd->add_option("--instance", white_instance, "instance file")->required();
  white_cmd->add_option("--output", white_output, "report path (stdout when omitted)");
  white_cmd->add_option("--cap-nodes", white_cap_nodes, "search node cap");
  white_cmd->add_option("--cap-ground", white_cap_ground, "ground-size cap for enumeration");

  // check-equitable
  auto* eq_cmd = app.add_subcommand("check-equitable", "balanced bases for every subset");
  std::string eq_instance, eq_output;
  int eq_cap = 12, eq_samples = 2000;
  std::uint64_t eq_seed = 1;
  eq_cmd->add_option("--instance", eq_instance, "instance file")->required();
  eq_cmd->add_option("--output", eq_output, "report path (stdout when omitted)");
  eq_cmd->add_option("--cap-ground", eq_cap, "exhaustive mode up to this ground size");
  eq_cmd->add_option("--samples", eq_samples, "samples in sampled mode");
  eq_cmd->add_option("--seed", eq_seed, "sampling seed");

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  std::string self_scale = "small", self_output;
  std::uint64_t self_seed = 20260801;
  bool self_inject = false;
  self_cmd->add_option("--scale", self_scale, "smoke|small|full")->default_val("small");
  self_cmd->add_option("--seed", self_seed, "corpus seed");
  self_cmd->add_option("--output", self_output, "failure replay path");
  self_cmd->add_flag("--inject-failure", self_inject, "force a failure (harness test hook)")
      ->group("");  // hidden

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) {
      config.family = family_from_name(gen_family);
      if (config.family == Family::k4) {
        config.n = 6;
        config.r = 3;
      }
      return cmd_gen(config, gen_name, gen_pairs, gen_output, out);
    }
    if (solve_cmd->parsed()) {
      return cmd_solve(solve_instance, solve_output, solve_cross, solve_cap_nodes, out, err);
    }
    if (bf_cmd->parsed()) return cmd_distance_bf(bf_instance, bf_output, bf_cap_nodes, out, err);
    if (mono_cmd->parsed()) {
      return cmd_longest_monotone(mono_instance, mono_output, mono_cap_rank, out, err);
    }
    if (gabow_cmd->parsed()) {
      return cmd_check_gabow(gabow_instance, gabow_output, gabow_cap_rank, gabow_cap_ground, out, err);
    }
    if (white_cmd->parsed()) {
      return cmd_check_white2(white_instance, white_output, white_cap_nodes, white_cap_ground, out, err);
    }
    if (eq_cmd->parsed()) {
      return cmd_check_equitable(eq_instance, eq_output, eq_cap, eq_samples, eq_seed, out, err);
    }
    if (self_cmd->parsed()) {
      return cmd_selftest(scale_from_name(self_scale), self_seed, self_output, self_inject, out);
    }
    err << "no subcommand given\n";
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return 4;
  } catch (const InternalError& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bex::cli
