#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bex/cli/instance_io.hpp"
#include "bex/generators.hpp"

namespace bex::cli {

enum class Scale { smoke, small, full };

Scale scale_from_name(const std::string& name);
std::string scale_name(Scale scale);

struct AcceptanceConfig {
  Scale scale = Scale::small;
  std::uint64_t seed = 20260801;
  std::string failure_path = "bex_selftest_failure.json";
  bool inject_failure = false;  // force a failure, for testing the harness
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

// Runs the full self-test suite and prints one pass/fail line per criterion.
// On the first failure a replayable witness file is written to
// config.failure_path.
std::vector<CriterionOutcome> run_acceptance(const AcceptanceConfig& config, std::ostream& log);

bool all_passed(const std::vector<CriterionOutcome>& outcomes);

// The seeded instance corpus the suite runs on.
struct CorpusEntry {
  std::string name;
  SplitRepresentation rep;
  Family family = Family::elementary_split;
};
std::vector<CorpusEntry> build_corpus(Scale scale, std::uint64_t seed);

}  // namespace bex::cli
