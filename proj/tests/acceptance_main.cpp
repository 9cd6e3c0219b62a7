// Acceptance suite entry point: runs every criterion at the requested scale
// and prints one pass/fail line per criterion. Exit code 0 iff all passed.

#include <cstring>
#include <iostream>
#include <string>

#include "bex/cli/harness.hpp"

int main(int argc, char** argv) {
  bex::cli::AcceptanceConfig config;
  config.scale = bex::cli::Scale::small;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc) {
      config.scale = bex::cli::scale_from_name(argv[++i]);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      config.seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--output") == 0 && i + 1 < argc) {
      config.failure_path = argv[++i];
    } else {
      std::cerr << "usage: bex_acceptance [--scale smoke|small|full] [--seed N] [--output PATH]\n";
      return 2;
    }
  }
  const auto outcomes = bex::cli::run_acceptance(config, std::cout);
  return bex::cli::all_passed(outcomes) ? 0 : 1;
}
