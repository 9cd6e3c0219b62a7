#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bex::cli {

// Exit codes: 0 success, 1 invalid input, 2 infeasible pairs, 3 internal
// invariant violation (including conjecture counterexamples on valid split
// input), 4 capacity exceeded, 5 self-test failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bex::cli
