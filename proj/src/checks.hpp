#pragma once

#include <cstdint>
#include <string>
#include <vector>

// The verification suite: ten numbered checks, each pinning one structural
// result against independently derived constants.  Used by the acceptance
// runner and the command line's verify subcommand.

namespace ramlat {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail; // first failure, empty on success
};

inline constexpr std::uint64_t kDefaultCheckSeed = 20260819;

std::vector<int> check_ids();          // 1..10
std::string check_name(int id);        // InvalidArgument for unknown ids

// Runs one check; never throws, failures land in the result.
CheckResult run_check(int id, std::uint64_t seed = kDefaultCheckSeed);

std::vector<CheckResult> run_all_checks(std::uint64_t seed = kDefaultCheckSeed);

} // namespace ramlat
