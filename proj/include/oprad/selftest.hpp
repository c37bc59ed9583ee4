// Seeded invariant and oracle-equivalence suites backing the CLI selftest
// command. Each property reports its trial count, failure count and worst
// observed discrepancy; heavyweight properties run on a reduced instance
// count derived from the requested trials.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oprad {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_discrepancy = 0.0;
  std::string note;
};

struct SelfTestReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyResult> properties;
  bool all_passed = false;
};

// trials >= 1 required.
SelfTestReport run_selftest(std::uint64_t seed, int trials);

}  // namespace oprad
