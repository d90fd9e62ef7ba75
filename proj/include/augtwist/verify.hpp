#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace augtwist {

struct CheckResult {
  std::string name;       ///< module.property
  bool passed = false;
  double worst = 0.0;     ///< largest observed error, or the observed count
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20241015;
  int random_samples = 1000;
  int u1_samples = 50;
  double step = 0.02;
};

/// Every stated invariant of the library, checked numerically.
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace augtwist
