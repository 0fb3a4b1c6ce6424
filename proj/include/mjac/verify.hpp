#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mjac/io.hpp"

namespace mjac {

struct CheckResult {
  std::string suite;
  std::string check;
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<unsigned> primes{2, 3, 5, 7};
  unsigned workers = 1;
  unsigned seed = 20240917;
};

/// matroid-core, arith-jacobian, config-poly, fp-count, density-stats, bounds.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all", over the built-in corpus.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options = {});

/// {"passed": k, "failed": k, "failures": [...]} plus a per-suite tally.
Json results_to_json(const std::vector<CheckResult>& results);

}  // namespace mjac
