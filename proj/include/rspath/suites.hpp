#pragma once

// Exhaustive and randomised verification suites shared by the CLI `verify`
// subcommand and the acceptance binary.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rspath/rational.hpp"

namespace rspath {

struct SuiteOptions {
  /// Alphabet bound: suites over words run every k' = 1..k (2..k where k' = 1
  /// is meaningless); probability suites use exactly k.
  int k = 3;
  /// Word length or state-space size bound.
  int max_n = 8;
  /// Drift vectors; empty selects defaults for k.
  std::vector<RationalPoint> distributions;
  std::uint64_t seed = 1;
  /// Number of random instances for randomised checks.
  std::size_t samples = 200;
};

struct SuiteResult {
  explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first few failures.
  std::vector<std::string> witnesses;
  bool passed() const { return failures == 0 && cases > 0; }

  void check(bool ok, const std::function<std::string()>& describe);
};

SuiteResult suite_theorem31(const SuiteOptions& options);
SuiteResult suite_greene(const SuiteOptions& options);
SuiteResult suite_lemmas(const SuiteOptions& options);
SuiteResult suite_intertwining(const SuiteOptions& options);
SuiteResult suite_shapechain(const SuiteOptions& options);
SuiteResult suite_theorem11(const SuiteOptions& options);
SuiteResult suite_rowinsert(const SuiteOptions& options);
SuiteResult suite_kernel(const SuiteOptions& options);
SuiteResult suite_continuous(const SuiteOptions& options);

std::vector<std::string> suite_names();
/// Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Default drift vectors used when options.distributions is empty.
std::vector<RationalPoint> default_distributions(int k);

}  // namespace rspath
