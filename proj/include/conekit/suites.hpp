#pragma once

// Named randomized property suites. Each suite draws its instances from a
// seeded generator, so a (suite, trials, seed) triple is reproducible.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conekit {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<std::string> witness;  // first failure
  std::map<std::string, double> metrics;

  bool passed() const { return failures == 0; }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::size_t default_trials;
  std::function<SuiteResult(std::size_t trials, std::uint64_t seed)> run;
};

const std::vector<SuiteInfo>& suite_registry();
// trials = 0 selects the suite default. Throws InvalidArgument for unknown
// names.
SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace conekit
