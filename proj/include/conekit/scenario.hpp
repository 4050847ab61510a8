#pragma once

// Scenario files ("schema": "conekit/1") and their JSON/CSV reports.
//
// Seed precedence per task: command-line seed, then CONEKIT_SEED, then the
// task's "seed", then the scenario's "seed", then 0.

#include <cstdint>
#include <optional>
#include <string>

#include "conekit/serialization.hpp"

namespace conekit {

inline constexpr const char* kScenarioSchema = "conekit/1";
inline constexpr const char* kReportSchema = "conekit-report/1";

struct RunOptions {
  std::optional<std::uint64_t> cli_seed;
  std::optional<std::uint64_t> env_seed;
  std::optional<Backend> backend;
  std::optional<double> tol;
};

struct RunOutcome {
  Json report;
  int exit_code = 0;  // 0 all pass, 1 some task failed or errored
};

// Throws Error(kParseError) when the scenario does not match the schema.
RunOutcome run_scenario(const Json& scenario, const RunOptions& opt);
// Reads and parses the file first; unreadable or malformed JSON is a
// ParseError as well.
RunOutcome run_scenario_file(const std::string& path, const RunOptions& opt);

// CONEKIT_SEED from the environment; ParseError if it is not a u64.
std::optional<std::uint64_t> seed_from_env();
std::uint64_t parse_seed(const std::string& text);

// Report without wall_time_ms fields.
Json strip_timing(Json report);
// name,kind,status,metric,value,tolerance,wall_time_ms
std::string report_csv(const Json& report);
// One "PASS|FAIL|ERROR name" line per task and a totals line.
std::string report_summary(const Json& report);

}  // namespace conekit
