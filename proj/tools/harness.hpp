#pragma once

// Verification suites behind the `capelli` command line tool.

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "capelli/combinatorics.hpp"
#include "capelli/outcome.hpp"

namespace capelli::harness {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct CheckReport {
  std::string check_name;
  std::map<std::string, std::string> params;
  Status status = Status::pass;
  std::optional<std::string> witness;
  double wall_time_ms = 0;
};

nlohmann::json to_json(const CheckReport& r);

struct Check {
  std::string name;
  std::map<std::string, std::string> params;
  std::function<Outcome()> run;
  /// Heavy cases, skipped once the budget is spent.
  bool optional = false;
};

struct SuiteOptions {
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<Partition> mu;
  std::optional<Partition> lambda;
  std::optional<StandardTableau> tableau;
  std::optional<StandardTableau> tableau2;
  double budget_seconds = 600;
};

const std::vector<std::string>& suite_names();

/// Expands a suite into independent checks. Throws std::invalid_argument for
/// parameter combinations the suite cannot run.
std::vector<Check> plan_suite(const std::string& suite, const SuiteOptions& options);

struct RunSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

/// Runs checks on `jobs` worker threads and writes one JSON line per check.
/// With `sorted`, lines are buffered and written in plan order.
RunSummary run_checks(const std::vector<Check>& checks, int jobs, bool sorted, double budget_seconds,
                      std::ostream& out);

/// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capelli::harness
