#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace bosonstar::app {

/// Exit codes of the tool.
enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,  ///< the run completed but a check failed
  kUsage = 2,        ///< bad flags or config file
  kModuleError = 3,  ///< a library error; error.json holds the record
};

/// One row of a pass/fail table: `value relation limit` must hold.
struct Check {
  std::string name;
  double value = 0.0;
  std::string relation;  ///< "<", "<=", ">", ">=" or "in"
  double limit = 0.0;
  double limit_hi = 0.0;  ///< upper end when relation is "in" (open interval)
  bool pass = false;
};

Check check_less(std::string name, double value, double limit);
Check check_less_equal(std::string name, double value, double limit);
Check check_greater(std::string name, double value, double limit);
Check check_between(std::string name, double value, double lo, double hi);

void to_json(nlohmann::json& j, const Check& c);

/// Name of the first failing check, or empty.
std::string first_failure(const std::vector<Check>& checks);

/// Toolchain and wall-clock data; the only nondeterministic part of a report.
nlohmann::json make_meta(double elapsed_seconds);

/**
 * Runs cfg.command, writing run_config.json and the command's reports into
 * cfg.out_dir. Progress lines go to `log`. Library errors are caught and
 * recorded in error.json.
 */
int run_pipeline(const RunConfig& cfg, std::ostream& log);

}  // namespace bosonstar::app
