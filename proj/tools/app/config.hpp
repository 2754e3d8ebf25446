#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <bosonstar/analysis.hpp>
#include <bosonstar/solver.hpp>

namespace bosonstar::app {

enum class Command { solve, verify, linearize, certify, evolve, selftest };

std::string to_string(Command c);

/// A flag or config-file entry is unknown, malformed or out of range.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  /// The offending key; empty when no single key is to blame.
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Fully resolved settings of one invocation. Defaults match the library.
struct RunConfig {
  Command command = Command::solve;

  std::size_t n = 2048;
  double r_max = 200.0;

  double tol = 1e-8;
  int max_iter = 5000;
  double gamma = 1.5;
  double m = 0.0;
  double mu = 1.0;
  std::string init = "gaussian";  ///< gaussian | lorentzian
  double init_width = 1.0;

  std::optional<FitWindow> far_window;  ///< unset: default_far_field_window
  FitWindow fourier_window = kDefaultFourierWindow;

  int ell_max = 2;
  double kernel_threshold = 1e-2;

  double dt = 0.005;
  int steps = 200;
  int record_every = 20;

  std::uint64_t seed = 20240101;
  std::optional<std::filesystem::path> input;  ///< r,value CSV of a stored profile
  std::filesystem::path out_dir = "bosonstar_out";

  /// Throws UsageError naming the first out-of-range key.
  void validate() const;

  SolverConfig solver_config() const;
};

/// Environment variable consulted for the output directory when neither a
/// flag nor the config file sets one.
inline constexpr const char* kOutDirEnv = "BOSONSTAR_OUT";

/**
 * Resolves flags over config-file values over defaults. `args` excludes the
 * program name. A config file comes from `file` or from `--config`; its
 * unknown keys are errors. The command is required.
 */
RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::filesystem::path>& file = std::nullopt);

/// The echo written to run_config.json; reading it back reproduces the run.
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace bosonstar::app
