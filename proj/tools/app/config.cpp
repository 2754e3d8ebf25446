#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>

#include <CLI11.hpp>

namespace bosonstar::app {
namespace {

using nlohmann::json;

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"solve", Command::solve},       {"verify", Command::verify},   {"linearize", Command::linearize},
      {"certify", Command::certify},   {"evolve", Command::evolve},   {"selftest", Command::selftest}};
  return table;
}

Command parse_command(const std::string& key, const std::string& name) {
  const auto it = command_table().find(name);
  if (it == command_table().end()) throw UsageError(key, "unknown command '" + name + "'");
  return it->second;
}

FitWindow window_from(const std::string& key, const std::vector<double>& v) {
  if (v.size() != 2) throw UsageError(key, "expected two numbers lo hi");
  return {v[0], v[1]};
}

void require(bool ok, const char* key, const std::string& what) {
  if (!ok) throw UsageError(key, what);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

// Values as they arrive from the command line; unset means "not given".
struct Flags {
  std::optional<std::string> config;
  std::optional<std::size_t> n;
  std::optional<double> r_max, tol, gamma, m, mu, init_width, kernel_threshold, dt;
  std::optional<int> max_iter, ell_max, steps, record_every;
  std::optional<std::string> init, input, out_dir;
  std::optional<std::uint64_t> seed;
  std::vector<double> far_window, fourier_window;
};

template <typename T>
void take(const json& file, const char* key, T& dst) {
  if (!file.contains(key)) return;
  try {
    dst = file.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(key, std::string("bad value in config file (") + e.what() + ")");
  }
}

void apply_file(const json& file, RunConfig& cfg) {
  static const std::vector<std::string> known{
      "schema_version", "command", "n",          "r_max",          "tol",     "max_iter",
      "gamma",          "m",       "mu",         "init",           "init_width",
      "far_window",     "fourier_window",        "ell_max",        "kernel_threshold",
      "dt",             "steps",   "record_every", "seed",         "input",   "out_dir"};
  if (!file.is_object()) throw UsageError("", "config file: top level must be an object");
  if (file.contains("schema_version") && file.at("schema_version") != 1) {
    throw UsageError("schema_version", "only version 1 is understood");
  }
  for (const auto& [key, _] : file.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw UsageError(key, "unknown key in config file");
    }
  }
  if (file.contains("command")) {
    std::string name;
    take(file, "command", name);
    cfg.command = parse_command("command", name);
  }
  take(file, "n", cfg.n);
  take(file, "r_max", cfg.r_max);
  take(file, "tol", cfg.tol);
  take(file, "max_iter", cfg.max_iter);
  take(file, "gamma", cfg.gamma);
  take(file, "m", cfg.m);
  take(file, "mu", cfg.mu);
  take(file, "init", cfg.init);
  take(file, "init_width", cfg.init_width);
  if (file.contains("far_window") && !file.at("far_window").is_null()) {
    std::vector<double> w;
    take(file, "far_window", w);
    cfg.far_window = window_from("far_window", w);
  }
  if (file.contains("fourier_window")) {
    std::vector<double> w;
    take(file, "fourier_window", w);
    cfg.fourier_window = window_from("fourier_window", w);
  }
  take(file, "ell_max", cfg.ell_max);
  take(file, "kernel_threshold", cfg.kernel_threshold);
  take(file, "dt", cfg.dt);
  take(file, "steps", cfg.steps);
  take(file, "record_every", cfg.record_every);
  take(file, "seed", cfg.seed);
  if (file.contains("input") && !file.at("input").is_null()) {
    std::string p;
    take(file, "input", p);
    cfg.input = p;
  }
  if (file.contains("out_dir")) {
    std::string p;
    take(file, "out_dir", p);
    cfg.out_dir = p;
  }
}

json read_config_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("config", "cannot open " + path.string());
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw UsageError("config", path.string() + ": " + e.what());
  }
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [name, cmd] : command_table()) {
    if (cmd == c) return name;
  }
  return "?";
}

void RunConfig::validate() const {
  require(n >= 8, "n", "must be >= 8");
  require(finite_positive(r_max), "r_max", "must be > 0");
  require(finite_positive(tol), "tol", "must be > 0");
  require(max_iter >= 1, "max_iter", "must be >= 1");
  require(std::isfinite(gamma) && gamma > 1.0, "gamma", "must be > 1");
  require(std::isfinite(m) && m >= 0.0, "m", "must be >= 0");
  require(std::isfinite(mu) && mu > -m, "mu", "must be > -m");
  require(init == "gaussian" || init == "lorentzian", "init", "must be gaussian or lorentzian");
  require(finite_positive(init_width), "init_width", "must be > 0");
  if (far_window) {
    require(far_window->lo > 0.0 && far_window->lo < far_window->hi, "far_window", "needs 0 < lo < hi");
  }
  require(fourier_window.lo >= 0.0 && fourier_window.lo < fourier_window.hi, "fourier_window",
          "needs 0 <= lo < hi");
  require(ell_max >= 0 && ell_max <= 8, "ell_max", "must be in [0, 8]");
  require(finite_positive(kernel_threshold), "kernel_threshold", "must be > 0");
  require(finite_positive(dt), "dt", "must be > 0");
  require(steps >= 0, "steps", "must be >= 0");
  require(record_every >= 0, "record_every", "must be >= 0");
  require(!out_dir.empty(), "out_dir", "must not be empty");
}

SolverConfig RunConfig::solver_config() const {
  SolverConfig s;
  s.grid = RadialGrid(n, r_max);
  if (init == "lorentzian") {
    s.init = init::Lorentzian{};
  } else {
    s.init = init::Gaussian{init_width};
  }
  s.gamma = gamma;
  s.tol_residual = tol;
  s.max_iter = max_iter;
  s.m = m;
  s.mu = mu;
  return s;
}

RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::filesystem::path>& file) {
  CLI::App app{"bosonstar"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Flags f;
  app.add_option("--config", f.config, "JSON config file; flags override its values");
  app.add_option("--n", f.n, "grid nodes");
  app.add_option("--rmax", f.r_max, "box radius");
  app.add_option("--tol", f.tol, "relative residual target");
  app.add_option("--max-iter", f.max_iter, "iteration budget");
  app.add_option("--gamma", f.gamma, "stabilization exponent");
  app.add_option("--m", f.m, "mass parameter");
  app.add_option("--mu", f.mu, "frequency parameter");
  app.add_option("--init", f.init, "gaussian | lorentzian");
  app.add_option("--init-width", f.init_width, "width of the Gaussian guess");
  app.add_option("--far-window", f.far_window, "far-field fit window lo hi")->expected(2);
  app.add_option("--fourier-window", f.fourier_window, "Fourier decay fit window lo hi")->expected(2);
  app.add_option("--ell-max", f.ell_max, "highest angular momentum sector");
  app.add_option("--kernel-threshold", f.kernel_threshold, "eigenvalue cutoff for kernel scans");
  app.add_option("--dt", f.dt, "time step");
  app.add_option("--steps", f.steps, "number of time steps");
  app.add_option("--record-every", f.record_every, "sample interval in steps");
  app.add_option("--seed", f.seed, "seed for randomized suites");
  app.add_option("--input", f.input, "stored r,value profile instead of a fresh solve");
  app.add_option("--out", f.out_dir, "output directory");
  for (const auto& [name, _] : command_table()) app.add_subcommand(name, "run " + name);

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw UsageError("", e.what());
  }

  RunConfig cfg;
  bool have_command = false;
  bool file_out_dir = false;
  std::optional<std::filesystem::path> path = file;
  if (f.config) path = *f.config;
  if (path) {
    const auto j = read_config_file(*path);
    apply_file(j, cfg);
    have_command = j.contains("command");
    file_out_dir = j.contains("out_dir");
  }
  // The environment sits between the built-in default and the file.
  if (const char* env = std::getenv(kOutDirEnv); !file_out_dir && env != nullptr && *env != '\0') {
    cfg.out_dir = env;
  }

  if (const auto subs = app.get_subcommands(); !subs.empty()) {
    cfg.command = parse_command("command", subs.front()->get_name());
    have_command = true;
  }
  if (!have_command) throw UsageError("command", "required (one of solve, verify, linearize, certify, evolve, selftest)");

  if (f.n) cfg.n = *f.n;
  if (f.r_max) cfg.r_max = *f.r_max;
  if (f.tol) cfg.tol = *f.tol;
  if (f.max_iter) cfg.max_iter = *f.max_iter;
  if (f.gamma) cfg.gamma = *f.gamma;
  if (f.m) cfg.m = *f.m;
  if (f.mu) cfg.mu = *f.mu;
  if (f.init) cfg.init = *f.init;
  if (f.init_width) cfg.init_width = *f.init_width;
  if (!f.far_window.empty()) cfg.far_window = window_from("far_window", f.far_window);
  if (!f.fourier_window.empty()) cfg.fourier_window = window_from("fourier_window", f.fourier_window);
  if (f.ell_max) cfg.ell_max = *f.ell_max;
  if (f.kernel_threshold) cfg.kernel_threshold = *f.kernel_threshold;
  if (f.dt) cfg.dt = *f.dt;
  if (f.steps) cfg.steps = *f.steps;
  if (f.record_every) cfg.record_every = *f.record_every;
  if (f.seed) cfg.seed = *f.seed;
  if (f.input) cfg.input = *f.input;
  if (f.out_dir) cfg.out_dir = *f.out_dir;

  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const RunConfig& cfg) {
  auto window = [](const FitWindow& w) { return json::array({w.lo, w.hi}); };
  return json{{"schema_version", 1},
              {"command", to_string(cfg.command)},
              {"n", cfg.n},
              {"r_max", cfg.r_max},
              {"tol", cfg.tol},
              {"max_iter", cfg.max_iter},
              {"gamma", cfg.gamma},
              {"m", cfg.m},
              {"mu", cfg.mu},
              {"init", cfg.init},
              {"init_width", cfg.init_width},
              {"far_window", cfg.far_window ? window(*cfg.far_window) : json(nullptr)},
              {"fourier_window", window(cfg.fourier_window)},
              {"ell_max", cfg.ell_max},
              {"kernel_threshold", cfg.kernel_threshold},
              {"dt", cfg.dt},
              {"steps", cfg.steps},
              {"record_every", cfg.record_every},
              {"seed", cfg.seed},
              {"input", cfg.input ? json(cfg.input->string()) : json(nullptr)},
              {"out_dir", cfg.out_dir.string()}};
}

}  // namespace bosonstar::app
