#ifndef TVFLOW_RUNNER_HPP
#define TVFLOW_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <tvflow/trajectory.hpp>
#include <tvflow/types.hpp>

namespace tvflow {

/// Raised for unknown keys, malformed values and inconsistent settings.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One experiment. Grid scalings: lambda = c_lambda h^{-3}, mu = c_mu h^{-1}
/// in 1D and lambda = c_lambda h^{-4}, mu = c_mu h^{-2} in 2D.
struct RunConfig {
  int dim = 1;
  std::string preset = "cos1d";
  std::string init_file;  // overrides preset when set
  int n = 100;
  int nx = 40;
  int ny = 40;
  std::string model;  // 1D: tv (default), spohn. 2D: iso (default), aniso, spohn
  Scheme scheme = Scheme::ApproxJ;
  std::optional<double> c_lambda;  // default 1 (1D) or 5 (2D)
  std::optional<double> c_mu;      // default 5 (1D) or 20 (2D)
  double beta = 0.25;
  Mode mode = Mode::Flow;
  double stop_supnorm = 1e-4;
  long max_steps = 1'000'000;
  long snap_every = 0;
  long record_every = 1;
  std::vector<double> thresholds;
  double osv_tol = 1e-10;
  long max_sweeps = 100'000;
  std::string out = "tvflow_out";

  double resolved_c_lambda() const;
  double resolved_c_mu() const;
  std::string resolved_model() const;
};

/// Keys accepted in config files and as --flags (dashes and underscores
/// are interchangeable).
const std::vector<std::string>& config_keys();

/// Applies one key/value pair. Throws ConfigError naming the key on failure.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat "key = value" text; '#' starts a comment. origin labels diagnostics.
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>",
                       RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Throws ConfigError when the settings violate a solver precondition.
void validate(const RunConfig& cfg);

struct ResolvedParams {
  double h = 0.0;  // h in 1D, sqrt(hx hy) in 2D
  double lambda = 0.0;
  double mu = 0.0;
  double tau = 0.0;
};

ResolvedParams resolve(const RunConfig& cfg);

/// Reduced initial vector for the configured preset or file.
Vector initial_data(const RunConfig& cfg);

/// Writes step,t,sup_norm,tv_energy,hminus1_norm,constraint_gap with %.17g.
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRecord>& records);
std::string trajectory_csv_header();

struct RunOutcome {
  int exit_code = 0;
  std::string status;  // extinct, max_steps, converged, not_converged, error
  std::string message;
  Trajectory trajectory;
  ResolvedParams params;
  double wall_seconds = 0.0;
};

/// Runs the configured experiment and writes trajectory.csv, snap_<step>.csv
/// and summary.json under cfg.out. Never throws for solver failures: they
/// are reported with exit_code 3 and a summary marked incomplete.
RunOutcome run(const RunConfig& cfg);

/// Runs independent configs, optionally concurrently. Output directories
/// must differ.
std::vector<RunOutcome> run_many(const std::vector<RunConfig>& configs, bool parallel);

struct SchemeComparison {
  std::vector<long> steps;
  std::vector<double> times;
  std::vector<double> sup_diff;  // max_n |u_A - u_B| at each matched step
  double max_diff = 0.0;
  double final_diff = 0.0;
};

/// Runs two 1D flows that may differ only in scheme for the same number of
/// steps (a.max_steps, extinction stop disabled) and compares the full
/// fields at every record_every-th step. Throws ConfigError on any other
/// mismatch.
SchemeComparison compare_schemes(const RunConfig& a, const RunConfig& b);

struct GapPoint {
  int n = 0;
  long steps = 0;
  double time = 0.0;
  double sup_diff = 0.0;
};

/// approx-J versus exact-H at physical time t_final for each grid size,
/// starting from base (1D). Each run takes round(t_final * lambda) steps.
std::vector<GapPoint> scheme_gap_sweep(const RunConfig& base, const std::vector<int>& sizes,
                                       double t_final, bool parallel = false);

/// 1/(4 sqrt(2) pi^2): the extinction-time bound for -cos(2 pi x).
double extinction_bound_cos();

struct ExtinctionRow {
  int n = 0;
  double c_lambda = 0.0;
  double c_mu = 0.0;
  double tau = 0.0;
  std::vector<double> thresholds;
  std::vector<std::optional<long>> steps;
  std::vector<long> reference;  // reference counts
  long bound = 0;               // round(T* / tau)
  bool exhausted = false;       // max_steps reached before the last threshold
  double wall_seconds = 0.0;
};

struct ExtinctionOptions {
  long max_steps = 2'000'000;
  double c_mu = 5.0;
  bool parallel = false;
  std::vector<int> rows{0, 1, 2};  // subset of the three rows
};

std::vector<ExtinctionRow> extinction_table(const ExtinctionOptions& options = {});

void print_extinction_table(std::ostream& os, const std::vector<ExtinctionRow>& rows, double c_mu);

}  // namespace tvflow

#endif  // TVFLOW_RUNNER_HPP
