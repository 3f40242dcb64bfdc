#include <tvflow/runner.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include <tvflow/operators1d.hpp>
#include <tvflow/presets.hpp>
#include <tvflow/solver1d.hpp>
#include <tvflow/twodim.hpp>

namespace tvflow {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

double RunConfig::resolved_c_lambda() const {
  if (c_lambda) return *c_lambda;
  return dim == 2 ? 5.0 : 1.0;
}

double RunConfig::resolved_c_mu() const {
  if (c_mu) return *c_mu;
  return dim == 2 ? 20.0 : 5.0;
}

std::string RunConfig::resolved_model() const {
  if (!model.empty()) return model;
  return dim == 2 ? "iso" : "tv";
}

namespace {

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw ConfigError("invalid value '" + value + "' for key '" + key + "': expected " + expected);
}

long parse_integer(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &used);
  } catch (const std::exception&) {
    bad_value(key, value, "an integer");
  }
  if (used != value.size()) bad_value(key, value, "an integer");
  return static_cast<long>(out);
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    bad_value(key, value, "a number");
  }
  if (used != value.size() || !std::isfinite(out)) bad_value(key, value, "a finite number");
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_real(key, item));
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_1d_model(const std::string& m) { return m == "tv" || m == "spohn"; }
bool is_2d_model(const std::string& m) { return m == "iso" || m == "aniso" || m == "spohn"; }

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "preset", "init-file", "dim", "n", "nx", "ny", "model", "scheme", "clambda", "cmu",
      "beta", "mode", "stop-supnorm", "max-steps", "snap-every", "record-every",
      "thresholds", "osv-tol", "max-sweeps", "out"};
  return keys;
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string value = trim(raw_value);
  if (key == "preset") {
    cfg.preset = value;
  } else if (key == "init-file") {
    cfg.init_file = value;
  } else if (key == "dim") {
    const long d = parse_integer(key, value);
    if (d != 1 && d != 2) bad_value(key, value, "1 or 2");
    cfg.dim = static_cast<int>(d);
  } else if (key == "n") {
    cfg.n = static_cast<int>(parse_integer(key, value));
  } else if (key == "nx") {
    cfg.nx = static_cast<int>(parse_integer(key, value));
  } else if (key == "ny") {
    cfg.ny = static_cast<int>(parse_integer(key, value));
  } else if (key == "model") {
    if (!is_1d_model(value) && !is_2d_model(value)) {
      bad_value(key, value, "tv or spohn (1D), iso, aniso or spohn (2D)");
    }
    cfg.model = value;
  } else if (key == "scheme") {
    try {
      cfg.scheme = parse_scheme(value);
    } catch (const std::invalid_argument&) {
      bad_value(key, value, "approx-J or exact-H");
    }
  } else if (key == "clambda") {
    cfg.c_lambda = parse_real(key, value);
  } else if (key == "cmu") {
    cfg.c_mu = parse_real(key, value);
  } else if (key == "beta") {
    cfg.beta = parse_real(key, value);
  } else if (key == "mode") {
    try {
      cfg.mode = parse_mode(value);
    } catch (const std::invalid_argument&) {
      bad_value(key, value, "flow or osv");
    }
  } else if (key == "stop-supnorm") {
    cfg.stop_supnorm = parse_real(key, value);
  } else if (key == "max-steps") {
    cfg.max_steps = parse_integer(key, value);
  } else if (key == "snap-every") {
    cfg.snap_every = parse_integer(key, value);
  } else if (key == "record-every") {
    cfg.record_every = parse_integer(key, value);
  } else if (key == "thresholds") {
    cfg.thresholds = parse_list(key, value);
  } else if (key == "osv-tol") {
    cfg.osv_tol = parse_real(key, value);
  } else if (key == "max-sweeps") {
    cfg.max_sweeps = parse_integer(key, value);
  } else if (key == "out") {
    cfg.out = value;
  } else {
    throw ConfigError("unknown key '" + raw_key + "'");
  }
}

RunConfig parse_config(const std::string& text, const std::string& origin, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    try {
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path, std::move(base));
}

void validate(const RunConfig& cfg) {
  const std::string model = cfg.resolved_model();
  if (cfg.init_file.empty()) {
    try {
      (void)preset_dimension(cfg.preset);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (cfg.dim == 1) {
    if (!is_1d_model(model)) throw ConfigError("model '" + model + "' is not available in 1D");
    if (cfg.n < 3) throw ConfigError("n must be at least 3");
    if (cfg.init_file.empty() && preset_dimension(cfg.preset) != 1) {
      throw ConfigError("preset '" + cfg.preset + "' is not a 1D preset");
    }
  } else {
    if (!is_2d_model(model)) throw ConfigError("model '" + model + "' is not available in 2D");
    if (cfg.nx < 3 || cfg.ny < 3) throw ConfigError("nx and ny must be at least 3");
    if (cfg.scheme != Scheme::ApproxJ) throw ConfigError("2D runs support scheme approx-J only");
    if (cfg.mode != Mode::Flow) throw ConfigError("2D runs support mode flow only");
    if (cfg.init_file.empty() && preset_dimension(cfg.preset) != 2) {
      throw ConfigError("preset '" + cfg.preset + "' is not a 2D preset");
    }
  }
  if (!(cfg.resolved_c_lambda() > 0.0)) throw ConfigError("clambda must be positive");
  if (!(cfg.resolved_c_mu() > 0.0)) throw ConfigError("cmu must be positive");
  if (model == "spohn" && !(cfg.beta > 0.0)) throw ConfigError("beta must be positive");
  if (cfg.max_steps < 0) throw ConfigError("max-steps must be non-negative");
  if (cfg.snap_every < 0) throw ConfigError("snap-every must be non-negative");
  if (cfg.record_every < 0) throw ConfigError("record-every must be non-negative");
  if (!(cfg.stop_supnorm >= 0.0)) throw ConfigError("stop-supnorm must be non-negative");
  if (!(cfg.osv_tol > 0.0)) throw ConfigError("osv-tol must be positive");
  if (cfg.out.empty()) throw ConfigError("out must name a directory");
}

ResolvedParams resolve(const RunConfig& cfg) {
  ResolvedParams p;
  if (cfg.dim == 1) {
    p.h = 1.0 / cfg.n;
    p.lambda = cfg.resolved_c_lambda() / (p.h * p.h * p.h);
    p.mu = cfg.resolved_c_mu() / p.h;
  } else {
    const double area = 1.0 / (static_cast<double>(cfg.nx) * cfg.ny);
    p.h = std::sqrt(area);
    p.lambda = cfg.resolved_c_lambda() / (area * area);
    p.mu = cfg.resolved_c_mu() / area;
  }
  p.tau = 1.0 / p.lambda;
  return p;
}

Vector initial_data(const RunConfig& cfg) {
  if (!cfg.init_file.empty()) {
    const int cells = cfg.dim == 1 ? cfg.n : cfg.nx * cfg.ny;
    return load_initial(cfg.init_file, cells);
  }
  if (cfg.dim == 1) return preset_initial(cfg.preset, cfg.n);
  return preset_initial2d(cfg.preset, cfg.nx, cfg.ny);
}

std::string trajectory_csv_header() {
  return "step,t,sup_norm,tv_energy,hminus1_norm,constraint_gap";
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRecord>& records) {
  os << trajectory_csv_header() << '\n';
  for (const auto& r : records) {
    os << r.step << ',' << format_double(r.t) << ',' << format_double(r.sup_norm) << ','
       << format_double(r.tv_energy) << ',' << format_double(r.hminus1_norm) << ','
       << format_double(r.constraint_gap) << '\n';
  }
}

namespace {

void write_snapshot_1d(const fs::path& path, const Vector& full) {
  std::ofstream os(path);
  os << "x,u\n";
  const double h = 1.0 / static_cast<double>(full.size());
  for (Eigen::Index i = 0; i < full.size(); ++i) {
    os << format_double((i + 1) * h) << ',' << format_double(full(i)) << '\n';
  }
}

void write_snapshot_2d(const fs::path& path, const Vector& full, int nx, int ny) {
  std::ofstream os(path);
  os << "x,y,u\n";
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      os << format_double((ix + 1.0) / nx) << ',' << format_double((iy + 1.0) / ny) << ','
         << format_double(full(ix + iy * nx)) << '\n';
    }
  }
}

FlowMonitors monitors_from(const RunConfig& cfg) {
  FlowMonitors m;
  m.stop_supnorm = cfg.stop_supnorm;
  m.max_steps = cfg.max_steps;
  m.thresholds = cfg.thresholds;
  m.record_every = cfg.record_every;
  m.snap_every = cfg.snap_every;
  return m;
}

SolverConfig1D solver_config_1d(const RunConfig& cfg) {
  const Grid1D grid = build_grid(cfg.n);
  SolverConfig1D s = SolverConfig1D::scaled(grid, cfg.resolved_c_lambda(), cfg.resolved_c_mu(),
                                            cfg.scheme, cfg.mode);
  if (cfg.resolved_model() == "spohn") {
    s.energy = Energy::Spohn;
    s.beta = cfg.beta;
  }
  s.osv_tol = cfg.osv_tol;
  s.max_sweeps = cfg.max_sweeps;
  return s;
}

// Fixed-data sweeps with the same record schedule as a flow run.
Trajectory run_osv_1d(const Vector& f, const OperatorSet1D& ops, const SolverConfig1D& s,
                      const RunConfig& cfg, std::string& status) {
  const SystemFactor factor = factor_system(ops, s);
  BregmanState1D state = initial_state(f, ops);
  Trajectory traj;
  traj.records.push_back(diagnostics(state, ops, s));
  traj.snapshots.push_back({0, 0.0, expand(ops, state.u)});
  bool converged = false;
  while (state.k < s.max_sweeps) {
    BregmanState1D next = sweep(state, f, factor, ops, s);
    const double change = osv_change(state, next, ops);
    state = std::move(next);
    if (!std::isfinite(change)) throw SolverError("non-finite iterate at sweep " + std::to_string(state.k));
    if (cfg.record_every > 0 && state.k % cfg.record_every == 0) {
      traj.records.push_back(diagnostics(state, ops, s));
    }
    if (change <= s.osv_tol) {
      converged = true;
      break;
    }
  }
  if (traj.records.back().step != state.k) traj.records.push_back(diagnostics(state, ops, s));
  traj.snapshots.push_back({state.k, state.k * s.tau(), expand(ops, state.u)});
  traj.final_step = state.k;
  traj.final_u = state.u;
  status = converged ? "converged" : "not_converged";
  return traj;
}

json config_json(const RunConfig& cfg) {
  json j;
  j["dim"] = cfg.dim;
  if (cfg.init_file.empty()) {
    j["preset"] = cfg.preset;
  } else {
    j["init_file"] = cfg.init_file;
  }
  if (cfg.dim == 1) {
    j["n"] = cfg.n;
    j["scheme"] = std::string(to_string(cfg.scheme));
  } else {
    j["nx"] = cfg.nx;
    j["ny"] = cfg.ny;
  }
  j["model"] = cfg.resolved_model();
  if (cfg.resolved_model() == "spohn") j["beta"] = cfg.beta;
  j["clambda"] = cfg.resolved_c_lambda();
  j["cmu"] = cfg.resolved_c_mu();
  j["mode"] = std::string(to_string(cfg.mode));
  j["stop_supnorm"] = cfg.stop_supnorm;
  j["max_steps"] = cfg.max_steps;
  j["snap_every"] = cfg.snap_every;
  j["record_every"] = cfg.record_every;
  j["thresholds"] = cfg.thresholds;
  if (cfg.mode == Mode::OSV) {
    j["osv_tol"] = cfg.osv_tol;
    j["max_sweeps"] = cfg.max_sweeps;
  }
  return j;
}

}  // namespace

RunOutcome run(const RunConfig& cfg) {
  validate(cfg);
  RunOutcome outcome;
  outcome.params = resolve(cfg);
  const fs::path out(cfg.out);
  fs::create_directories(out);

  json summary;
  summary["config"] = config_json(cfg);
  summary["resolved"] = {{"h", outcome.params.h},
                         {"lambda", outcome.params.lambda},
                         {"mu", outcome.params.mu},
                         {"tau", outcome.params.tau}};

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> files;
  try {
    const Vector u0 = initial_data(cfg);
    if (cfg.dim == 1) {
      const OperatorSet1D ops = build_operators(build_grid(cfg.n), cfg.scheme);
      const SolverConfig1D s = solver_config_1d(cfg);
      if (cfg.mode == Mode::Flow) {
        outcome.trajectory = run_flow(u0, ops, s, monitors_from(cfg));
        outcome.status = std::string(to_string(outcome.trajectory.status));
      } else {
        outcome.trajectory = run_osv_1d(u0, ops, s, cfg, outcome.status);
        summary["osv_objective"] = osv_objective(outcome.trajectory.final_u, u0, ops, s);
      }
      if (cfg.scheme == Scheme::ApproxJ) {
        // Reference value of the initial H^{-1}_av norm under the exact fidelity.
        const OperatorSet1D exact = build_operators(ops.grid, Scheme::ExactH);
        summary["hminus1_norm_exact_initial"] = std::sqrt(hminus1_norm_sq(u0, exact));
      }
      for (const auto& snap : outcome.trajectory.snapshots) {
        const std::string name = "snap_" + std::to_string(snap.step) + ".csv";
        write_snapshot_1d(out / name, snap.values);
        files.push_back(name);
      }
    } else {
      const OperatorSet2D ops = build_ops2d(build_grid2d(cfg.nx, cfg.ny));
      SolverConfig2D s = SolverConfig2D::scaled(ops.grid, cfg.resolved_c_lambda(),
                                                cfg.resolved_c_mu(),
                                                parse_model2d(cfg.resolved_model()));
      s.beta = cfg.beta;
      outcome.trajectory = run_flow2d(u0, ops, s, monitors_from(cfg));
      outcome.status = std::string(to_string(outcome.trajectory.status));
      for (const auto& snap : outcome.trajectory.snapshots) {
        const std::string name = "snap_" + std::to_string(snap.step) + ".csv";
        write_snapshot_2d(out / name, snap.values, cfg.nx, cfg.ny);
        files.push_back(name);
      }
    }
    outcome.exit_code = 0;
  } catch (const SolverError& e) {
    outcome.status = "error";
    outcome.message = e.what();
    outcome.exit_code = 3;
  } catch (const std::runtime_error& e) {
    outcome.status = "error";
    outcome.message = e.what();
    outcome.exit_code = 3;
  }
  outcome.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  {
    std::ofstream os(out / "trajectory.csv");
    write_trajectory_csv(os, outcome.trajectory.records);
  }
  files.insert(files.begin(), "trajectory.csv");

  summary["status"] = outcome.status;
  summary["complete"] = outcome.exit_code == 0;
  if (!outcome.message.empty()) summary["error"] = outcome.message;
  summary["final_step"] = outcome.trajectory.final_step;
  summary["final_t"] = outcome.trajectory.final_step * outcome.params.tau;
  if (!outcome.trajectory.records.empty()) {
    summary["final_sup_norm"] = outcome.trajectory.records.back().sup_norm;
  }
  json crossings = json::array();
  for (const auto& c : outcome.trajectory.crossings) {
    crossings.push_back({{"threshold", c.threshold},
                         {"step", c.step ? json(*c.step) : json(nullptr)}});
  }
  summary["crossings"] = crossings;
  summary["wall_time_s"] = outcome.wall_seconds;
  summary["files"] = files;
  std::ofstream(out / "summary.json") << std::setw(2) << summary << '\n';
  return outcome;
}

std::vector<RunOutcome> run_many(const std::vector<RunConfig>& configs, bool parallel) {
  std::set<std::string> dirs;
  for (const auto& c : configs) {
    if (!dirs.insert(fs::weakly_canonical(c.out).string()).second) {
      throw ConfigError("output directory '" + c.out + "' is used by more than one run");
    }
  }
  std::vector<RunOutcome> out;
  if (!parallel) {
    for (const auto& c : configs) out.push_back(run(c));
    return out;
  }
  std::vector<std::future<RunOutcome>> jobs;
  for (const auto& c : configs) jobs.push_back(std::async(std::launch::async, [c] { return run(c); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

SchemeComparison compare_schemes(const RunConfig& a, const RunConfig& b) {
  validate(a);
  validate(b);
  if (a.dim != 1 || b.dim != 1) throw ConfigError("scheme comparison is 1D only");
  if (a.mode != Mode::Flow || b.mode != Mode::Flow) {
    throw ConfigError("scheme comparison needs mode flow");
  }
  if (a.n != b.n) {
    throw ConfigError("grids differ: n = " + std::to_string(a.n) + " vs " + std::to_string(b.n));
  }
  if (a.preset != b.preset || a.init_file != b.init_file) {
    throw ConfigError("initial data differ between the two configs");
  }
  if (a.resolved_model() != b.resolved_model() || a.resolved_c_lambda() != b.resolved_c_lambda() ||
      a.resolved_c_mu() != b.resolved_c_mu() || a.beta != b.beta) {
    throw ConfigError("configs differ in more than the scheme");
  }

  const long steps = a.max_steps;
  const long every = a.record_every > 0 ? a.record_every : std::max(steps, 1L);
  auto fields_of = [&](const RunConfig& c) {
    const OperatorSet1D ops = build_operators(build_grid(c.n), c.scheme);
    FlowMonitors m;
    m.stop_supnorm = 0.0;
    m.max_steps = steps;
    m.record_every = 0;
    std::vector<std::pair<long, Vector>> fields;
    m.observer = [&](long k, const Vector& full) {
      if (k % every == 0 || k == steps) fields.emplace_back(k, full);
    };
    run_flow(initial_data(c), ops, solver_config_1d(c), m);
    return fields;
  };
  const auto fa = fields_of(a);
  const auto fb = fields_of(b);
  const double tau = resolve(a).tau;

  SchemeComparison cmp;
  for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
    const double d = (fa[i].second - fb[i].second).cwiseAbs().maxCoeff();
    cmp.steps.push_back(fa[i].first);
    cmp.times.push_back(fa[i].first * tau);
    cmp.sup_diff.push_back(d);
    cmp.max_diff = std::max(cmp.max_diff, d);
    cmp.final_diff = d;
  }
  return cmp;
}

std::vector<GapPoint> scheme_gap_sweep(const RunConfig& base, const std::vector<int>& sizes,
                                       double t_final, bool parallel) {
  auto one = [&base, t_final](int n) {
    RunConfig a = base;
    a.dim = 1;
    a.mode = Mode::Flow;
    a.n = n;
    const double lambda = resolve(a).lambda;
    GapPoint p;
    p.n = n;
    p.steps = std::lround(t_final * lambda);
    p.time = p.steps / lambda;
    a.max_steps = p.steps;
    a.record_every = 0;
    a.scheme = Scheme::ApproxJ;
    RunConfig b = a;
    b.scheme = Scheme::ExactH;
    p.sup_diff = compare_schemes(a, b).final_diff;
    return p;
  };
  std::vector<GapPoint> out;
  if (!parallel) {
    for (int n : sizes) out.push_back(one(n));
    return out;
  }
  std::vector<std::future<GapPoint>> jobs;
  for (int n : sizes) jobs.push_back(std::async(std::launch::async, one, n));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

double extinction_bound_cos() {
  return 1.0 / (4.0 * std::numbers::sqrt2 * std::numbers::pi * std::numbers::pi);
}

std::vector<ExtinctionRow> extinction_table(const ExtinctionOptions& options) {
  struct Spec {
    int n;
    double c_lambda;
    std::vector<long> reference;
  };
  static const Spec specs[3] = {{100, 1.0, {4032, 41769, 135755}},
                                {100, 10.0, {40311, 60579, 333015}},
                                {200, 10.0, {322491, 592634, 1267927}}};
  const std::vector<double> thresholds{1e-4, 1e-6, 1e-8};

  auto one = [&](int index) {
    const Spec& spec = specs[index];
    ExtinctionRow row;
    row.n = spec.n;
    row.c_lambda = spec.c_lambda;
    row.c_mu = options.c_mu;
    row.thresholds = thresholds;
    row.reference = spec.reference;
    const Grid1D grid = build_grid(spec.n);
    const SolverConfig1D cfg =
        SolverConfig1D::scaled(grid, spec.c_lambda, options.c_mu, Scheme::ApproxJ, Mode::Flow);
    row.tau = cfg.tau();
    row.bound = std::lround(extinction_bound_cos() / row.tau);
    const OperatorSet1D ops = build_operators(grid, Scheme::ApproxJ);
    FlowMonitors m;
    m.stop_supnorm = thresholds.back();
    m.max_steps = options.max_steps;
    m.thresholds = thresholds;
    m.record_every = 0;
    const auto start = std::chrono::steady_clock::now();
    const Trajectory traj = run_flow(preset_initial("cos1d", spec.n), ops, cfg, m);
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& c : traj.crossings) row.steps.push_back(c.step);
    row.exhausted = traj.status != FlowStatus::Extinct;
    return row;
  };

  for (int r : options.rows) {
    if (r < 0 || r > 2) throw std::out_of_range("the extinction table has rows 0, 1 and 2");
  }
  std::vector<ExtinctionRow> rows;
  if (!options.parallel) {
    for (int r : options.rows) rows.push_back(one(r));
    return rows;
  }
  std::vector<std::future<ExtinctionRow>> jobs;
  for (int r : options.rows) jobs.push_back(std::async(std::launch::async, one, r));
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

void print_extinction_table(std::ostream& os, const std::vector<ExtinctionRow>& rows, double c_mu) {
  os << "Extinction steps for u0 = -cos(2 pi x), scheme approx-J\n";
  os << "mu = " << c_mu << " h^-1 (assumed; the reference counts do not fix mu, so these "
     << "counts are parameter-sensitive)\n";
  os << "bound = round(T*/tau), T* = 1/(4 sqrt(2) pi^2) = " << std::setprecision(10)
     << extinction_bound_cos() << "\n";
  os << std::setprecision(6);
  os << std::left << std::setw(6) << "N" << std::setw(12) << "lambda" << std::setw(12) << "tau";
  for (double t : rows.empty() ? std::vector<double>{} : rows.front().thresholds) {
    std::ostringstream label;
    label << "k(" << t << ")";
    os << std::setw(12) << label.str() << std::setw(12) << "reference";
  }
  os << std::setw(10) << "bound" << "\n";
  for (const auto& r : rows) {
    std::ostringstream lam;
    lam << r.c_lambda << "h^-3";
    os << std::setw(6) << r.n << std::setw(12) << lam.str() << std::setw(12) << r.tau;
    for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
      os << std::setw(12) << (r.steps[i] ? std::to_string(*r.steps[i]) : std::string("-"))
         << std::setw(12) << r.reference[i];
    }
    os << std::setw(10) << r.bound;
    if (r.exhausted) os << "  (max steps reached)";
    os << "\n";
  }
}

}  // namespace tvflow
