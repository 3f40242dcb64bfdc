// Command line front end: run, compare, gap, extinction, operators.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tvflow/operators1d.hpp>
#include <tvflow/presets.hpp>
#include <tvflow/runner.hpp>
#include <tvflow/twodim.hpp>

namespace {

using tvflow::RunConfig;

// Every config key doubles as a --flag; flags win over the config file.
struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> values;

  void attach(CLI::App& app) {
    app.add_option("config", config_path, "flat key = value config file")->check(CLI::ExistingFile);
    for (const auto& key : tvflow::config_keys()) {
      app.add_option("--" + key, values[key], "override '" + key + "'");
    }
  }

  RunConfig resolve(CLI::App& app) const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = tvflow::load_config(config_path);
    for (const auto& key : tvflow::config_keys()) {
      if (app.count("--" + key) > 0) tvflow::apply_setting(cfg, key, values.at(key));
    }
    return cfg;
  }
};

void print_matrix(std::ostream& os, const tvflow::Matrix& m) {
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      os << (j ? "," : "") << buf;
    }
    os << '\n';
  }
}

int cmd_run(CLI::App& app, const Overrides& o) {
  const RunConfig cfg = o.resolve(app);
  const tvflow::RunOutcome r = tvflow::run(cfg);
  std::cout << "status: " << r.status << "\n"
            << "steps: " << r.trajectory.final_step << "\n"
            << "lambda: " << r.params.lambda << "  mu: " << r.params.mu
            << "  tau: " << r.params.tau << "\n"
            << "output: " << cfg.out << "\n";
  if (!r.message.empty()) std::cerr << "error: " << r.message << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split Bregman solver for fourth-order total variation flows"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one experiment from a config and/or flags");
  Overrides run_opts;
  run_opts.attach(*run);

  auto* compare = app.add_subcommand("compare", "compare approx-J and exact-H on one 1D grid");
  Overrides cmp_opts;
  cmp_opts.attach(*compare);

  auto* gap = app.add_subcommand("gap", "scheme gap at fixed physical time over several N");
  Overrides gap_opts;
  gap_opts.attach(*gap);
  std::vector<int> gap_sizes{40, 80, 160};
  double gap_time = 0.015625;
  bool gap_parallel = false;
  gap->add_option("--sizes", gap_sizes, "grid sizes")->delimiter(',');
  gap->add_option("--time", gap_time, "physical comparison time");
  gap->add_flag("--parallel", gap_parallel, "run grid sizes concurrently");

  auto* extinction = app.add_subcommand("extinction", "extinction steps for -cos(2 pi x)");
  tvflow::ExtinctionOptions ext;
  extinction->add_option("--max-steps", ext.max_steps, "step cap per row");
  extinction->add_option("--cmu", ext.c_mu, "mu = cmu / h");
  extinction->add_option("--rows", ext.rows, "rows to run (0, 1, 2)")->delimiter(',');
  extinction->add_flag("--parallel", ext.parallel, "run rows concurrently");

  auto* ops = app.add_subcommand("operators", "print a 1D or 2D operator as CSV");
  int op_n = 4;
  int op_nx = 0;
  std::string op_scheme = "approx-J";
  std::string op_name = "A";
  ops->add_option("--n", op_n, "cells (1D)");
  ops->add_option("--nx", op_nx, "cells per side for 2D operators (Bx, By, A2, Kx, Ky)");
  ops->add_option("--scheme", op_scheme, "approx-J or exact-H");
  ops->add_option("--name", op_name, "S, R, L, T, M, A, K, SR | Bx, By, A2, Kx, Ky");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return cmd_run(*run, run_opts);

    if (*compare) {
      RunConfig a = cmp_opts.resolve(*compare);
      a.scheme = tvflow::Scheme::ApproxJ;
      RunConfig b = a;
      b.scheme = tvflow::Scheme::ExactH;
      const auto cmp = tvflow::compare_schemes(a, b);
      std::cout << "step,t,sup_diff\n";
      for (std::size_t i = 0; i < cmp.steps.size(); ++i) {
        std::cout << cmp.steps[i] << ',' << std::setprecision(10) << cmp.times[i] << ','
                  << cmp.sup_diff[i] << '\n';
      }
      std::cerr << "max sup difference " << cmp.max_diff << ", final " << cmp.final_diff << "\n";
      return 0;
    }

    if (*gap) {
      const RunConfig base = gap_opts.resolve(*gap);
      const auto pts = tvflow::scheme_gap_sweep(base, gap_sizes, gap_time, gap_parallel);
      std::cout << "n,steps,t,sup_diff\n";
      for (const auto& p : pts) {
        std::cout << p.n << ',' << p.steps << ',' << std::setprecision(10) << p.time << ','
                  << p.sup_diff << '\n';
      }
      return 0;
    }

    if (*extinction) {
      const auto rows = tvflow::extinction_table(ext);
      tvflow::print_extinction_table(std::cout, rows, ext.c_mu);
      return 0;
    }

    if (*ops) {
      if (op_nx > 0) {
        const auto o = tvflow::build_ops2d(tvflow::build_grid2d(op_nx, op_nx));
        if (op_name == "Bx") print_matrix(std::cout, tvflow::Matrix(o.Bx));
        else if (op_name == "By") print_matrix(std::cout, tvflow::Matrix(o.By));
        else if (op_name == "A2" || op_name == "A") print_matrix(std::cout, o.A);
        else if (op_name == "Kx") print_matrix(std::cout, o.Kx);
        else if (op_name == "Ky") print_matrix(std::cout, o.Ky);
        else throw tvflow::ConfigError("unknown 2D operator '" + op_name + "'");
        return 0;
      }
      const auto o = tvflow::build_operators(tvflow::build_grid(op_n), tvflow::parse_scheme(op_scheme));
      const std::map<std::string, const tvflow::Matrix*> table{
          {"S", &o.S}, {"R", &o.R}, {"L", &o.L}, {"T", &o.T},
          {"A", &o.laplacian.A}, {"K", &o.K}, {"SR", &o.SR}};
      if (op_name == "M") {
        print_matrix(std::cout, tvflow::build_mass_matrix(o.grid));
      } else if (auto it = table.find(op_name); it != table.end()) {
        print_matrix(std::cout, *it->second);
      } else {
        throw tvflow::ConfigError("unknown operator '" + op_name + "'");
      }
      return 0;
    }
  } catch (const tvflow::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
