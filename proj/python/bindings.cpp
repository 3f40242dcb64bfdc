#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tvflow/diagnostics.hpp>
#include <tvflow/operators1d.hpp>
#include <tvflow/presets.hpp>
#include <tvflow/runner.hpp>
#include <tvflow/shrinkage.hpp>
#include <tvflow/solver1d.hpp>
#include <tvflow/twodim.hpp>

namespace py = pybind11;
using namespace tvflow;

namespace {

py::dict trajectory_dict(const Trajectory& t) {
  const auto n = static_cast<Eigen::Index>(t.records.size());
  Eigen::VectorXd step(n), time(n), sup(n), tv(n), hm1(n), gap(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = t.records[static_cast<std::size_t>(i)];
    step(i) = static_cast<double>(r.step);
    time(i) = r.t;
    sup(i) = r.sup_norm;
    tv(i) = r.tv_energy;
    hm1(i) = r.hminus1_norm;
    gap(i) = r.constraint_gap;
  }
  py::dict records;
  records["step"] = step;
  records["t"] = time;
  records["sup_norm"] = sup;
  records["tv_energy"] = tv;
  records["hminus1_norm"] = hm1;
  records["constraint_gap"] = gap;

  py::list snapshots;
  for (const auto& s : t.snapshots) {
    py::dict d;
    d["step"] = s.step;
    d["t"] = s.t;
    d["values"] = s.values;
    snapshots.append(d);
  }
  py::dict crossings;
  for (const auto& c : t.crossings) {
    crossings[py::float_(c.threshold)] = c.step ? py::object(py::int_(*c.step)) : py::none();
  }

  py::dict out;
  out["status"] = std::string(to_string(t.status));
  out["final_step"] = t.final_step;
  out["final_u"] = t.final_u;
  out["records"] = records;
  out["snapshots"] = snapshots;
  out["crossings"] = crossings;
  return out;
}

FlowMonitors make_monitors(double stop_supnorm, long max_steps, std::vector<double> thresholds,
                           long record_every, long snap_every) {
  FlowMonitors m;
  m.stop_supnorm = stop_supnorm;
  m.max_steps = max_steps;
  m.thresholds = std::move(thresholds);
  m.record_every = record_every;
  m.snap_every = snap_every;
  return m;
}

RunConfig config_from(const py::dict& settings) {
  RunConfig cfg;
  for (const auto& [key, value] : settings) {
    std::string text;
    if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
      for (const auto& item : value) {
        if (!text.empty()) text += ",";
        text += py::str(item).cast<std::string>();
      }
    } else {
      text = py::str(value).cast<std::string>();
    }
    apply_setting(cfg, key.cast<std::string>(), text);
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Split Bregman schemes for fourth-order total variation flows";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::enum_<Scheme>(m, "Scheme")
      .value("ApproxJ", Scheme::ApproxJ)
      .value("ExactH", Scheme::ExactH);
  py::enum_<Mode>(m, "Mode").value("OSV", Mode::OSV).value("Flow", Mode::Flow);
  py::enum_<Energy>(m, "Energy").value("TV", Energy::TV).value("Spohn", Energy::Spohn);
  py::enum_<Model2D>(m, "Model2D")
      .value("Isotropic", Model2D::Isotropic)
      .value("Anisotropic", Model2D::Anisotropic)
      .value("Spohn", Model2D::Spohn);

  py::class_<Grid1D>(m, "Grid1D")
      .def_readonly("n", &Grid1D::n)
      .def_readonly("h", &Grid1D::h);
  m.def("build_grid", &build_grid, py::arg("n"));

  py::class_<OperatorSet1D>(m, "OperatorSet1D")
      .def_readonly("grid", &OperatorSet1D::grid)
      .def_readonly("scheme", &OperatorSet1D::scheme)
      .def_readonly("S", &OperatorSet1D::S)
      .def_readonly("R", &OperatorSet1D::R)
      .def_readonly("L", &OperatorSet1D::L)
      .def_readonly("T", &OperatorSet1D::T)
      .def_readonly("SR", &OperatorSet1D::SR)
      .def_readonly("K", &OperatorSet1D::K)
      .def_property_readonly("A", [](const OperatorSet1D& o) { return o.laplacian.A; })
      .def_property_readonly("det_A", [](const OperatorSet1D& o) { return o.laplacian.determinant(); })
      .def_property_readonly("n", &OperatorSet1D::n)
      .def_property_readonly("h", &OperatorSet1D::h);
  m.def("build_operators", [](int n, Scheme scheme) { return build_operators(build_grid(n), scheme); },
        py::arg("n"), py::arg("scheme") = Scheme::ApproxJ);
  m.def("expand", &expand, py::arg("ops"), py::arg("reduced"));
  m.def("reduce", &reduce, py::arg("ops"), py::arg("full"));
  m.def("tv_energy", &tv_energy, py::arg("u"), py::arg("ops"));
  m.def("spohn_energy", &spohn_energy, py::arg("u"), py::arg("beta"), py::arg("ops"));
  m.def("hminus1_norm_sq", &hminus1_norm_sq, py::arg("v"), py::arg("ops"));

  m.def("shrink_tv", &shrink_tv, py::arg("rho"), py::arg("a"));
  m.def("shrink_spohn", &shrink_spohn, py::arg("rho"), py::arg("a"), py::arg("beta"));
  m.def("shrink_iso2d", &shrink_iso2d, py::arg("s_x"), py::arg("s_y"), py::arg("mu_cell"));
  m.def("shrink_spohn2d", &shrink_spohn2d, py::arg("s_x"), py::arg("s_y"), py::arg("mu_cell"),
        py::arg("beta"));

  py::class_<SolverConfig1D>(m, "SolverConfig1D")
      .def(py::init<>())
      .def_readwrite("lam", &SolverConfig1D::lambda)
      .def_readwrite("mu", &SolverConfig1D::mu)
      .def_readwrite("energy", &SolverConfig1D::energy)
      .def_readwrite("beta", &SolverConfig1D::beta)
      .def_readwrite("scheme", &SolverConfig1D::scheme)
      .def_readwrite("mode", &SolverConfig1D::mode)
      .def_readwrite("osv_tol", &SolverConfig1D::osv_tol)
      .def_readwrite("max_sweeps", &SolverConfig1D::max_sweeps)
      .def_property_readonly("tau", &SolverConfig1D::tau)
      .def_static("scaled",
                  [](int n, double c_lambda, double c_mu, Scheme scheme, Mode mode) {
                    return SolverConfig1D::scaled(build_grid(n), c_lambda, c_mu, scheme, mode);
                  },
                  py::arg("n"), py::arg("c_lambda"), py::arg("c_mu"),
                  py::arg("scheme") = Scheme::ApproxJ, py::arg("mode") = Mode::Flow);

  m.def("run_flow",
        [](const Eigen::VectorXd& u0, const OperatorSet1D& ops, const SolverConfig1D& cfg,
           double stop_supnorm, long max_steps, std::vector<double> thresholds, long record_every,
           long snap_every) {
          const FlowMonitors mon =
              make_monitors(stop_supnorm, max_steps, std::move(thresholds), record_every, snap_every);
          Trajectory t;
          {
            py::gil_scoped_release release;
            t = run_flow(u0, ops, cfg, mon);
          }
          return trajectory_dict(t);
        },
        py::arg("u0"), py::arg("ops"), py::arg("cfg"), py::arg("stop_supnorm") = 1e-4,
        py::arg("max_steps") = 1'000'000, py::arg("thresholds") = std::vector<double>{},
        py::arg("record_every") = 1, py::arg("snap_every") = 0);

  m.def("solve_osv",
        [](const Eigen::VectorXd& f, const OperatorSet1D& ops, const SolverConfig1D& cfg) {
          const OsvResult r = solve_osv(f, ops, cfg);
          py::dict out;
          out["u"] = r.u;
          out["objective"] = r.objective;
          out["sweeps"] = r.sweeps;
          out["converged"] = r.converged;
          out["final_rel_change"] = r.final_rel_change;
          return out;
        },
        py::arg("f"), py::arg("ops"), py::arg("cfg"));
  m.def("osv_objective", &osv_objective, py::arg("u"), py::arg("f"), py::arg("ops"), py::arg("cfg"));

  py::class_<OperatorSet2D>(m, "OperatorSet2D")
      .def_property_readonly("nx", [](const OperatorSet2D& o) { return o.grid.nx; })
      .def_property_readonly("ny", [](const OperatorSet2D& o) { return o.grid.ny; })
      .def_readonly("Bx", &OperatorSet2D::Bx)
      .def_readonly("By", &OperatorSet2D::By)
      .def_readonly("A", &OperatorSet2D::A)
      .def_readonly("Kx", &OperatorSet2D::Kx)
      .def_readonly("Ky", &OperatorSet2D::Ky);
  m.def("build_ops2d", [](int nx, int ny) { return build_ops2d(build_grid2d(nx, ny)); },
        py::arg("nx"), py::arg("ny"));
  m.def("expand2d", &expand2d, py::arg("ops"), py::arg("reduced"));

  py::class_<SolverConfig2D>(m, "SolverConfig2D")
      .def(py::init<>())
      .def_readwrite("lam", &SolverConfig2D::lambda)
      .def_readwrite("mu", &SolverConfig2D::mu)
      .def_readwrite("model", &SolverConfig2D::model)
      .def_readwrite("beta", &SolverConfig2D::beta)
      .def_property_readonly("tau", &SolverConfig2D::tau)
      .def_static("scaled",
                  [](int nx, int ny, double c_lambda, double c_mu, Model2D model) {
                    return SolverConfig2D::scaled(build_grid2d(nx, ny), c_lambda, c_mu, model);
                  },
                  py::arg("nx"), py::arg("ny"), py::arg("c_lambda"), py::arg("c_mu"),
                  py::arg("model") = Model2D::Isotropic);

  m.def("run_flow2d",
        [](const Eigen::VectorXd& u0, const OperatorSet2D& ops, const SolverConfig2D& cfg,
           double stop_supnorm, long max_steps, std::vector<double> thresholds, long record_every,
           long snap_every) {
          const FlowMonitors mon =
              make_monitors(stop_supnorm, max_steps, std::move(thresholds), record_every, snap_every);
          Trajectory t;
          {
            py::gil_scoped_release release;
            t = run_flow2d(u0, ops, cfg, mon);
          }
          return trajectory_dict(t);
        },
        py::arg("u0"), py::arg("ops"), py::arg("cfg"), py::arg("stop_supnorm") = 1e-4,
        py::arg("max_steps") = 1'000'000, py::arg("thresholds") = std::vector<double>{},
        py::arg("record_every") = 1, py::arg("snap_every") = 0);

  m.def("preset_names", &preset_names);
  m.def("preset_initial", &preset_initial, py::arg("name"), py::arg("n"));
  m.def("preset_samples", &preset_samples, py::arg("name"), py::arg("n"));
  m.def("preset_initial2d", &preset_initial2d, py::arg("name"), py::arg("nx"), py::arg("ny"));

  m.def("find_plateaus",
        [](const Eigen::VectorXd& full, int min_length, double band, double min_jump) {
          py::list out;
          for (const Plateau& p : find_plateaus(full, min_length, band, min_jump)) {
            py::dict d;
            d["start"] = p.start;
            d["length"] = p.length;
            d["level"] = p.level;
            d["spread"] = p.spread;
            d["left_jump"] = p.left_jump;
            d["right_jump"] = p.right_jump;
            out.append(d);
          }
          return out;
        },
        py::arg("full"), py::arg("min_length") = 10, py::arg("band") = 1e-3,
        py::arg("min_jump") = 1e-2);
  m.def("plateau_coverage", &plateau_coverage, py::arg("full"), py::arg("nx"), py::arg("ny"),
        py::arg("band") = 1e-3);

  m.def("config_keys", &config_keys);
  m.def("run",
        [](const py::dict& settings) {
          const RunConfig cfg = config_from(settings);
          RunOutcome r;
          {
            py::gil_scoped_release release;
            r = run(cfg);
          }
          py::dict out = trajectory_dict(r.trajectory);
          out["exit_code"] = r.exit_code;
          out["status"] = r.status;
          out["message"] = r.message;
          out["lam"] = r.params.lambda;
          out["mu"] = r.params.mu;
          out["tau"] = r.params.tau;
          out["wall_seconds"] = r.wall_seconds;
          return out;
        },
        py::arg("settings"),
        "Runs one experiment. Keys are the config-file keys; values may be numbers, "
        "strings or lists (thresholds).");
  m.def("extinction_bound_cos", &extinction_bound_cos);
}
