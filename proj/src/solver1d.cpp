#include <tvflow/solver1d.hpp>

#include <cmath>
#include <string>

#include <tvflow/detail/flow_loop.hpp>
#include <tvflow/shrinkage.hpp>

namespace tvflow {

std::string_view to_string(FlowStatus status) {
  return status == FlowStatus::Extinct ? "extinct" : "max_steps";
}

SolverConfig1D SolverConfig1D::scaled(const Grid1D& grid, double c_lambda, double c_mu,
                                      Scheme scheme, Mode mode) {
  SolverConfig1D cfg;
  cfg.lambda = c_lambda / (grid.h * grid.h * grid.h);
  cfg.mu = c_mu / grid.h;
  cfg.scheme = scheme;
  cfg.mode = mode;
  return cfg;
}

void SolverConfig1D::validate() const {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (!(mu > 0.0)) throw std::domain_error("mu must be positive");
  if (energy == Energy::Spohn && !(beta > 0.0)) {
    throw std::domain_error("Spohn energy needs a positive facet weight beta");
  }
  if (mode == Mode::OSV && !(osv_tol > 0.0)) throw std::domain_error("osv_tol must be positive");
}

BregmanState1D initial_state(const Vector& u0, const OperatorSet1D& ops) {
  if (u0.size() != ops.n() - 1) {
    throw std::invalid_argument("initial data has " + std::to_string(u0.size()) +
                                " reduced entries, expected " + std::to_string(ops.n() - 1));
  }
  BregmanState1D s;
  s.u = u0;
  s.d = ops.SR * u0;
  s.alpha = Vector::Zero(ops.n());
  s.k = 0;
  return s;
}

SystemFactor factor_system(const OperatorSet1D& ops, const SolverConfig1D& cfg) {
  cfg.validate();
  const double h = ops.h();
  SystemFactor f;
  f.lambda = cfg.lambda;
  f.mu = cfg.mu;
  f.fidelity = (cfg.lambda * h * h * h) * (ops.K.transpose() * ops.K);
  f.G = f.fidelity + (cfg.mu * h) * (ops.SR.transpose() * ops.SR);
  f.llt.compute(f.G);
  if (f.llt.info() != Eigen::Success) {
    throw SolverError("system matrix is not positive definite");
  }
  return f;
}

Vector u_rhs(const BregmanState1D& state, const Vector& f, const SystemFactor& factor,
             const OperatorSet1D& ops) {
  return factor.fidelity * f + (factor.mu * ops.h()) * (ops.SR.transpose() * (state.d - state.alpha));
}

Vector u_update(const BregmanState1D& state, const Vector& f, const SystemFactor& factor,
                const OperatorSet1D& ops) {
  return factor.solve(u_rhs(state, f, factor, ops));
}

Vector d_update(const BregmanState1D& state, const OperatorSet1D& ops, const SolverConfig1D& cfg) {
  const Vector rho = ops.SR * state.u + state.alpha;
  const double a = 1.0 / (cfg.mu * ops.h());
  Vector d(rho.size());
  if (cfg.energy == Energy::Spohn) {
    for (Eigen::Index i = 0; i < rho.size(); ++i) d(i) = shrink_spohn(rho(i), a, cfg.beta);
  } else {
    for (Eigen::Index i = 0; i < rho.size(); ++i) d(i) = shrink_tv(rho(i), a);
  }
  return d;
}

Vector alpha_update(const BregmanState1D& state, const OperatorSet1D& ops) {
  return state.alpha - state.d + ops.SR * state.u;
}

BregmanState1D sweep(const BregmanState1D& state, const Vector& f, const SystemFactor& factor,
                     const OperatorSet1D& ops, const SolverConfig1D& cfg) {
  BregmanState1D next = state;
  next.u = u_update(state, f, factor, ops);
  next.d = d_update(next, ops, cfg);
  next.alpha = alpha_update(next, ops);
  next.k = state.k + 1;
  return next;
}

BregmanState1D flow_step(const BregmanState1D& state, const SystemFactor& factor,
                         const OperatorSet1D& ops, const SolverConfig1D& cfg) {
  return sweep(state, state.u, factor, ops, cfg);
}

double model_energy(const Vector& u, const OperatorSet1D& ops, const SolverConfig1D& cfg) {
  if (cfg.energy == Energy::Spohn) return spohn_energy(u, cfg.beta, ops);
  return tv_energy(u, ops);
}

double osv_objective(const Vector& u, const Vector& f, const OperatorSet1D& ops,
                     const SolverConfig1D& cfg) {
  return model_energy(u, ops, cfg) + 0.5 * cfg.lambda * hminus1_norm_sq(u - f, ops);
}

double osv_change(const BregmanState1D& prev, const BregmanState1D& next,
                  const OperatorSet1D& ops) {
  const double scale = std::max(prev.u.norm(), ops.h());
  const double du = (next.u - prev.u).norm();
  const double gap = (next.d - ops.SR * next.u).norm();
  return std::max(du, gap) / scale;
}

OsvResult solve_osv(const Vector& f, const OperatorSet1D& ops, const SolverConfig1D& cfg) {
  const SystemFactor factor = factor_system(ops, cfg);
  BregmanState1D state = initial_state(f, ops);
  OsvResult out;
  out.objective.push_back(osv_objective(state.u, f, ops, cfg));
  while (out.sweeps < cfg.max_sweeps) {
    BregmanState1D next = sweep(state, f, factor, ops, cfg);
    ++out.sweeps;
    out.final_rel_change = osv_change(state, next, ops);
    state = std::move(next);
    out.objective.push_back(osv_objective(state.u, f, ops, cfg));
    if (out.final_rel_change <= cfg.osv_tol) {
      out.converged = true;
      break;
    }
  }
  out.u = state.u;
  return out;
}

TrajectoryRecord diagnostics(const BregmanState1D& state, const OperatorSet1D& ops,
                             const SolverConfig1D& cfg) {
  const Vector SRu = ops.SR * state.u;
  TrajectoryRecord r;
  r.step = state.k;
  r.t = state.k / cfg.lambda;
  r.sup_norm = expand(ops, state.u).cwiseAbs().maxCoeff();
  r.tv_energy = SRu.lpNorm<1>();
  r.hminus1_norm = std::sqrt(hminus1_norm_sq(state.u, ops));
  r.constraint_gap = (state.d - SRu).norm();
  return r;
}

Trajectory run_flow(const Vector& u0, const OperatorSet1D& ops, const SolverConfig1D& cfg,
                    const FlowMonitors& monitors) {
  if (cfg.mode != Mode::Flow) throw std::invalid_argument("run_flow needs mode = flow");
  const SystemFactor factor = factor_system(ops, cfg);
  return detail::run_flow_loop(
      initial_state(u0, ops), cfg.tau(), monitors,
      [&](const BregmanState1D& s) { return flow_step(s, factor, ops, cfg); },
      [&](const BregmanState1D& s) { return expand(ops, s.u); },
      [&](const BregmanState1D& s, long k, double sup) {
        TrajectoryRecord r = diagnostics(s, ops, cfg);
        r.step = k;
        r.t = k * cfg.tau();
        r.sup_norm = sup;
        return r;
      });
}

}  // namespace tvflow
