#ifndef TVFLOW_SOLVER1D_HPP
#define TVFLOW_SOLVER1D_HPP

#include <vector>

#include <tvflow/operators1d.hpp>
#include <tvflow/trajectory.hpp>

namespace tvflow {

/// Energy whose H^{-1}_av gradient flow (or OSV problem) is solved.
enum class Energy { TV, Spohn };

/// Parameters of the split Bregman iteration
///
///   u^{k+1} = argmin  lambda h^3/2 |K(u - f)|^2 + mu h/2 |d^k - S R u - alpha^k|^2
///   d^{k+1} = shrink(S R u^{k+1} + alpha^k, 1/(mu h))     (componentwise)
///   alpha^{k+1} = alpha^k - d^{k+1} + S R u^{k+1}
///
/// In flow mode f is the previous iterate and tau = 1/lambda.
struct SolverConfig1D {
  double lambda = 1.0;
  double mu = 1.0;
  Energy energy = Energy::TV;
  double beta = 0.0;  // facet weight, Spohn only
  Scheme scheme = Scheme::ApproxJ;
  Mode mode = Mode::Flow;
  double osv_tol = 1e-10;
  long max_sweeps = 100'000;

  /// lambda = c_lambda h^{-3}, mu = c_mu h^{-1}.
  static SolverConfig1D scaled(const Grid1D& grid, double c_lambda, double c_mu,
                               Scheme scheme = Scheme::ApproxJ, Mode mode = Mode::Flow);

  double tau() const { return 1.0 / lambda; }

  /// Throws std::domain_error on non-positive weights or a missing beta.
  void validate() const;
};

struct BregmanState1D {
  Vector u;      // reduced, n - 1
  Vector d;      // n
  Vector alpha;  // n
  long k = 0;
};

/// alpha = 0, d = S R u0.
BregmanState1D initial_state(const Vector& u0, const OperatorSet1D& ops);

/// Cholesky factorization of G = lambda h^3 K^T K + mu h (S R)^T S R on the
/// reduced space. Immutable; reusable for every sweep at fixed parameters.
struct SystemFactor {
  Matrix G;
  Matrix fidelity;  // lambda h^3 K^T K
  Eigen::LLT<Matrix> llt;
  double lambda = 0.0;
  double mu = 0.0;

  Vector solve(const Vector& rhs) const { return llt.solve(rhs); }
};

SystemFactor factor_system(const OperatorSet1D& ops, const SolverConfig1D& cfg);

/// Right-hand side lambda h^3 K^T K f + mu h (S R)^T (d - alpha).
Vector u_rhs(const BregmanState1D& state, const Vector& f, const SystemFactor& factor,
             const OperatorSet1D& ops);

Vector u_update(const BregmanState1D& state, const Vector& f, const SystemFactor& factor,
                const OperatorSet1D& ops);

/// Shrinks rho = S R u + alpha componentwise with a = 1/(mu h). Expects
/// state.u to hold u^{k+1} and state.alpha to hold alpha^k.
Vector d_update(const BregmanState1D& state, const OperatorSet1D& ops, const SolverConfig1D& cfg);

/// alpha - d + S R u, with state already holding u^{k+1} and d^{k+1}.
Vector alpha_update(const BregmanState1D& state, const OperatorSet1D& ops);

/// One u, d, alpha update in that order.
BregmanState1D sweep(const BregmanState1D& state, const Vector& f, const SystemFactor& factor,
                     const OperatorSet1D& ops, const SolverConfig1D& cfg);

/// One backward Euler step: a single sweep with f = state.u. d and alpha carry over.
BregmanState1D flow_step(const BregmanState1D& state, const SystemFactor& factor,
                         const OperatorSet1D& ops, const SolverConfig1D& cfg);

/// |S R u|_1 + lambda h^3/2 |K(u - f)|^2, with the Spohn energy in place of
/// the total variation when cfg.energy is Spohn.
double osv_objective(const Vector& u, const Vector& f, const OperatorSet1D& ops,
                     const SolverConfig1D& cfg);

struct OsvResult {
  Vector u;
  std::vector<double> objective;  // per sweep, starting with the initial guess
  long sweeps = 0;
  double final_rel_change = 0.0;
  bool converged = false;
};

/// Stopping measure of the fixed-data iteration: the larger of
/// |u^{k+1} - u^k| and |d^{k+1} - S R u^{k+1}|, both divided by max(|u^k|, h).
double osv_change(const BregmanState1D& prev, const BregmanState1D& next,
                  const OperatorSet1D& ops);

/// Sweeps with fixed data f from u^0 = f until osv_change <= osv_tol or
/// max_sweeps is reached.
OsvResult solve_osv(const Vector& f, const OperatorSet1D& ops, const SolverConfig1D& cfg);

/// Model energy of the reduced iterate (TV or Spohn).
double model_energy(const Vector& u, const OperatorSet1D& ops, const SolverConfig1D& cfg);

TrajectoryRecord diagnostics(const BregmanState1D& state, const OperatorSet1D& ops,
                             const SolverConfig1D& cfg);

/// Repeats flow_step until the sup-norm of the reconstructed field drops
/// below monitors.stop_supnorm or monitors.max_steps is exhausted.
Trajectory run_flow(const Vector& u0, const OperatorSet1D& ops, const SolverConfig1D& cfg,
                    const FlowMonitors& monitors);

}  // namespace tvflow

#endif  // TVFLOW_SOLVER1D_HPP
