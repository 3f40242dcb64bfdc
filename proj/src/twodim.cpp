#include <tvflow/twodim.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <tvflow/detail/flow_loop.hpp>
#include <tvflow/shrinkage.hpp>

namespace tvflow {

namespace {

using Triplet = Eigen::Triplet<double>;

// Appends -(column m-1) to every other column: D R for R = [I; -1^T].
SparseMatrix times_R(const SparseMatrix& D) {
  const Eigen::Index m = D.cols();
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(D.nonZeros()) * 2);
  Vector last = Vector::Zero(D.rows());
  for (Eigen::Index j = 0; j < m; ++j) {
    for (SparseMatrix::InnerIterator it(D, j); it; ++it) {
      if (j == m - 1) {
        last(it.row()) += it.value();
      } else {
        entries.emplace_back(it.row(), j, it.value());
      }
    }
  }
  for (Eigen::Index i = 0; i < D.rows(); ++i) {
    if (last(i) == 0.0) continue;
    for (Eigen::Index j = 0; j + 1 < m; ++j) entries.emplace_back(i, j, -last(i));
  }
  SparseMatrix out(D.rows(), m - 1);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

SparseMatrix cyclic_difference(const Grid2D& grid, bool along_x) {
  const int cells = grid.cells();
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(cells) * 2);
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const int row = grid.index(ix, iy);
      const int prev = along_x ? grid.index((ix + grid.nx - 1) % grid.nx, iy)
                               : grid.index(ix, (iy + grid.ny - 1) % grid.ny);
      entries.emplace_back(row, row, 1.0);
      entries.emplace_back(row, prev, -1.0);
    }
  }
  SparseMatrix D(cells, cells);
  D.setFromTriplets(entries.begin(), entries.end());
  return D;
}

}  // namespace

Grid2D build_grid2d(int nx, int ny) {
  if (nx < 3 || ny < 3) {
    throw std::domain_error("2D grid needs nx, ny >= 3, got " + std::to_string(nx) + "x" +
                            std::to_string(ny));
  }
  return Grid2D{nx, ny, 1.0 / nx, 1.0 / ny};
}

SparseMatrix difference_x(const Grid2D& grid) {
  return cyclic_difference(grid, true);
}

SparseMatrix difference_y(const Grid2D& grid) {
  return cyclic_difference(grid, false);
}

OperatorSet2D build_ops2d(const Grid2D& grid, Scheme scheme) {
  if (scheme != Scheme::ApproxJ) {
    throw std::invalid_argument("only the approx-J scheme is available in 2D");
  }
  const int m = grid.cells();
  OperatorSet2D ops;
  ops.grid = grid;
  const SparseMatrix Dx = difference_x(grid);
  const SparseMatrix Dy = difference_y(grid);
  ops.Bx = times_R(Dx);
  ops.By = times_R(Dy);

  // L2 (grad_x^T grad_x + grad_y^T grad_y) R, with L2 Y = Y_top - (1/m) 1 colsum(Y).
  const SparseMatrix P = SparseMatrix(Dx.transpose() * Dx) / (grid.hx * grid.hx) +
                         SparseMatrix(Dy.transpose() * Dy) / (grid.hy * grid.hy);
  const Matrix PR = Matrix(times_R(P));
  const Eigen::RowVectorXd colsum = PR.colwise().sum();
  ops.A = PR.topRows(m - 1) - Vector::Ones(m - 1) * (colsum / m);
  ops.A_lu.compute(ops.A);
  const double rcond = ops.A_lu.rcond();
  if (!(rcond > 64.0 * std::numeric_limits<double>::epsilon())) {
    throw SolverError("2D reduced Laplacian is numerically singular (rcond " +
                      std::to_string(rcond) + ")");
  }

  // K_x^T = A^{-T} (grad_x R)^T; A^{-1} is never formed.
  const Matrix BxT = Matrix(ops.Bx.transpose()) / grid.hx;
  const Matrix ByT = Matrix(ops.By.transpose()) / grid.hy;
  const Matrix KxT = ops.A_lu.transpose().solve(BxT);
  const Matrix KyT = ops.A_lu.transpose().solve(ByT);
  ops.Kx = KxT.transpose();
  ops.Ky = KyT.transpose();
  return ops;
}

Vector expand2d(const OperatorSet2D& ops, const Vector& reduced) {
  const int m = ops.cells();
  if (reduced.size() != m - 1) throw std::invalid_argument("reduced vector has the wrong length");
  Vector full(m);
  full.head(m - 1) = reduced;
  full(m - 1) = -reduced.sum();
  return full;
}

Vector reduce2d(const OperatorSet2D& ops, const Vector& full) {
  const int m = ops.cells();
  if (full.size() != m) throw std::invalid_argument("full vector has the wrong length");
  return full.head(m - 1).array() - full.sum() / m;
}

std::string_view to_string(Model2D model) {
  switch (model) {
    case Model2D::Isotropic: return "iso";
    case Model2D::Anisotropic: return "aniso";
    case Model2D::Spohn: return "spohn";
  }
  return "?";
}

Model2D parse_model2d(std::string_view text) {
  if (text == "iso" || text == "isotropic" || text == "tv-iso") return Model2D::Isotropic;
  if (text == "aniso" || text == "anisotropic" || text == "tv-aniso") return Model2D::Anisotropic;
  if (text == "spohn") return Model2D::Spohn;
  throw std::invalid_argument("unknown 2D model '" + std::string(text) +
                              "' (expected iso, aniso or spohn)");
}

SolverConfig2D SolverConfig2D::scaled(const Grid2D& grid, double c_lambda, double c_mu,
                                      Model2D model) {
  const double h2 = grid.hx * grid.hy;
  SolverConfig2D cfg;
  cfg.lambda = c_lambda / (h2 * h2);
  cfg.mu = c_mu / h2;
  cfg.model = model;
  return cfg;
}

void SolverConfig2D::validate() const {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (!(mu > 0.0)) throw std::domain_error("mu must be positive");
  if (model == Model2D::Spohn && !(beta > 0.0)) {
    throw std::domain_error("Spohn model needs a positive facet weight beta");
  }
}

BregmanState2D initial_state2d(const Vector& u0, const OperatorSet2D& ops) {
  if (u0.size() != ops.cells() - 1) {
    throw std::invalid_argument("initial data has " + std::to_string(u0.size()) +
                                " reduced entries, expected " + std::to_string(ops.cells() - 1));
  }
  BregmanState2D s;
  s.u = u0;
  s.dx = ops.Bx * u0;
  s.dy = ops.By * u0;
  s.ax = Vector::Zero(ops.cells());
  s.ay = Vector::Zero(ops.cells());
  return s;
}

SystemFactor2D factor_system2d(const OperatorSet2D& ops, const SolverConfig2D& cfg) {
  cfg.validate();
  const double area = ops.grid.hx * ops.grid.hy;
  SystemFactor2D f;
  f.mu_cell = cfg.mu * area;
  f.fidelity = (cfg.lambda * area) * (ops.Kx.transpose() * ops.Kx);
  f.fidelity.noalias() += (cfg.lambda * area) * (ops.Ky.transpose() * ops.Ky);
  const SparseMatrix BtB = SparseMatrix(ops.Bx.transpose() * ops.Bx) +
                           SparseMatrix(ops.By.transpose() * ops.By);
  f.G = f.fidelity + f.mu_cell * Matrix(BtB);
  f.llt.compute(f.G);
  if (f.llt.info() != Eigen::Success) {
    throw SolverError("2D system matrix is not positive definite");
  }
  return f;
}

Vector u_rhs2d(const BregmanState2D& state, const Vector& f, const SystemFactor2D& factor,
               const OperatorSet2D& ops) {
  Vector rhs = factor.fidelity * f;
  rhs += factor.mu_cell * (ops.Bx.transpose() * (state.dx - state.ax));
  rhs += factor.mu_cell * (ops.By.transpose() * (state.dy - state.ay));
  return rhs;
}

Vector u_update2d(const BregmanState2D& state, const Vector& f, const SystemFactor2D& factor,
                  const OperatorSet2D& ops) {
  return factor.solve(u_rhs2d(state, f, factor, ops));
}

VectorPair shrink_arguments(const BregmanState2D& state, const OperatorSet2D& ops) {
  return {ops.Bx * state.u + state.ax, ops.By * state.u + state.ay};
}

namespace {

template <class Kernel>
VectorPair cellwise(const BregmanState2D& state, const OperatorSet2D& ops, Kernel kernel) {
  const auto [sx, sy] = shrink_arguments(state, ops);
  Vector dx(sx.size());
  Vector dy(sy.size());
  for (Eigen::Index i = 0; i < sx.size(); ++i) {
    const auto [a, b] = kernel(sx(i), sy(i));
    dx(i) = a;
    dy(i) = b;
  }
  return {std::move(dx), std::move(dy)};
}

}  // namespace

VectorPair d_update_iso(const BregmanState2D& state, const OperatorSet2D& ops,
                        const SolverConfig2D& cfg) {
  const double mu_cell = cfg.mu_cell(ops.grid);
  return cellwise(state, ops, [&](double sx, double sy) { return shrink_iso2d(sx, sy, mu_cell); });
}

VectorPair d_update_aniso(const BregmanState2D& state, const OperatorSet2D& ops,
                          const SolverConfig2D& cfg) {
  const double a = 1.0 / cfg.mu_cell(ops.grid);
  return cellwise(state, ops, [&](double sx, double sy) {
    return std::pair{shrink_tv(sx, a), shrink_tv(sy, a)};
  });
}

VectorPair d_update_spohn2d(const BregmanState2D& state, const OperatorSet2D& ops,
                            const SolverConfig2D& cfg) {
  const double mu_cell = cfg.mu_cell(ops.grid);
  return cellwise(state, ops, [&](double sx, double sy) {
    return shrink_spohn2d(sx, sy, mu_cell, cfg.beta);
  });
}

BregmanState2D sweep2d(const BregmanState2D& state, const Vector& f,
                       const SystemFactor2D& factor, const OperatorSet2D& ops,
                       const SolverConfig2D& cfg) {
  BregmanState2D next = state;
  next.u = u_update2d(state, f, factor, ops);
  VectorPair d;
  switch (cfg.model) {
    case Model2D::Isotropic: d = d_update_iso(next, ops, cfg); break;
    case Model2D::Anisotropic: d = d_update_aniso(next, ops, cfg); break;
    case Model2D::Spohn: d = d_update_spohn2d(next, ops, cfg); break;
  }
  next.dx = std::move(d.first);
  next.dy = std::move(d.second);
  next.ax = state.ax - next.dx + ops.Bx * next.u;
  next.ay = state.ay - next.dy + ops.By * next.u;
  next.k = state.k + 1;
  return next;
}

BregmanState2D flow_step2d(const BregmanState2D& state, const SystemFactor2D& factor,
                           const OperatorSet2D& ops, const SolverConfig2D& cfg) {
  return sweep2d(state, state.u, factor, ops, cfg);
}

double tv_iso2d(const Vector& u, const OperatorSet2D& ops) {
  const Vector dx = ops.Bx * u;
  const Vector dy = ops.By * u;
  double total = 0.0;
  for (Eigen::Index i = 0; i < dx.size(); ++i) total += std::hypot(dx(i), dy(i));
  return total;
}

double tv_aniso2d(const Vector& u, const OperatorSet2D& ops) {
  return (ops.Bx * u).lpNorm<1>() + (ops.By * u).lpNorm<1>();
}

double spohn_energy2d(const Vector& u, double beta, const OperatorSet2D& ops) {
  if (!(beta > 0.0)) throw std::domain_error("Spohn energy needs beta > 0");
  const Vector dx = ops.Bx * u;
  const Vector dy = ops.By * u;
  double total = 0.0;
  for (Eigen::Index i = 0; i < dx.size(); ++i) {
    const double r = std::hypot(dx(i), dy(i));
    total += beta * r + r * r * r / 3.0;
  }
  return total;
}

double hminus1_norm_sq2d(const Vector& v, const OperatorSet2D& ops) {
  return ops.grid.hx * ops.grid.hy * ((ops.Kx * v).squaredNorm() + (ops.Ky * v).squaredNorm());
}

double iso_d_objective(const Vector& dx, const Vector& dy, const Vector& sx, const Vector& sy,
                       double mu_cell) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < dx.size(); ++i) total += std::hypot(dx(i), dy(i));
  return total + 0.5 * mu_cell * ((dx - sx).squaredNorm() + (dy - sy).squaredNorm());
}

Trajectory run_flow2d(const Vector& u0, const OperatorSet2D& ops, const SolverConfig2D& cfg,
                      const FlowMonitors& monitors) {
  if (cfg.mode != Mode::Flow) throw std::invalid_argument("run_flow2d needs mode = flow");
  const SystemFactor2D factor = factor_system2d(ops, cfg);
  return detail::run_flow_loop(
      initial_state2d(u0, ops), cfg.tau(), monitors,
      [&](const BregmanState2D& s) { return flow_step2d(s, factor, ops, cfg); },
      [&](const BregmanState2D& s) { return expand2d(ops, s.u); },
      [&](const BregmanState2D& s, long k, double sup) {
        TrajectoryRecord r;
        r.step = k;
        r.t = k * cfg.tau();
        r.sup_norm = sup;
        r.tv_energy = cfg.model == Model2D::Anisotropic ? tv_aniso2d(s.u, ops) : tv_iso2d(s.u, ops);
        r.hminus1_norm = std::sqrt(hminus1_norm_sq2d(s.u, ops));
        const Vector gx = s.dx - ops.Bx * s.u;
        const Vector gy = s.dy - ops.By * s.u;
        r.constraint_gap = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
        return r;
      });
}

}  // namespace tvflow
