#include <tvflow/operators1d.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace tvflow {

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::ApproxJ ? "approx-J" : "exact-H";
}

std::string_view to_string(Mode mode) { return mode == Mode::OSV ? "osv" : "flow"; }

Scheme parse_scheme(std::string_view text) {
  if (text == "approx-J" || text == "J" || text == "approx") return Scheme::ApproxJ;
  if (text == "exact-H" || text == "H" || text == "exact") return Scheme::ExactH;
  throw std::invalid_argument("unknown scheme '" + std::string(text) +
                              "' (expected approx-J or exact-H)");
}

Mode parse_mode(std::string_view text) {
  if (text == "osv" || text == "OSV") return Mode::OSV;
  if (text == "flow") return Mode::Flow;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected osv or flow)");
}

Grid1D build_grid(int n) {
  if (n < 3) {
    throw std::domain_error("partition count must be at least 3, got " + std::to_string(n));
  }
  return Grid1D{n, 1.0 / n};
}

Matrix build_S(const Grid1D& grid) {
  const int n = grid.n;
  Matrix S = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) S(i, (i + n - 1) % n) = -1.0;
  return S;
}

Matrix build_R(const Grid1D& grid) {
  const int n = grid.n;
  Matrix R = Matrix::Zero(n, n - 1);
  R.topRows(n - 1).setIdentity();
  R.row(n - 1).setConstant(-1.0);
  return R;
}

Matrix build_L(const Grid1D& grid) {
  const int n = grid.n;
  Matrix L = Matrix::Constant(n - 1, n, -1.0 / n);
  for (int i = 0; i < n - 1; ++i) L(i, i) = (n - 1.0) / n;
  return L;
}

Matrix build_T(const Grid1D& grid) {
  const int n = grid.n;
  const double s3 = std::sqrt(3.0);
  const double a = (s3 + 1.0) / (2.0 * s3);
  const double b = (s3 - 1.0) / (2.0 * s3);
  Matrix T = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = a;
    T(i, (i + n - 1) % n) = b;
  }
  return T;
}

Matrix build_mass_matrix(const Grid1D& grid) {
  const int n = grid.n;
  Matrix M = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    M(i, i) = 2.0 / 3.0;
    M(i, (i + 1) % n) += 1.0 / 6.0;
    M(i, (i + n - 1) % n) += 1.0 / 6.0;
  }
  return M;
}

ReducedLaplacian assemble_A(const Matrix& S, const Matrix& R, const Matrix& L) {
  ReducedLaplacian out;
  out.A = L * (S.transpose() * S) * R;
  out.lu.compute(out.A);
  const double rcond = out.lu.rcond();
  if (!(rcond > 64.0 * std::numeric_limits<double>::epsilon())) {
    throw SolverError("reduced Laplacian factorization failed (rcond = " +
                      std::to_string(rcond) + ")");
  }
  return out;
}

Matrix build_K(const Matrix& SR, const ReducedLaplacian& laplacian, const Matrix& T,
               Scheme scheme) {
  // K^T = A^{-T} (S R)^T
  const Matrix rhs = SR.transpose();
  const Matrix Jt = laplacian.lu.transpose().solve(rhs);
  Matrix J = Jt.transpose();
  if (scheme == Scheme::ExactH) return T * J;
  return J;
}

OperatorSet1D build_operators(const Grid1D& grid, Scheme scheme) {
  OperatorSet1D ops;
  ops.grid = grid;
  ops.scheme = scheme;
  ops.S = build_S(grid);
  ops.R = build_R(grid);
  ops.L = build_L(grid);
  ops.T = build_T(grid);
  ops.SR = ops.S * ops.R;
  ops.laplacian = assemble_A(ops.S, ops.R, ops.L);
  ops.K = build_K(ops.SR, ops.laplacian, ops.T, scheme);
  return ops;
}

Vector expand(const OperatorSet1D& ops, const Vector& reduced) {
  const int n = ops.n();
  Vector full(n);
  full.head(n - 1) = reduced;
  full(n - 1) = -reduced.sum();
  return full;
}

Vector reduce(const OperatorSet1D& ops, const Vector& full) { return ops.L * full; }

double hminus1_norm_sq(const Vector& v, const OperatorSet1D& ops) {
  const double h = ops.h();
  return h * h * h * (ops.K * v).squaredNorm();
}

double tv_energy(const Vector& u, const OperatorSet1D& ops) {
  return (ops.SR * u).lpNorm<1>();
}

double spohn_energy_of_jumps(const Vector& d, double beta) {
  const Eigen::ArrayXd a = d.array().abs();
  return beta * a.sum() + (a * a * a).sum() / 3.0;
}

double spohn_energy(const Vector& u, double beta, const OperatorSet1D& ops) {
  if (!(beta > 0.0)) throw std::domain_error("facet weight beta must be positive");
  return spohn_energy_of_jumps(ops.SR * u, beta);
}

}  // namespace tvflow
