#ifndef TVFLOW_OPERATORS1D_HPP
#define TVFLOW_OPERATORS1D_HPP

#include <tvflow/types.hpp>

namespace tvflow {

/// Uniform periodic partition of the unit torus into n cells of width h = 1/n.
struct Grid1D {
  int n = 0;
  double h = 0.0;
};

/// Throws std::domain_error for n < 3.
Grid1D build_grid(int n);

/// Cyclic backward difference, S = h * grad_h: (S v)_i = v_i - v_{i-1}.
Matrix build_S(const Grid1D& grid);

/// Zero-mean reconstruction R (n x n-1): identity on top, last row all -1.
Matrix build_R(const Grid1D& grid);

/// Left inverse of R (n-1 x n): (1/n)(n-1 on the diagonal, -1 elsewhere).
Matrix build_L(const Grid1D& grid);

/// Cyclic lower-bidiagonal factor of the hat-function mass matrix,
/// T^T T = M with M = circ(2/3, 1/6, 0, ..., 0, 1/6).
Matrix build_T(const Grid1D& grid);

/// Mass matrix of the periodic hat functions, scaled by 1/h.
Matrix build_mass_matrix(const Grid1D& grid);

/// The reduced discrete Laplacian A = L S^T S R together with its LU
/// factorization. A is not symmetric; det A = n^2.
struct ReducedLaplacian {
  Matrix A;
  Eigen::PartialPivLU<Matrix> lu;

  double determinant() const { return lu.determinant(); }
  Vector solve(const Vector& rhs) const { return lu.solve(rhs); }
};

ReducedLaplacian assemble_A(const Matrix& S, const Matrix& R, const Matrix& L);

/// Fidelity matrix K (n x n-1). ApproxJ: K = S R A^{-1}; ExactH: K = T S R A^{-1}.
/// Built from transposed solves against the columns of (S R)^T; A^{-1} is never formed.
Matrix build_K(const Matrix& SR, const ReducedLaplacian& laplacian, const Matrix& T,
               Scheme scheme);

/// Every matrix needed by the 1D solvers for one grid and one fidelity scheme.
/// Immutable after construction and safe to share between threads.
struct OperatorSet1D {
  Grid1D grid;
  Scheme scheme = Scheme::ApproxJ;
  Matrix S;
  Matrix R;
  Matrix L;
  Matrix T;
  Matrix SR;  // S R, the gradient acting on reduced coordinates
  ReducedLaplacian laplacian;
  Matrix K;

  int n() const { return grid.n; }
  double h() const { return grid.h; }
};

OperatorSet1D build_operators(const Grid1D& grid, Scheme scheme);

/// Reduced (n-1) -> full zero-mean (n) coordinates.
Vector expand(const OperatorSet1D& ops, const Vector& reduced);

/// Full (n) -> reduced (n-1) coordinates through L. Any constant offset of
/// the full vector is discarded.
Vector reduce(const OperatorSet1D& ops, const Vector& full);

/// h^3 ||K v||^2. With ExactH this equals the squared H^{-1}_av norm of the
/// piecewise-constant function v_h.
double hminus1_norm_sq(const Vector& v, const OperatorSet1D& ops);

/// ||S R u||_1, the total variation of the piecewise-constant u_h.
double tv_energy(const Vector& u, const OperatorSet1D& ops);

/// beta ||d||_1 + ||d||_3^3 / 3 for the jump vector d.
double spohn_energy_of_jumps(const Vector& d, double beta);

/// Spohn energy with d = S R u. Throws std::domain_error for beta <= 0.
double spohn_energy(const Vector& u, double beta, const OperatorSet1D& ops);

}  // namespace tvflow

#endif  // TVFLOW_OPERATORS1D_HPP
