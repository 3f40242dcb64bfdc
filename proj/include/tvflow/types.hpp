#ifndef TVFLOW_TYPES_HPP
#define TVFLOW_TYPES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace tvflow {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// How the H^{-1}_av fidelity of a piecewise-constant function is evaluated.
///
/// ApproxJ replaces the inverse Laplacian and gradient by their discrete
/// counterparts, K = J = S R A^{-1}. ExactH integrates the quadratic B-spline
/// preimage exactly, K = H = T J.
enum class Scheme { ApproxJ, ExactH };

/// Solver mode: OSV iterates sweeps against fixed data, Flow takes one sweep
/// per backward Euler step with the data set to the current iterate.
enum class Mode { OSV, Flow };

std::string_view to_string(Scheme scheme);
std::string_view to_string(Mode mode);
Scheme parse_scheme(std::string_view text);
Mode parse_mode(std::string_view text);

/// Raised when a factorization or linear solve fails. Signals an assembly
/// bug: every system assembled here is nonsingular by construction.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tvflow

#endif  // TVFLOW_TYPES_HPP
