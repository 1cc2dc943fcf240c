#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rkhsm/kernel.hpp"
#include "rkhsm/polynomial.hpp"
#include "rkhsm/problem.hpp"

namespace rkhsm {

class GramError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class GridScheme { uniform, chebyshev };

std::string to_string(GridScheme scheme);
GridScheme grid_scheme_from_string(const std::string& name);

/// Collocation points x_1 < ... < x_n in (0, 1].
struct CollocationGrid {
  std::vector<double> points;
  GridScheme scheme = GridScheme::uniform;

  /// uniform: x_i = i/n. chebyshev: x_i = (1 - cos(i pi / n)) / 2.
  static CollocationGrid make(int n, GridScheme scheme = GridScheme::uniform);
  [[nodiscard]] int size() const { return static_cast<int>(points.size()); }
  void validate() const;
};

/// Psi_i(x) = (L_eta K(eta, x))(x_i), their Gram table and the Gram-Schmidt coefficients beta with
/// psibar_i = sum_{k<=i} beta(i, k) Psi_k orthonormal.
struct BasisSet {
  std::vector<PiecewisePoly> psi;
  Eigen::MatrixXd gram;
  Eigen::MatrixXd beta;

  /// max |(beta G beta^T)_ij - delta_ij|.
  [[nodiscard]] double orthonormality_defect() const;
};

/// The W_2^5 kernel, derived once per process.
const BivariateKernel& w25_kernel();

BasisSet build_basis(const ProblemParams& params, const CollocationGrid& grid,
                     const BivariateKernel& kernel = w25_kernel());

/// Raw table (L Psi_j)(x_i) without symmetrisation.
Eigen::MatrixXd pointwise_gram(const BasisSet& basis, const ProblemParams& params, const CollocationGrid& grid);

/// Fills gram (symmetrised pointwise table) and beta (modified Gram-Schmidt in the Gram inner
/// product, one reorthogonalisation pass). Throws GramError if the table is not positive definite.
void gram_and_orthonormalize(BasisSet& basis, const ProblemParams& params, const CollocationGrid& grid);

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 50;
  double relaxation = 1.0;
};

struct RkhsmSolution {
  ProblemParams params;
  CollocationGrid grid;
  BasisSet basis;
  /// u_n(x) = sum_k combined_coeffs[k] Psi_k(x).
  Eigen::VectorXd combined_coeffs;
  int iterations = 0;
  bool converged = false;
  double final_update_norm = 0.0;
  double relaxation_used = 1.0;
  std::string diagnostic;

  /// u_n^(deriv)(x), deriv = 0..4.
  [[nodiscard]] double u(double x, int deriv = 0) const;
  /// Jet of F = u_n + g through the fourth derivative.
  [[nodiscard]] DerivativeJet jet(double x) const;
};

/// Damped fixed-point iteration on the truncated series: with u^(0) = 0, evaluate M on the grid,
/// project through beta, relax, and stop once the grid sup-norm of the update is <= tol.
RkhsmSolution solve(const ProblemParams& params, const CollocationGrid& grid, const SolveOptions& opts = {});

/// F^(deriv)(x) = u_n^(deriv)(x) + g^(deriv)(x), deriv = 0..3.
double eval_solution(const RkhsmSolution& sol, double x, int deriv = 0);

/// max over `sample_count` cell midpoints of |F'''' - m^2 F'' + re F F'''|.
double residual_norm(const RkhsmSolution& sol, int sample_count = 64);

/// max_k |(L u_n)(x_k) - M(x_k, u_n(x_k), u_n'''(x_k))| over the grid.
double collocation_defect(const RkhsmSolution& sol);

}  // namespace rkhsm
