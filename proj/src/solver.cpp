#include "rkhsm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace rkhsm {

std::string to_string(GridScheme scheme) {
  return scheme == GridScheme::uniform ? "uniform" : "chebyshev";
}

GridScheme grid_scheme_from_string(const std::string& name) {
  if (name == "uniform") return GridScheme::uniform;
  if (name == "chebyshev") return GridScheme::chebyshev;
  throw std::invalid_argument("unknown grid scheme '" + name + "' (expected uniform or chebyshev)");
}

namespace {

void check_points(const std::vector<double>& points) {
  if (points.empty()) throw std::invalid_argument("collocation grid is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0 && points[i] <= 1.0)) throw std::invalid_argument("collocation point outside (0,1]");
    if (i > 0 && !(points[i] > points[i - 1])) throw std::invalid_argument("collocation points must be strictly increasing");
  }
}

}  // namespace

CollocationGrid CollocationGrid::make(int n, GridScheme scheme) {
  if (n < 4) throw std::invalid_argument("collocation grid needs n >= 4, got " + std::to_string(n));
  CollocationGrid grid;
  grid.scheme = scheme;
  grid.points.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    grid.points[i - 1] = scheme == GridScheme::uniform
                             ? static_cast<double>(i) / n
                             : 0.5 * (1.0 - std::cos(i * std::numbers::pi / n));
  }
  grid.points.back() = 1.0;
  return grid;
}

void CollocationGrid::validate() const {
  if (points.size() < 4) throw std::invalid_argument("collocation grid needs n >= 4, got " + std::to_string(points.size()));
  check_points(points);
}

double BasisSet::orthonormality_defect() const {
  const Eigen::MatrixXd q = beta * gram * beta.transpose();
  return (q - Eigen::MatrixXd::Identity(q.rows(), q.cols())).cwiseAbs().maxCoeff();
}

const BivariateKernel& w25_kernel() {
  static const BivariateKernel kernel = derive_kernel(SpaceSpec::w25());
  return kernel;
}

BasisSet build_basis(const ProblemParams& params, const CollocationGrid& grid, const BivariateKernel& kernel) {
  if (kernel.spec().order != 5) throw std::invalid_argument("build_basis needs the W2^5 kernel");
  params.validate();
  // Smaller point sets are allowed here so single Psi functions can be inspected.
  check_points(grid.points);
  BasisSet basis;
  basis.psi.reserve(grid.points.size());
  for (double xi : grid.points) {
    const DerivativeJet g = homogenizer(xi);
    // L in the first kernel slot, evaluated at eta = x_i.
    PiecewisePoly psi = kernel.slice(xi, 4);
    psi = psi.plus_scaled(params.re * g[0], kernel.slice(xi, 3));
    psi = psi.plus_scaled(-params.m_squared(), kernel.slice(xi, 2));
    psi = psi.plus_scaled(params.re * g[3], kernel.slice(xi, 0));
    basis.psi.push_back(std::move(psi));
  }
  return basis;
}

Eigen::MatrixXd pointwise_gram(const BasisSet& basis, const ProblemParams& params, const CollocationGrid& grid) {
  const int n = grid.size();
  Eigen::MatrixXd g(n, n);
  for (int j = 0; j < n; ++j) {
    const PiecewisePoly& psi = basis.psi[j];
    for (int i = 0; i < n; ++i) {
      const double x = grid.points[i];
      DerivativeJet jet{x, {}};
      for (int k = 0; k <= 4; ++k) jet.values[k] = psi.evaluate(x, k);
      g(i, j) = operator_L(params, jet);
    }
  }
  return g;
}

void gram_and_orthonormalize(BasisSet& basis, const ProblemParams& params, const CollocationGrid& grid) {
  if (basis.psi.empty()) throw std::invalid_argument("gram_and_orthonormalize: empty basis");
  const Eigen::MatrixXd raw = pointwise_gram(basis, params, grid);
  basis.gram = 0.5 * (raw + raw.transpose());
  const int n = static_cast<int>(basis.gram.rows());

  if (Eigen::LLT<Eigen::MatrixXd>(basis.gram).info() != Eigen::Success) {
    throw GramError("Gram table is not positive definite at n = " + std::to_string(n) +
                    "; reduce the number of collocation points");
  }

  basis.beta = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd g_beta(n, n);  // column k holds G q_k
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < i; ++k) {
        const double r = v.dot(g_beta.col(k));
        v -= r * basis.beta.row(k).transpose();
      }
    }
    const Eigen::VectorXd gv = basis.gram * v;
    const double norm2 = v.dot(gv);
    if (!(norm2 > 0.0)) {
      throw GramError("Gram-Schmidt breakdown at basis function " + std::to_string(i) +
                      "; the grid is too dense for binary64");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    basis.beta.row(i) = inv * v.transpose();
    g_beta.col(i) = inv * gv;
  }
}

double RkhsmSolution::u(double x, int deriv) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < basis.psi.size(); ++k) acc += combined_coeffs(static_cast<Eigen::Index>(k)) * basis.psi[k].evaluate(x, deriv);
  return acc;
}

DerivativeJet RkhsmSolution::jet(double x) const {
  const DerivativeJet g = homogenizer(x);
  DerivativeJet out{x, {}};
  for (int k = 0; k <= 4; ++k) out.values[k] = u(x, k) + g[k];
  return out;
}

RkhsmSolution solve(const ProblemParams& params, const CollocationGrid& grid, const SolveOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
  if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (!(opts.relaxation > 0.0 && opts.relaxation <= 1.0)) throw std::invalid_argument("relaxation must lie in (0,1]");
  grid.validate();

  RkhsmSolution sol;
  sol.params = params;
  sol.grid = grid;
  sol.basis = build_basis(params, grid);
  gram_and_orthonormalize(sol.basis, params, grid);

  const int n = grid.size();
  const Eigen::MatrixXd& beta = sol.basis.beta;
  // Grid values of the orthonormal functions psibar_i; iterating on their amplitudes avoids the
  // cancellation carried by the raw Psi coefficients.
  Eigen::MatrixXd values(n, n);
  Eigen::MatrixXd thirds(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      values(i, k) = sol.basis.psi[k].evaluate(grid.points[i], 0);
      thirds(i, k) = sol.basis.psi[k].evaluate(grid.points[i], 3);
    }
  }
  const Eigen::MatrixXd bar_values = values * beta.transpose();
  const Eigen::MatrixXd bar_thirds = thirds * beta.transpose();

  Eigen::VectorXd amplitudes = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd u_grid = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd u3_grid = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd rhs(n);
  double relaxation = opts.relaxation;
  bool halved = false;
  int growth_streak = 0;
  double previous_norm = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    for (int k = 0; k < n; ++k) rhs(k) = rhs_M(params, grid.points[k], u_grid(k), u3_grid(k));
    // A_i = sum_{k<=i} beta_ik M_k
    const Eigen::VectorXd candidate = beta.triangularView<Eigen::Lower>() * rhs;
    const Eigen::VectorXd next = (1.0 - relaxation) * amplitudes + relaxation * candidate;
    const Eigen::VectorXd next_u = bar_values * next;
    const double update = (next_u - u_grid).cwiseAbs().maxCoeff();

    amplitudes = next;
    u_grid = next_u;
    u3_grid = bar_thirds * next;
    sol.iterations = iter;
    sol.final_update_norm = update;

    if (!std::isfinite(update)) {
      sol.diagnostic = "non-finite update at iteration " + std::to_string(iter);
      break;
    }
    if (update <= opts.tol) {
      sol.converged = true;
      break;
    }
    growth_streak = update > previous_norm ? growth_streak + 1 : 0;
    previous_norm = update;
    if (growth_streak >= 3) {
      if (halved) {
        sol.diagnostic = "update norm grew for 3 consecutive iterations after halving relaxation";
        break;
      }
      halved = true;
      relaxation *= 0.5;
      growth_streak = 0;
    }
  }
  if (!sol.converged && sol.diagnostic.empty()) {
    std::ostringstream msg;
    msg << "no convergence after " << sol.iterations << " iterations; last update " << sol.final_update_norm;
    sol.diagnostic = msg.str();
  }
  sol.relaxation_used = relaxation;
  sol.combined_coeffs = beta.transpose() * amplitudes;
  return sol;
}

double eval_solution(const RkhsmSolution& sol, double x, int deriv) {
  if (deriv < 0 || deriv > 3) throw std::invalid_argument("eval_solution supports derivatives 0..3");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("eval_solution: x outside [0,1]");
  return sol.u(x, deriv) + homogenizer(x)[deriv];
}

double residual_norm(const RkhsmSolution& sol, int sample_count) {
  if (sample_count < 16) throw std::invalid_argument("residual_norm needs at least 16 samples");
  double worst = 0.0;
  for (int j = 0; j < sample_count; ++j) {
    const double x = (j + 0.5) / sample_count;
    worst = std::max(worst, std::abs(bvp_residual(sol.params, sol.jet(x))));
  }
  return worst;
}

double collocation_defect(const RkhsmSolution& sol) {
  double worst = 0.0;
  for (double x : sol.grid.points) {
    DerivativeJet jet{x, {}};
    for (int k = 0; k <= 4; ++k) jet.values[k] = sol.u(x, k);
    const double lhs = operator_L(sol.params, jet);
    worst = std::max(worst, std::abs(lhs - rhs_M(sol.params, x, jet[0], jet[3])));
  }
  return worst;
}

}  // namespace rkhsm
