#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rkhsm/polynomial.hpp"

namespace rkhsm {

class KernelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A homogeneous boundary condition u^(derivative)(endpoint) = 0, endpoint 0 or 1.
struct BoundaryConstraint {
  int derivative = 0;
  int endpoint = 0;
  friend bool operator==(const BoundaryConstraint&, const BoundaryConstraint&) = default;
};

/// The Sobolev-type space W_2^order[0,1] with inner product
/// sum_{i<order} u^(i)(0) v^(i)(0) + int_0^1 u^(order) v^(order), restricted by `constraints`.
struct SpaceSpec {
  int order = 5;
  std::vector<BoundaryConstraint> constraints;

  /// W_2^5 with u(0) = u(1) = u'(1) = u''(0) = 0; the solution space for the homogenized BVP.
  static SpaceSpec w25();
  /// Unconstrained W_2^4; the range space of the differential operator.
  static SpaceSpec w24();

  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool constrains(int derivative, int endpoint) const;
  /// Throws KernelError when the order is unsupported or constraints are malformed.
  void validate() const;
};

/// Piece coefficients of K(., y) at one fixed y: `lower` on x <= y, `upper` on x > y.
/// Entry k multiplies x^k.
struct KernelPieces {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Exact piecewise-polynomial reproducing kernel.
///
/// `lower_table()(a, b)` is the coefficient of x^a y^b of K(x, y) on x <= y. The x > y region is
/// reached through symmetry, K(x, y) = K(y, x). The upper-region table recovered independently
/// by the derivation is retained for verification only.
class BivariateKernel {
public:
  BivariateKernel(SpaceSpec spec, Eigen::MatrixXd lower, Eigen::MatrixXd upper);

  [[nodiscard]] const SpaceSpec& spec() const { return spec_; }
  [[nodiscard]] int order() const { return spec_.order; }
  [[nodiscard]] int coefficient_count() const { return 2 * spec_.order; }
  [[nodiscard]] const Eigen::MatrixXd& lower_table() const { return lower_; }
  [[nodiscard]] const Eigen::MatrixXd& upper_table() const { return upper_; }

  /// d^dx/dx d^dy/dy K(x, y) with the x <= y formula, applied through symmetry when x > y.
  [[nodiscard]] double evaluate(double x, double y, int dx = 0, int dy = 0) const;

  /// Evaluation through the lower formula only (valid for x <= y) or through the independently
  /// derived upper table only (valid for x >= y). Used to cross-check symmetry.
  [[nodiscard]] double evaluate_lower_region(double x, double y, int dx = 0, int dy = 0) const;
  [[nodiscard]] double evaluate_upper_region(double x, double y, int dx = 0, int dy = 0) const;

  /// x -> d^dy/dy K(x, y) as a piecewise polynomial in x with breakpoint y. By symmetry this is
  /// also x -> d^dy/da^dy K(a, x) at a = y.
  [[nodiscard]] PiecewisePoly slice(double y, int dy = 0) const;

  /// c(y), d(y) re-expanded from the bivariate table.
  [[nodiscard]] KernelPieces pieces_at(double y) const;

private:
  SpaceSpec spec_;
  Eigen::MatrixXd lower_;
  Eigen::MatrixXd upper_;
};

/// Solves the natural/constraint/continuity/jump conditions at 2*order Chebyshev nodes in
/// (0.05, 0.95) and interpolates each piece coefficient as a polynomial of degree 2*order-1 in y.
BivariateKernel derive_kernel(const SpaceSpec& spec);

/// Single-y dense LU solve of the same condition system. Independent of the interpolation in
/// derive_kernel; serves as its oracle.
KernelPieces kernel_system_oracle(const SpaceSpec& spec, double y);

double kernel_eval(const BivariateKernel& kernel, double x, double y, int dx = 0, int dy = 0);

/// Definitional inner product of the space, integral evaluated exactly.
double inner_product(const SpaceSpec& spec, const PiecewisePoly& u, const PiecewisePoly& v);

/// Signed jump of the top derivative of x -> K(x, y) across x = y (upper minus lower).
double top_derivative_jump(int order);

}  // namespace rkhsm
