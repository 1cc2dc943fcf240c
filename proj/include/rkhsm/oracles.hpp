#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkhsm/problem.hpp"

namespace rkhsm {

/// (F, F', F'', F''') along the integration.
using OdeState = std::array<double, 4>;

/// Unknown initial data (F'(0), F'''(0)); F(0) = F''(0) = 0 are fixed.
struct Slopes {
  double fp0 = 1.5;
  double f3_0 = -3.0;
};

class IntegrationError : public std::runtime_error {
public:
  IntegrationError(const std::string& what, int step) : std::runtime_error(what), step_(step) {}
  [[nodiscard]] int step() const { return step_; }

private:
  int step_;
};

class ShootingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Uniform-step trajectory x_j = j / N, j = 0..N.
struct Trajectory {
  ProblemParams params;
  int steps = 0;
  std::vector<OdeState> states;

  [[nodiscard]] const OdeState& terminal() const { return states.back(); }
  /// F^(deriv)(x) for deriv = 0..3, cubic Hermite between nodes using the next derivative.
  [[nodiscard]] double evaluate(double x, int deriv = 0) const;
};

/// y' = (F', F'', F''', m^2 F'' - re F F''').
OdeState squeeze_rhs(const ProblemParams& params, const OdeState& y);

/// Classical four-stage Runge-Kutta from x = 0 with step 1/N.
Trajectory rk4_integrate(const ProblemParams& params, const Slopes& slopes, int steps);

struct ShootOptions {
  int steps = 2000;
  double newton_tol = 1e-12;
  int max_newton = 50;
  double fd_perturbation = 1e-7;
  bool continuation = true;
};

struct ShootingSolution {
  Slopes slopes;
  int steps = 0;
  int newton_iters = 0;
  std::array<double, 2> terminal_residual{};
  Trajectory trajectory;

  [[nodiscard]] double evaluate(double x, int deriv = 0) const { return trajectory.evaluate(x, deriv); }
  /// (x, F, F', F'', F''') rows at `count` + 1 uniform points.
  [[nodiscard]] std::vector<std::array<double, 5>> dense_values(int count = 10) const;
};

/// Newton on (F(1) - 1, F'(1)) with a forward-difference Jacobian, starting from the Stokes
/// slopes (3/2, -3). For m > 5 or |re| > 5 the parameters are walked from zero in 8 steps.
ShootingSolution shoot(const ProblemParams& params, const ShootOptions& opts = {});

/// Fourth-order finite-difference estimate of f^(order)(x), order 1..4. Central stencil in the
/// interior; shifted one-sided stencil when the central one would leave [0, 1].
double finite_diff(const std::function<double(double)>& f, double x, int order, double h);

}  // namespace rkhsm
