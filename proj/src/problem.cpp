#include "rkhsm/problem.hpp"

#include <cmath>
#include <string>

namespace rkhsm {

void ProblemParams::validate() const {
  if (!std::isfinite(m) || !std::isfinite(re)) throw std::invalid_argument("problem parameters must be finite");
  if (m < 0.0) throw std::invalid_argument("Hartmann number m must be nonnegative, got " + std::to_string(m));
}

DerivativeJet homogenizer(double x) {
  const double e = std::exp(x - 1.0);
  const double x2 = x * x;
  const double x3 = x2 * x;
  DerivativeJet jet{x, {}};
  jet.values[0] = e * (x3 - 4.0 * x2 + 4.0 * x);
  jet.values[1] = e * (x3 - x2 - 4.0 * x + 4.0);
  jet.values[2] = e * (x3 + 2.0 * x2 - 6.0 * x);
  jet.values[3] = e * (x3 + 5.0 * x2 - 2.0 * x - 6.0);
  jet.values[4] = e * (x3 + 8.0 * x2 + 8.0 * x - 8.0);
  return jet;
}

double operator_L(const ProblemParams& params, const DerivativeJet& u) {
  const DerivativeJet g = homogenizer(u.x);
  return u[4] + params.re * g[0] * u[3] - params.m_squared() * u[2] + params.re * g[3] * u[0];
}

double rhs_M(const ProblemParams& params, double x, double u_val, double u3_val) {
  const DerivativeJet g = homogenizer(x);
  return -params.re * u3_val * u_val - params.re * g[0] * g[3] - g[4] + params.m_squared() * g[2];
}

double bvp_residual(const ProblemParams& params, const DerivativeJet& f) {
  return f[4] - params.m_squared() * f[2] + params.re * f[0] * f[3];
}

double analytic_linear_solution(const ProblemParams& params, double x, int derivative) {
  if (params.re != 0.0) throw std::invalid_argument("analytic_linear_solution requires re = 0");
  if (derivative < 0 || derivative > 4) throw std::invalid_argument("derivative order must be 0..4");
  const double m = params.m;
  if (m == 0.0) {
    switch (derivative) {
      case 0: return 0.5 * (3.0 * x - x * x * x);
      case 1: return 1.5 * (1.0 - x * x);
      case 2: return -3.0 * x;
      case 3: return -3.0;
      default: return 0.0;
    }
  }
  const double c = 1.0 / (std::sinh(m) - m * std::cosh(m));
  const double b = -c * m * std::cosh(m);
  const double mk = std::pow(m, derivative);
  const double hyper = (derivative % 2 == 0) ? std::sinh(m * x) : std::cosh(m * x);
  double value = c * mk * hyper;
  if (derivative == 0) value += b * x;
  if (derivative == 1) value += b;
  return value;
}

DerivativeJet analytic_linear_jet(const ProblemParams& params, double x) {
  DerivativeJet jet{x, {}};
  for (int k = 0; k <= 4; ++k) jet.values[static_cast<std::size_t>(k)] = analytic_linear_solution(params, x, k);
  return jet;
}

Velocity velocity_field(double f_val, double fp_val, double r) {
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  return Velocity{0.5 * r * fp_val, -f_val};
}

}  // namespace rkhsm
