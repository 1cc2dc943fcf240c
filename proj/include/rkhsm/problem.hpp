#pragma once

#include <array>
#include <stdexcept>

namespace rkhsm {

/// Nondimensional squeeze-flow parameters: Hartmann number m and Reynolds number re.
struct ProblemParams {
  double m = 1.0;
  double re = 1.0;

  /// Throws std::invalid_argument for non-finite values or m < 0.
  void validate() const;
  [[nodiscard]] double m_squared() const { return m * m; }
  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

/// f(x), f'(x), ..., f''''(x) at a single point.
struct DerivativeJet {
  double x = 0.0;
  std::array<double, 5> values{};

  [[nodiscard]] double operator[](int k) const { return values[static_cast<std::size_t>(k)]; }
};

/// Boundary lift g(x) = e^(x-1) x (x-2)^2 and its first four derivatives. g carries the
/// inhomogeneous conditions g(1) = 1, g'(1) = 0, g(0) = g''(0) = 0, so F = u + g leaves u with
/// homogeneous ones.
DerivativeJet homogenizer(double x);

/// L u = u'''' + re g u''' - m^2 u'' + re g''' u.
double operator_L(const ProblemParams& params, const DerivativeJet& u);

/// Right-hand side M(x, u, u''') = -re u''' u - re g g''' - g'''' + m^2 g''.
double rhs_M(const ProblemParams& params, double x, double u_val, double u3_val);

/// F'''' - m^2 F'' + re F F'''.
double bvp_residual(const ProblemParams& params, const DerivativeJet& f);

/// Closed form for re = 0: F = B x + C sinh(m x) with C = 1/(sinh m - m cosh m), B = -C m cosh m;
/// (3x - x^3)/2 when m = 0. `derivative` selects F^(k), k = 0..4.
double analytic_linear_solution(const ProblemParams& params, double x, int derivative = 0);
DerivativeJet analytic_linear_jet(const ProblemParams& params, double x);

/// Velocity in units of the plate speed V at nondimensional radius r. Uses the normalisation in
/// which F runs from 0 on the symmetry plane to 1 on the plate: u_z / V = -F, u_r / V = (r/2) F'.
struct Velocity {
  double radial = 0.0;
  double axial = 0.0;
};
Velocity velocity_field(double f_val, double fp_val, double r);

}  // namespace rkhsm
