#include "rkhsm/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace rkhsm {

namespace {

template <typename Real>
Real ipow(Real x, int p) {
  Real r = 1;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Coefficient recovery in y goes through a Vandermonde solve whose condition number is ~1e7 at
// degree 9; carrying it in quad precision leaves the binary64 table correctly rounded.
using Quad = boost::multiprecision::cpp_bin_float_quad;

// d^k/dt^k t^p at t.
template <typename Real>
Real monomial_derivative(int p, int k, Real t) {
  if (k > p) return Real(0);
  return Real(falling_factorial(p, k)) * ipow(t, p - k);
}

template <typename Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Row layout: unknowns [c_0 .. c_{N-1}, d_0 .. d_{N-1}], N = 2 * order.
template <typename Real>
struct ConditionSystem {
  Matrix<Real> matrix;
  Vector<Real> rhs;
};

template <typename Real>
ConditionSystem<Real> assemble_conditions(const SpaceSpec& spec, Real y) {
  const int order = spec.order;
  const int n = 2 * order;
  ConditionSystem<Real> sys{Matrix<Real>::Zero(2 * n, 2 * n), Vector<Real>::Zero(2 * n)};
  int row = 0;

  auto put_lower = [&](int r, int k, Real t, double scale) {
    for (int p = 0; p < n; ++p) sys.matrix(r, p) += Real(scale) * monomial_derivative(p, k, t);
  };
  auto put_upper = [&](int r, int k, Real t, double scale) {
    for (int p = 0; p < n; ++p) sys.matrix(r, n + p) += Real(scale) * monomial_derivative(p, k, t);
  };

  // Natural conditions left over from integrating the top-order term by parts.
  for (int i = 0; i < order; ++i) {
    if (spec.constrains(i, 0)) continue;
    const double sign = ((order - 1 - i) % 2 == 0) ? 1.0 : -1.0;
    put_lower(row, i, Real(0), 1.0);
    put_lower(row, 2 * order - 1 - i, Real(0), -sign);
    ++row;
  }
  for (int i = 0; i < order; ++i) {
    if (spec.constrains(i, 1)) continue;
    put_upper(row, 2 * order - 1 - i, Real(1), 1.0);
    ++row;
  }
  for (const auto& c : spec.constraints) {
    if (c.endpoint == 0) {
      put_lower(row, c.derivative, Real(0), 1.0);
    } else {
      put_upper(row, c.derivative, Real(1), 1.0);
    }
    ++row;
  }
  for (int k = 0; k <= 2 * order - 2; ++k) {
    put_upper(row, k, y, 1.0);
    put_lower(row, k, y, -1.0);
    ++row;
  }
  put_upper(row, 2 * order - 1, y, 1.0);
  put_lower(row, 2 * order - 1, y, -1.0);
  sys.rhs(row) = top_derivative_jump(order);
  ++row;

  if (row != 2 * n) throw KernelError("kernel condition system has " + std::to_string(row) + " rows, expected " + std::to_string(2 * n));
  return sys;
}

template <typename Real>
bool is_singular(const Eigen::PartialPivLU<Matrix<Real>>& lu) {
  if constexpr (std::is_same_v<Real, double>) {
    return !(lu.rcond() > 1e-15);
  } else {
    const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
    return !(static_cast<double>(pivots.minCoeff() / pivots.maxCoeff()) > 1e-20);
  }
}

template <typename Real>
Vector<Real> solve_conditions(const SpaceSpec& spec, Real y) {
  const ConditionSystem<Real> sys = assemble_conditions(spec, y);
  Eigen::PartialPivLU<Matrix<Real>> lu(sys.matrix);
  if (is_singular(lu)) {
    throw KernelError("singular kernel condition system for " + spec.name());
  }
  return lu.solve(sys.rhs);
}

// Chebyshev points of the first kind mapped to (0.05, 0.95), rounded to binary64.
std::vector<double> interpolation_nodes(int count) {
  std::vector<double> nodes(count);
  for (int j = 0; j < count; ++j) {
    nodes[j] = 0.5 + 0.45 * std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * count));
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

double table_eval(const Eigen::MatrixXd& table, double x, double y, int dx, int dy) {
  double acc = 0.0;
  for (int a = static_cast<int>(table.rows()) - 1; a >= dx; --a) {
    double row = 0.0;
    for (int b = static_cast<int>(table.cols()) - 1; b >= dy; --b) {
      row = row * y + table(a, b) * falling_factorial(b, dy);
    }
    acc = acc * x + row * falling_factorial(a, dx);
  }
  return acc;
}

}  // namespace

SpaceSpec SpaceSpec::w25() {
  return SpaceSpec{5, {{0, 0}, {0, 1}, {1, 1}, {2, 0}}};
}

SpaceSpec SpaceSpec::w24() { return SpaceSpec{4, {}}; }

std::string SpaceSpec::name() const {
  std::string s = "W2^" + std::to_string(order);
  if (!constraints.empty()) s += " (" + std::to_string(constraints.size()) + " constraints)";
  return s;
}

bool SpaceSpec::constrains(int derivative, int endpoint) const {
  return std::find(constraints.begin(), constraints.end(), BoundaryConstraint{derivative, endpoint}) != constraints.end();
}

void SpaceSpec::validate() const {
  if (order != 4 && order != 5) throw KernelError("unsupported space order " + std::to_string(order));
  std::set<std::pair<int, int>> seen;
  for (const auto& c : constraints) {
    if (c.derivative < 0 || c.derivative >= order) throw KernelError("constraint derivative order out of range");
    if (c.endpoint != 0 && c.endpoint != 1) throw KernelError("constraint endpoint must be 0 or 1");
    if (!seen.emplace(c.derivative, c.endpoint).second) throw KernelError("duplicate boundary constraint");
  }
}

double top_derivative_jump(int order) { return (order % 2 == 0) ? 1.0 : -1.0; }

BivariateKernel::BivariateKernel(SpaceSpec spec, Eigen::MatrixXd lower, Eigen::MatrixXd upper)
    : spec_(std::move(spec)), lower_(std::move(lower)), upper_(std::move(upper)) {}

double BivariateKernel::evaluate(double x, double y, int dx, int dy) const {
  if (x <= y) return table_eval(lower_, x, y, dx, dy);
  return table_eval(lower_, y, x, dy, dx);
}

double BivariateKernel::evaluate_lower_region(double x, double y, int dx, int dy) const {
  return table_eval(lower_, x, y, dx, dy);
}

double BivariateKernel::evaluate_upper_region(double x, double y, int dx, int dy) const {
  return table_eval(upper_, x, y, dx, dy);
}

PiecewisePoly BivariateKernel::slice(double y, int dy) const {
  const int n = coefficient_count();
  std::vector<double> lo(n, 0.0);
  std::vector<double> up(n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      lo[a] += lower_(a, b) * monomial_derivative(b, dy, y);
      up[b] += lower_(a, b) * monomial_derivative(a, dy, y);
    }
  }
  return PiecewisePoly(y, Polynomial(std::move(lo)), Polynomial(std::move(up)));
}

KernelPieces BivariateKernel::pieces_at(double y) const {
  const PiecewisePoly s = slice(y);
  return KernelPieces{{s.lower().coefficients().begin(), s.lower().coefficients().end()},
                      {s.upper().coefficients().begin(), s.upper().coefficients().end()}};
}

BivariateKernel derive_kernel(const SpaceSpec& spec) {
  spec.validate();
  const int n = 2 * spec.order;
  const std::vector<double> nodes = interpolation_nodes(n);
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    if (!(nodes[j] > nodes[j - 1])) throw KernelError("kernel interpolation nodes are not distinct");
  }

  Matrix<Quad> vandermonde(n, n);
  Matrix<Quad> samples(n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const Quad node(nodes[j]);
    for (int b = 0; b < n; ++b) vandermonde(j, b) = ipow(node, b);
    samples.row(j) = solve_conditions<Quad>(spec, node).transpose();
  }
  // Column q of `poly` holds the y-monomial coefficients of unknown q.
  const Matrix<Quad> poly_q = Eigen::PartialPivLU<Matrix<Quad>>(vandermonde).solve(samples);
  const Eigen::MatrixXd poly = poly_q.unaryExpr([](const Quad& v) { return static_cast<double>(v); });

  Eigen::MatrixXd lower(n, n);
  Eigen::MatrixXd upper(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      lower(a, b) = poly(b, a);
      upper(a, b) = poly(b, n + a);
    }
  }
  return BivariateKernel(spec, std::move(lower), std::move(upper));
}

KernelPieces kernel_system_oracle(const SpaceSpec& spec, double y) {
  spec.validate();
  if (!(y > 0.0 && y < 1.0)) throw KernelError("kernel_system_oracle: y must lie in (0,1)");
  const int n = 2 * spec.order;
  // The system is ill-conditioned for y near 0; quad precision keeps tiny entries such as
  // d_1 = y^9 / 9! accurate to well below the comparison tolerance.
  const Vector<Quad> z = solve_conditions<Quad>(spec, Quad(y));
  KernelPieces out;
  for (int i = 0; i < n; ++i) {
    out.lower.push_back(static_cast<double>(z(i)));
    out.upper.push_back(static_cast<double>(z(n + i)));
  }
  return out;
}

double kernel_eval(const BivariateKernel& kernel, double x, double y, int dx, int dy) {
  const int top = 2 * kernel.order() - 1;
  if (dx < 0 || dy < 0 || dx > top || dy > top) throw KernelError("kernel_eval: derivative order out of range");
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) throw KernelError("kernel_eval: argument outside [0,1]");
  if (x == y && dx + dy > top - 1) {
    throw KernelError("kernel_eval: derivative of total order " + std::to_string(dx + dy) +
                      " is discontinuous on the diagonal x = y");
  }
  return kernel.evaluate(x, y, dx, dy);
}

double inner_product(const SpaceSpec& spec, const PiecewisePoly& u, const PiecewisePoly& v) {
  double boundary = 0.0;
  for (int i = 0; i < spec.order; ++i) boundary += u.evaluate(0.0, i) * v.evaluate(0.0, i);
  return boundary + integrate_product(u.derivative(spec.order), v.derivative(spec.order));
}

}  // namespace rkhsm
