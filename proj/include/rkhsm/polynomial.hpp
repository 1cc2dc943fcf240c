#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rkhsm {

/// Dense univariate polynomial in the monomial basis, coefficients[k] multiplies x^k.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  [[nodiscard]] std::span<const double> coefficients() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// k-th derivative evaluated at x by a single Horner pass over the scaled coefficients.
  [[nodiscard]] double evaluate(double x, int derivative = 0) const;
  [[nodiscard]] double operator()(double x) const { return evaluate(x); }

  [[nodiscard]] Polynomial derivative(int order = 1) const;
  [[nodiscard]] Polynomial antiderivative() const;

  /// Exact integral over [a, b].
  [[nodiscard]] double integrate(double a, double b) const;

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(double scale, const Polynomial& p);

private:
  std::vector<double> coeffs_;
};

/// Two polynomial pieces joined at one breakpoint. The lower piece owns [0, breakpoint],
/// the upper piece owns (breakpoint, 1].
class PiecewisePoly {
public:
  PiecewisePoly() = default;
  PiecewisePoly(double breakpoint, Polynomial lower, Polynomial upper);

  /// A single polynomial viewed as piecewise (both pieces identical).
  static PiecewisePoly uniform(Polynomial p, double breakpoint = 0.5);

  [[nodiscard]] double breakpoint() const { return breakpoint_; }
  [[nodiscard]] const Polynomial& lower() const { return lower_; }
  [[nodiscard]] const Polynomial& upper() const { return upper_; }
  [[nodiscard]] const Polynomial& piece_for(double x) const { return x <= breakpoint_ ? lower_ : upper_; }

  [[nodiscard]] double evaluate(double x, int derivative = 0) const;
  [[nodiscard]] double operator()(double x) const { return evaluate(x); }

  [[nodiscard]] PiecewisePoly derivative(int order = 1) const;

  /// this + scale * other; both must share the breakpoint.
  [[nodiscard]] PiecewisePoly plus_scaled(double scale, const PiecewisePoly& other) const;

  /// Largest |lower^(k)(b) - upper^(k)(b)| over k = 0..max_order at the breakpoint.
  [[nodiscard]] double breakpoint_mismatch(int max_order) const;

private:
  double breakpoint_ = 0.0;
  Polynomial lower_;
  Polynomial upper_;
};

/// Exact integral over [0,1] of the product of two piecewise polynomials; the interval is
/// split at both breakpoints so every sub-integral is of a single polynomial.
double integrate_product(const PiecewisePoly& u, const PiecewisePoly& v);

/// Falling factorial n (n-1) ... (n-k+1); zero when k > n.
double falling_factorial(int n, int k);

}  // namespace rkhsm
