#include "rkhsm/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rkhsm {

double falling_factorial(int n, int k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {}

double Polynomial::evaluate(double x, int derivative) const {
  const int n = static_cast<int>(coeffs_.size());
  double acc = 0.0;
  for (int p = n - 1; p >= derivative; --p) {
    acc = acc * x + coeffs_[p] * falling_factorial(p, derivative);
  }
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  const int n = static_cast<int>(coeffs_.size());
  if (order >= n) return Polynomial({0.0});
  std::vector<double> out(n - order);
  for (int p = order; p < n; ++p) out[p - order] = coeffs_[p] * falling_factorial(p, order);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) out[p + 1] = coeffs_[p] / static_cast<double>(p + 1);
  return Polynomial(std::move(out));
}

double Polynomial::integrate(double a, double b) const {
  if (a == b) return 0.0;
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return Polynomial({0.0});
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(double scale, const Polynomial& p) {
  std::vector<double> out(p.coeffs_);
  for (double& c : out) c *= scale;
  return Polynomial(std::move(out));
}

PiecewisePoly::PiecewisePoly(double breakpoint, Polynomial lower, Polynomial upper)
    : breakpoint_(breakpoint), lower_(std::move(lower)), upper_(std::move(upper)) {}

PiecewisePoly PiecewisePoly::uniform(Polynomial p, double breakpoint) {
  return PiecewisePoly(breakpoint, p, p);
}

double PiecewisePoly::evaluate(double x, int derivative) const {
  return piece_for(x).evaluate(x, derivative);
}

PiecewisePoly PiecewisePoly::derivative(int order) const {
  return PiecewisePoly(breakpoint_, lower_.derivative(order), upper_.derivative(order));
}

PiecewisePoly PiecewisePoly::plus_scaled(double scale, const PiecewisePoly& other) const {
  if (other.breakpoint_ != breakpoint_) throw std::invalid_argument("plus_scaled: breakpoints differ");
  return PiecewisePoly(breakpoint_, lower_ + scale * other.lower_, upper_ + scale * other.upper_);
}

double PiecewisePoly::breakpoint_mismatch(int max_order) const {
  double worst = 0.0;
  for (int k = 0; k <= max_order; ++k) {
    worst = std::max(worst, std::abs(lower_.evaluate(breakpoint_, k) - upper_.evaluate(breakpoint_, k)));
  }
  return worst;
}

double integrate_product(const PiecewisePoly& u, const PiecewisePoly& v) {
  std::array<double, 4> cuts{0.0, std::clamp(u.breakpoint(), 0.0, 1.0), std::clamp(v.breakpoint(), 0.0, 1.0), 1.0};
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s];
    const double b = cuts[s + 1];
    if (b <= a) continue;
    const double mid = 0.5 * (a + b);
    total += (u.piece_for(mid) * v.piece_for(mid)).integrate(a, b);
  }
  return total;
}

}  // namespace rkhsm
