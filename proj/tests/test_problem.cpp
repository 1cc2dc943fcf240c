#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "rkhsm/oracles.hpp"
#include "rkhsm/polynomial.hpp"
#include "rkhsm/problem.hpp"

using namespace rkhsm;

namespace {

const Polynomial kTrial({0.0, 1.0, 0.0, -3.0, 2.0});  // x - 3x^3 + 2x^4

DerivativeJet jet_of(const Polynomial& p, double x) {
  DerivativeJet j{x, {}};
  for (int k = 0; k <= 4; ++k) j.values[k] = p.evaluate(x, k);
  return j;
}

DerivativeJet sum(const DerivativeJet& a, const DerivativeJet& b) {
  DerivativeJet s{a.x, {}};
  for (int k = 0; k <= 4; ++k) s.values[k] = a[k] + b[k];
  return s;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ProblemParams{0.0, -3.0}.validate());
  CHECK_THROWS_AS((ProblemParams{-1.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ProblemParams{std::nan(""), 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ProblemParams{1.0, INFINITY}.validate()), std::invalid_argument);
  CHECK(ProblemParams{3.0, 1.0}.m_squared() == 9.0);
}

TEST_CASE("lift boundary values") {
  const DerivativeJet one = homogenizer(1.0);
  CHECK(one[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(one[1]) <= 1e-15);
  const DerivativeJet zero = homogenizer(0.0);
  CHECK(zero[0] == 0.0);
  CHECK(zero[2] == 0.0);
  CHECK(homogenizer(0.5)[0] == doctest::Approx(1.125 * std::exp(-0.5)).epsilon(1e-15));
  CHECK(homogenizer(0.5)[0] == doctest::Approx(0.6823469922).epsilon(1e-9));
}

TEST_CASE("lift jet is internally consistent") {
  // Central difference of component k-1 reproduces component k.
  const double h = 1e-4;
  for (int i = 1; i <= 9; ++i) {
    const double x = i / 10.0;
    for (int k = 1; k <= 4; ++k) {
      const double fd = (homogenizer(x + h)[k - 1] - homogenizer(x - h)[k - 1]) / (2.0 * h);
      CHECK(fd == doctest::Approx(homogenizer(x)[k]).epsilon(1e-6));
    }
  }
}

TEST_CASE("lift third derivative against the finite-difference oracle") {
  const auto g = [](double x) { return homogenizer(x)[0]; };
  CHECK(finite_diff(g, 0.5, 3, 1e-3) == doctest::Approx(homogenizer(0.5)[3]).epsilon(1e-6));
}

TEST_CASE("operator L") {
  CHECK(operator_L({0.0, 0.0}, jet_of(kTrial, 0.5)) == doctest::Approx(48.0));
  CHECK(operator_L({1.0, 0.0}, jet_of(kTrial, 0.0)) == doctest::Approx(48.0));
  // By hand: u = 1/4, u'' = -3, u''' = 6, u'''' = 48; g(0.5) = 1.125 e^-0.5, g'''(0.5) = -5.625 e^-0.5.
  const double expected = 48.0 + 6.0 * 1.125 * std::exp(-0.5) + 3.0 - 0.25 * 5.625 * std::exp(-0.5);
  CHECK(operator_L({1.0, 1.0}, jet_of(kTrial, 0.5)) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("right-hand side M") {
  const double x = 0.37;
  const DerivativeJet g = homogenizer(x);
  CHECK(rhs_M({2.0, 0.0}, x, 5.0, -7.0) == doctest::Approx(-g[4] + 4.0 * g[2]));
  CHECK(rhs_M({2.0, 0.0}, x, 5.0, -7.0) == rhs_M({2.0, 0.0}, x, -1.0, 100.0));
  CHECK(rhs_M({1.0, 1.0}, 0.0, 0.0, 123.0) == doctest::Approx(8.0 / std::exp(1.0)).epsilon(1e-15));
  // g''''(0) = -8/e, confirmed by differencing g'''.
  const double h = 1e-5;
  const double fd = (homogenizer(h)[3] - homogenizer(-h)[3]) / (2.0 * h);
  CHECK(fd == doctest::Approx(-8.0 / std::exp(1.0)).epsilon(1e-8));
}

TEST_CASE("BVP residual") {
  for (double x : {0.0, 0.3, 1.0}) {
    CHECK(std::abs(bvp_residual({0.0, 0.0}, analytic_linear_jet({0.0, 0.0}, x))) <= 1e-14);
  }
  const ProblemParams p{2.0, 3.0};
  const DerivativeJet g = homogenizer(0.6);
  CHECK(bvp_residual(p, g) == doctest::Approx(g[4] - 4.0 * g[2] + 3.0 * g[0] * g[3]));
  CHECK(bvp_residual({0.0, 0.0}, jet_of(kTrial, 0.2)) == doctest::Approx(48.0));
}

TEST_CASE("decomposition identity L u - M = residual of u + g") {
  const std::vector<Polynomial> trials = {kTrial, Polynomial({0.0, 0.0, 0.0, 1.0, -2.0, 1.0}),
                                          Polynomial({0.2, -1.0, 4.0, 0.0, 0.0, 3.0})};
  for (const ProblemParams p : {ProblemParams{0.0, 0.0}, ProblemParams{1.0, 1.0}, ProblemParams{20.0, 10.0},
                                ProblemParams{3.5, -2.0}}) {
    for (const auto& t : trials) {
      for (int i = 0; i <= 10; ++i) {
        const double x = i / 10.0;
        const DerivativeJet u = jet_of(t, x);
        const double lhs = operator_L(p, u) - rhs_M(p, x, u[0], u[3]);
        CHECK(lhs == doctest::Approx(bvp_residual(p, sum(u, homogenizer(x)))).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("closed-form linear solutions") {
  CHECK(analytic_linear_solution({0.0, 0.0}, 0.5) == doctest::Approx(0.6875).epsilon(1e-15));
  CHECK(analytic_linear_solution({1.0, 0.0}, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(analytic_linear_solution({1.0, 0.0}, 0.0)) <= 1e-15);
  const double e = std::exp(1.0);
  const double expected = e * std::cosh(1.0) * 0.5 - e * std::sinh(0.5);
  CHECK(analytic_linear_solution({1.0, 0.0}, 0.5) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(analytic_linear_solution({1.0, 0.0}, 0.5) == doctest::Approx(0.68078).epsilon(1e-5));
  CHECK_THROWS_AS(analytic_linear_solution({1.0, 0.5}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(analytic_linear_solution({1.0, 0.0}, 0.5, 5), std::invalid_argument);
}

TEST_CASE("closed-form solutions satisfy the BVP") {
  for (double m : {0.0, 0.5, 1.0, 3.0, 8.0, 20.0}) {
    const ProblemParams p{m, 0.0};
    for (int i = 0; i <= 20; ++i) CHECK(std::abs(bvp_residual(p, analytic_linear_jet(p, i / 20.0))) <= 1e-9);
    CHECK(analytic_linear_solution(p, 0.0) == 0.0);
    CHECK(analytic_linear_solution(p, 0.0, 2) == 0.0);
    CHECK(analytic_linear_solution(p, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(analytic_linear_solution(p, 1.0, 1)) <= 1e-12);
  }
}

TEST_CASE("closed form agrees with the shooting oracle") {
  const ProblemParams p{1.0, 0.0};
  const ShootingSolution s = shoot(p);
  CHECK(s.evaluate(0.5) == doctest::Approx(analytic_linear_solution(p, 0.5)).epsilon(1e-9));
}

TEST_CASE("velocity field") {
  const Velocity plate = velocity_field(1.0, 0.0, 0.7);
  CHECK(plate.axial == -1.0);
  CHECK(plate.radial == 0.0);
  CHECK(velocity_field(0.0, 1.5, 0.3).axial == 0.0);
  CHECK(velocity_field(0.4, 2.0, 0.5).radial == doctest::Approx(0.5));
  CHECK_THROWS_AS(velocity_field(0.4, 2.0, -0.1), std::invalid_argument);
}
