#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rkhsm/oracles.hpp"
#include "rkhsm/problem.hpp"

using namespace rkhsm;

namespace {

Slopes analytic_slopes(const ProblemParams& p) {
  return {analytic_linear_solution(p, 0.0, 1), analytic_linear_solution(p, 0.0, 3)};
}

}  // namespace

TEST_CASE("right-hand side of the first-order system") {
  const OdeState d = squeeze_rhs({2.0, 3.0}, {0.5, 1.0, -2.0, 4.0});
  CHECK(d[0] == 1.0);
  CHECK(d[1] == -2.0);
  CHECK(d[2] == 4.0);
  CHECK(d[3] == doctest::Approx(4.0 * -2.0 - 3.0 * 0.5 * 4.0));
}

TEST_CASE("Stokes slopes integrate exactly") {
  const Trajectory t = rk4_integrate({0.0, 0.0}, {1.5, -3.0}, 100);
  CHECK(std::abs(t.terminal()[0] - 1.0) <= 1e-12);
  CHECK(std::abs(t.terminal()[1]) <= 1e-12);
  CHECK(t.states.size() == 101);
}

TEST_CASE("closed-form slopes meet the far boundary") {
  const ProblemParams p{1.0, 0.0};
  const Slopes s = analytic_slopes(p);
  const Trajectory t = rk4_integrate(p, s, 1000);
  CHECK(std::abs(t.terminal()[0] - 1.0) <= 1e-10);
  CHECK(std::abs(t.terminal()[1]) <= 1e-10);
}

TEST_CASE("halving the step cuts the error about sixteenfold") {
  const ProblemParams p{3.0, 0.0};
  const Slopes s = analytic_slopes(p);
  const double exact = analytic_linear_solution(p, 1.0, 2);
  const double e1 = std::abs(rk4_integrate(p, s, 100).terminal()[2] - exact);
  const double e2 = std::abs(rk4_integrate(p, s, 200).terminal()[2] - exact);
  MESSAGE("errors " << e1 << " " << e2 << " ratio " << e1 / e2);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("integrator errors") {
  CHECK_THROWS_AS(rk4_integrate({1.0, 1.0}, {1.5, -3.0}, 99), std::invalid_argument);
  bool caught = false;
  try {
    rk4_integrate({0.0, 1e6}, {1e4, 1e6}, 100);
  } catch (const IntegrationError& e) {
    caught = true;
    CHECK(e.step() >= 1);
    CHECK(e.step() <= 100);
  }
  CHECK(caught);
}

TEST_CASE("shooting recovers the Stokes slopes immediately") {
  const ShootingSolution s = shoot({0.0, 0.0});
  CHECK(s.slopes.fp0 == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(s.slopes.f3_0 == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(s.newton_iters <= 1);
}

TEST_CASE("shooting meets the terminal conditions for every reference case") {
  for (const ProblemParams p : {ProblemParams{1.0, 1.0}, ProblemParams{3.0, 1.0}, ProblemParams{8.0, 1.0},
                                ProblemParams{20.0, 1.0}, ProblemParams{1.0, 4.0}, ProblemParams{1.0, 10.0}}) {
    const ShootingSolution s = shoot(p);
    CHECK(std::abs(s.terminal_residual[0]) <= 1e-10);
    CHECK(std::abs(s.terminal_residual[1]) <= 1e-10);
    CHECK(s.steps == 2000);
  }
}

TEST_CASE("shooting midpoint values at printed precision") {
  CHECK(std::abs(shoot({1.0, 1.0}).evaluate(0.5) - 0.689624) <= 5e-7);
  CHECK(std::abs(shoot({20.0, 1.0}).evaluate(0.5) - 0.526952) <= 5e-7);
}

TEST_CASE("shooting against closed forms") {
  for (double m : {1.0, 3.0, 8.0}) {
    const ProblemParams p{m, 0.0};
    const ShootingSolution s = shoot(p);
    for (int i = 1; i <= 9; ++i) {
      CHECK(std::abs(s.evaluate(i / 10.0) - analytic_linear_solution(p, i / 10.0)) <= 1e-9);
    }
    // Off-node values go through Hermite interpolation.
    CHECK(std::abs(s.evaluate(0.12345) - analytic_linear_solution(p, 0.12345)) <= 1e-9);
  }
}

TEST_CASE("continuation is needed only as a robustness aid") {
  ShootOptions cold;
  cold.continuation = false;
  const ShootingSolution a = shoot({8.0, 1.0}, cold);
  const ShootingSolution b = shoot({8.0, 1.0});
  CHECK(a.evaluate(0.7) == doctest::Approx(b.evaluate(0.7)).epsilon(1e-10));
}

TEST_CASE("Newton stagnation is reported") {
  ShootOptions opts;
  opts.max_newton = 1;
  try {
    shoot({1.0, 10.0}, opts);
    FAIL("expected ShootingError");
  } catch (const ShootingError& e) {
    const std::string what = e.what();
    CHECK(what.find("residual") != std::string::npos);
    CHECK(what.find("slopes") != std::string::npos);
  }
}

TEST_CASE("RK-4 convergence order on the nonlinear case") {
  const ProblemParams p{1.0, 1.0};
  const Slopes s = shoot(p).slopes;
  double prev_diff = 0.0;
  OdeState prev = rk4_integrate(p, s, 250).terminal();
  for (int n : {500, 1000, 2000}) {
    const OdeState cur = rk4_integrate(p, s, n).terminal();
    double d = 0.0;
    for (int c = 0; c < 4; ++c) d = std::max(d, std::abs(cur[c] - prev[c]));
    if (prev_diff > 0.0) {
      const double order = std::log2(prev_diff / d);
      MESSAGE("order estimate " << order);
      CHECK(order >= 3.8);
      CHECK(order <= 4.2);
    }
    prev_diff = d;
    prev = cur;
  }
}

TEST_CASE("trajectory evaluation") {
  const ShootingSolution s = shoot({1.0, 1.0});
  const auto& st = s.trajectory.states[1000];
  for (int k = 0; k < 4; ++k) CHECK(s.evaluate(0.5, k) == st[k]);
  CHECK_THROWS_AS(static_cast<void>(s.evaluate(0.5, 4)), std::invalid_argument);
  const auto rows = s.dense_values(10);
  REQUIRE(rows.size() == 11);
  CHECK(rows[5][0] == doctest::Approx(0.5));
  CHECK(rows[5][1] == s.evaluate(0.5));
  CHECK(rows[10][1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("finite differences") {
  CHECK(finite_diff([](double x) { return x * x * x; }, 0.5, 2, 1e-4) == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(std::abs(finite_diff([](double x) { return std::sinh(x); }, 0.3, 1, 1e-3) - std::cosh(0.3)) <= 1e-9);
  const auto g = [](double x) { return homogenizer(x)[0]; };
  CHECK(finite_diff(g, 0.5, 3, 1e-3) == doctest::Approx(homogenizer(0.5)[3]).epsilon(1e-6));
  // One-sided near the ends, still exact on low-degree polynomials.
  CHECK(finite_diff([](double x) { return x * x * x * x; }, 0.0, 1, 1e-2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  CHECK(finite_diff([](double x) { return x * x * x * x; }, 1.0, 4, 1e-2) == doctest::Approx(24.0).epsilon(1e-6));
  CHECK_THROWS_AS(finite_diff(g, 0.5, 5, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(finite_diff(g, 0.5, 1, 0.0), std::invalid_argument);
}
