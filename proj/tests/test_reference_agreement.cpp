// Pointwise agreement of the collocation solver with the printed reference values and the
// closed forms at the accuracies the method is expected to reach. Several of these do not hold
// for the current solver (see README, "Known failures"); they are kept as stated.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rkhsm/oracles.hpp"
#include "rkhsm/reference_data.hpp"
#include "rkhsm/report.hpp"
#include "rkhsm/solver.hpp"

using namespace rkhsm;

namespace {

RkhsmSolution solve_at(double m, double re, int n) {
  return solve({m, re}, CollocationGrid::make(n));
}

}  // namespace

TEST_CASE("midpoint value for m = 1, re = 1 at n = 32") {
  const double f = eval_solution(solve_at(1.0, 1.0, 32), 0.5);
  MESSAGE("F(0.5) = " << f);
  CHECK(std::abs(f - 0.689624) <= 5e-7);
}

TEST_CASE("midpoint value for m = 1, re = 4 at n = 32") {
  const double f = eval_solution(solve_at(1.0, 4.0, 32), 0.5);
  MESSAGE("F(0.5) = " << f);
  CHECK(std::abs(f - 0.709771) <= 5e-7);
}

TEST_CASE("Stokes case at n = 16 against the closed form") {
  const RkhsmSolution sol = solve_at(0.0, 0.0, 16);
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    worst = std::max(worst, std::abs(eval_solution(sol, x) - analytic_linear_solution({0.0, 0.0}, x)));
  }
  MESSAGE("max deviation " << worst);
  CHECK(worst <= 1e-8);
}

TEST_CASE("Stokes residual for n >= 8") {
  for (int n : {8, 16, 32}) {
    const double r = residual_norm(solve_at(0.0, 0.0, n));
    MESSAGE("n = " << n << " residual " << r);
    CHECK(r <= 1e-8);
  }
}

TEST_CASE("run_case rows at printed precision") {
  RunConfig cfg;
  const CaseReport a = run_case(cfg);
  CHECK(std::abs(a.rows[1].f_rkhsm - 0.150294) <= 5e-7);
  cfg.m = 3.0;
  const CaseReport b = run_case(cfg);
  CHECK(std::abs(b.rows[5].f_rkhsm - 0.650756) <= 5e-7);
  cfg.m = 0.0;
  cfg.re = 0.0;
  const CaseReport c = run_case(cfg);
  CHECK(c.max_abs_err() <= 1e-9);
}

TEST_CASE("shooting reproduces every printed RK-4 column") {
  for (const ReferenceCase& rc : reference_cases()) {
    std::ostringstream name;
    name << "m = " << rc.params.m << ", re = " << rc.params.re;
    SUBCASE(name.str().c_str()) {
      const ShootingSolution s = shoot(rc.params);
      for (const ReferenceRow& row : rc.rows) {
        if (row.suspect) continue;
        INFO("x = " << row.x);
        CHECK(std::abs(s.evaluate(row.x) - row.rk4) <= 1e-5);
      }
    }
  }
}
