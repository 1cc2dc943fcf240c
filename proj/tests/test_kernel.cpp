#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "rkhsm/kernel.hpp"
#include "rkhsm/printed_kernel.hpp"
#include "rkhsm/solver.hpp"

using namespace rkhsm;

namespace {

const BivariateKernel& k25() { return w25_kernel(); }

const BivariateKernel& k24() {
  static const BivariateKernel k = derive_kernel(SpaceSpec::w24());
  return k;
}

// x - 3x^3 + 2x^4 and two more polynomials vanishing as u(0) = u(1) = u'(1) = u''(0) = 0.
std::vector<Polynomial> w25_members() {
  return {Polynomial({0.0, 1.0, 0.0, -3.0, 2.0}), Polynomial({0.0, 0.0, 0.0, 1.0, -2.0, 1.0}),
          Polynomial({0.0, 1.0, 0.0, -3.0, 3.0, -2.0, 1.0})};
}

double closed_w24(double x, double y, int dx = 0) {
  // Lower-branch closed form, differentiated term by term in x.
  const Eigen::MatrixXd t = printed_w24_lower_table();
  double acc = 0.0;
  for (int a = dx; a < t.rows(); ++a) {
    for (int b = 0; b < t.cols(); ++b) acc += t(a, b) * falling_factorial(a, dx) * std::pow(x, a - dx) * std::pow(y, b);
  }
  return acc;
}

}  // namespace

TEST_CASE("space specifications") {
  CHECK(SpaceSpec::w25().constraints.size() == 4);
  CHECK(SpaceSpec::w25().constrains(2, 0));
  CHECK_FALSE(SpaceSpec::w25().constrains(2, 1));
  CHECK(SpaceSpec::w24().constraints.empty());
  CHECK_NOTHROW(SpaceSpec::w25().validate());

  SpaceSpec bad{3, {}};
  CHECK_THROWS_AS(bad.validate(), KernelError);
  SpaceSpec dup{5, {{0, 0}, {0, 0}}};
  CHECK_THROWS_AS(dup.validate(), KernelError);
  SpaceSpec deep{4, {{4, 0}}};
  CHECK_THROWS_AS(deep.validate(), KernelError);
  CHECK_THROWS_AS(derive_kernel(bad), KernelError);
}

TEST_CASE("W25 upper-region constant coefficient is y^9/362880") {
  const Eigen::MatrixXd& up = k25().upper_table();
  for (int b = 0; b < up.cols(); ++b) {
    const double expected = b == 9 ? 1.0 / 362880.0 : 0.0;
    CHECK(up(0, b) == doctest::Approx(expected).epsilon(1e-12).scale(1e-6));
  }
  CHECK(k25().pieces_at(0.5).upper[0] == doctest::Approx(std::pow(0.5, 9) / 362880.0).epsilon(1e-12));
}

TEST_CASE("W25 kernel vanishes at x = 0") {
  for (double y : {0.05, 0.3, 0.77, 1.0}) CHECK(std::abs(kernel_eval(k25(), 0.0, y)) <= 1e-15);
}

TEST_CASE("W24 kernel constant term") {
  CHECK(kernel_eval(k24(), 0.0, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("W25 coefficients at y = 0.5 agree with the single-y solve") {
  const KernelPieces d = k25().pieces_at(0.5);
  const KernelPieces o = kernel_system_oracle(SpaceSpec::w25(), 0.5);
  REQUIRE(d.lower.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(d.lower[i] == doctest::Approx(o.lower[i]).epsilon(1e-9).scale(1e-12));
    CHECK(d.upper[i] == doctest::Approx(o.upper[i]).epsilon(1e-9).scale(1e-12));
  }
}

TEST_CASE("both regions agree on the diagonal below the jump order") {
  for (int dx = 0; dx <= 4; ++dx) {
    for (int dy = 0; dy + dx <= 8; ++dy) {
      if (dy > 4) break;
      const double lo = k25().evaluate_lower_region(0.4, 0.4, dx, dy);
      const double hi = k25().evaluate_upper_region(0.4, 0.4, dx, dy);
      CHECK(lo == doctest::Approx(hi).epsilon(1e-9).scale(1e-12));
    }
  }
  CHECK(kernel_eval(k25(), 0.4, 0.4) == doctest::Approx(k25().evaluate_upper_region(0.4, 0.4)).epsilon(1e-13));
}

TEST_CASE("W24 first x-derivative matches the closed form") {
  CHECK(kernel_eval(k24(), 0.2, 0.7, 1, 0) == doctest::Approx(closed_w24(0.2, 0.7, 1)).epsilon(1e-12));
  // y + x y^2 / 2 + ... : the leading part dominates for small x.
  CHECK(closed_w24(0.0, 0.7, 1) == doctest::Approx(0.7));
}

TEST_CASE("ninth-derivative jump across the diagonal") {
  const PiecewisePoly s = k25().slice(0.5);
  const double jump = s.upper().evaluate(0.5, 9) - s.lower().evaluate(0.5, 9);
  CHECK(jump == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(top_derivative_jump(5) == -1.0);

  const PiecewisePoly s4 = k24().slice(0.5);
  CHECK(s4.upper().evaluate(0.5, 7) - s4.lower().evaluate(0.5, 7) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(top_derivative_jump(4) == 1.0);
}

TEST_CASE("kernel_eval rejects derivatives at the discontinuity and bad arguments") {
  CHECK_THROWS_AS(kernel_eval(k25(), 0.5, 0.5, 9, 0), KernelError);
  CHECK_THROWS_AS(kernel_eval(k25(), 0.5, 0.5, 5, 4), KernelError);
  CHECK_NOTHROW(kernel_eval(k25(), 0.5, 0.5, 4, 4));
  CHECK_NOTHROW(kernel_eval(k25(), 0.3, 0.5, 9, 0));
  CHECK_THROWS_AS(kernel_eval(k25(), 1.2, 0.5), KernelError);
  CHECK_THROWS_AS(kernel_eval(k25(), 0.3, 0.5, -1, 0), KernelError);
}

TEST_CASE("definitional inner product") {
  const SpaceSpec w25 = SpaceSpec::w25();
  const PiecewisePoly u = PiecewisePoly::uniform(Polynomial({0.0, 1.0, 0.0, -3.0, 2.0}));
  // 0^2 + 1^2 + 0^2 + (-18)^2 + 48^2 + int (u^(5))^2 = 2629.
  CHECK(inner_product(w25, u, u) == doctest::Approx(2629.0).epsilon(1e-14));
  CHECK(inner_product(w25, u, PiecewisePoly::uniform(Polynomial({0.0}))) == 0.0);
  CHECK(inner_product(w25, u, k25().slice(0.5)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("single-y oracle examples") {
  const KernelPieces o = kernel_system_oracle(SpaceSpec::w25(), 0.5);
  CHECK(o.upper[0] == doctest::Approx(5.381e-9).epsilon(1e-3));
  for (double y : {0.1, 0.5, 0.93}) {
    const KernelPieces p = kernel_system_oracle(SpaceSpec::w25(), y);
    CHECK(p.lower[0] == 0.0);
    CHECK(std::abs(p.lower[2]) <= 1e-30);
  }
  const KernelPieces w24 = kernel_system_oracle(SpaceSpec::w24(), 0.3);
  const Eigen::MatrixXd t = printed_w24_lower_table();
  for (int a = 0; a < 8; ++a) {
    double lower = 0.0, upper = 0.0;
    for (int b = 0; b < 8; ++b) {
      lower += t(a, b) * std::pow(0.3, b);
      upper += t(b, a) * std::pow(0.3, b);
    }
    CHECK(std::abs(w24.lower[a] - lower) <= 1e-12);
    CHECK(std::abs(w24.upper[a] - upper) <= 1e-12);
  }
  CHECK_THROWS_AS(kernel_system_oracle(SpaceSpec::w25(), 0.0), KernelError);
  CHECK_THROWS_AS(kernel_system_oracle(SpaceSpec::w25(), 1.0), KernelError);
}

TEST_CASE("reproducing identity for members of both spaces") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  const std::vector<Polynomial> w24_members = {Polynomial({2.0, -1.0, 0.5}), Polynomial({0.0, 0.0, 0.0, 0.0, 1.0}),
                                               Polynomial({-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.0})};
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const double y = unit(rng);
    for (const auto& u : w25_members()) {
      worst = std::max(worst, std::abs(inner_product(SpaceSpec::w25(), PiecewisePoly::uniform(u), k25().slice(y)) - u(y)));
    }
    for (const auto& u : w24_members) {
      worst = std::max(worst, std::abs(inner_product(SpaceSpec::w24(), PiecewisePoly::uniform(u), k24().slice(y)) - u(y)));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("symmetry through independently derived regions") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    double x = unit(rng), y = unit(rng);
    if (x < y) std::swap(x, y);
    // Same arithmetic path: evaluation at x > y is the lower formula at (y, x).
    CHECK(k25().evaluate(x, y) == k25().evaluate_lower_region(y, x));
    worst = std::max(worst, std::abs(k25().evaluate_upper_region(x, y) - k25().evaluate_lower_region(y, x)));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("W25 kernel satisfies the boundary constraints") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int s = 0; s < 20; ++s) {
    const double y = unit(rng);
    CHECK(std::abs(k25().evaluate(0.0, y)) <= 1e-10);
    CHECK(std::abs(k25().evaluate(1.0, y)) <= 1e-10);
    CHECK(std::abs(k25().evaluate(1.0, y, 1, 0)) <= 1e-10);
    CHECK(std::abs(k25().evaluate(0.0, y, 2, 0)) <= 1e-10);
  }
}

TEST_CASE("derived coefficients match the single-y oracle at random y") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (const BivariateKernel* k : {&k25(), &k24()}) {
    for (int s = 0; s < 10; ++s) {
      const double y = unit(rng);
      const KernelPieces d = k->pieces_at(y);
      const KernelPieces o = kernel_system_oracle(k->spec(), y);
      double scale = 0.0;
      for (std::size_t i = 0; i < o.lower.size(); ++i) scale = std::max({scale, std::abs(o.lower[i]), std::abs(o.upper[i])});
      for (std::size_t i = 0; i < o.lower.size(); ++i) {
        CHECK(std::abs(d.lower[i] - o.lower[i]) <= 1e-9 * std::max(std::abs(o.lower[i]), 1e-12 * scale));
        CHECK(std::abs(d.upper[i] - o.upper[i]) <= 1e-9 * std::max(std::abs(o.upper[i]), 1e-12 * scale));
      }
    }
  }
}

TEST_CASE("kernel Gram tables are positive semidefinite") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const BivariateKernel* k : {&k25(), &k24()}) {
    std::vector<double> pts(8);
    for (auto& p : pts) p = unit(rng);
    Eigen::MatrixXd g(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) g(i, j) = k->evaluate(pts[i], pts[j]);
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("W24 derived table equals the closed form") {
  CHECK((k24().lower_table() - printed_w24_lower_table()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("printed W25 coefficients: shared exact ones") {
  // d_1 and the vanishing c_1, c_3 are printed exactly; other entries are compared in the typo report.
  CHECK(evaluate_printed(printed_w25_upper()[0], 0.5) == doctest::Approx(std::pow(0.5, 9) / 362880.0));
  CHECK(evaluate_printed(printed_w25_lower()[0], 0.5) == 0.0);
  CHECK(evaluate_printed(printed_w25_lower()[2], 0.5) == 0.0);
}
