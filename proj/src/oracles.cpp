#include "rkhsm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rkhsm {

OdeState squeeze_rhs(const ProblemParams& params, const OdeState& y) {
  return {y[1], y[2], y[3], params.m_squared() * y[2] - params.re * y[0] * y[3]};
}

namespace {

OdeState axpy(const OdeState& y, double a, const OdeState& k) {
  return {y[0] + a * k[0], y[1] + a * k[1], y[2] + a * k[2], y[3] + a * k[3]};
}

std::array<double, 2> terminal_defect(const Trajectory& t) {
  return {t.terminal()[0] - 1.0, t.terminal()[1]};
}

double inf_norm(const std::array<double, 2>& r) { return std::max(std::abs(r[0]), std::abs(r[1])); }

struct NewtonResult {
  Slopes slopes;
  Trajectory trajectory;
  std::array<double, 2> residual{};
  int iterations = 0;
};

NewtonResult newton_shoot(const ProblemParams& params, Slopes start, const ShootOptions& opts) {
  NewtonResult res;
  res.slopes = start;
  res.trajectory = rk4_integrate(params, res.slopes, opts.steps);
  res.residual = terminal_defect(res.trajectory);

  for (int it = 0; it < opts.max_newton; ++it) {
    if (inf_norm(res.residual) <= opts.newton_tol) return res;
    res.iterations = it + 1;

    const double h0 = opts.fd_perturbation * std::max(1.0, std::abs(res.slopes.fp0));
    const double h1 = opts.fd_perturbation * std::max(1.0, std::abs(res.slopes.f3_0));
    const auto r0 = terminal_defect(rk4_integrate(params, {res.slopes.fp0 + h0, res.slopes.f3_0}, opts.steps));
    const auto r1 = terminal_defect(rk4_integrate(params, {res.slopes.fp0, res.slopes.f3_0 + h1}, opts.steps));
    const double j00 = (r0[0] - res.residual[0]) / h0;
    const double j10 = (r0[1] - res.residual[1]) / h0;
    const double j01 = (r1[0] - res.residual[0]) / h1;
    const double j11 = (r1[1] - res.residual[1]) / h1;
    const double det = j00 * j11 - j01 * j10;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double d0 = -(j11 * res.residual[0] - j01 * res.residual[1]) / det;
    const double d1 = -(-j10 * res.residual[0] + j00 * res.residual[1]) / det;

    // Backtrack while the step makes things worse.
    double lambda = 1.0;
    for (int bt = 0; bt < 12; ++bt) {
      const Slopes trial{res.slopes.fp0 + lambda * d0, res.slopes.f3_0 + lambda * d1};
      try {
        Trajectory t = rk4_integrate(params, trial, opts.steps);
        const auto r = terminal_defect(t);
        if (inf_norm(r) < inf_norm(res.residual) || bt == 11) {
          res.slopes = trial;
          res.trajectory = std::move(t);
          res.residual = r;
          break;
        }
      } catch (const IntegrationError&) {
        if (bt == 11) throw;
      }
      lambda *= 0.5;
    }
  }
  if (inf_norm(res.residual) > opts.newton_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "shooting Newton stagnated for m=" << params.m << ", re=" << params.re << " after " << res.iterations
        << " iterations: residual (" << res.residual[0] << ", " << res.residual[1] << "), slopes ("
        << res.slopes.fp0 << ", " << res.slopes.f3_0 << ")";
    throw ShootingError(msg.str());
  }
  return res;
}

}  // namespace

double Trajectory::evaluate(double x, int deriv) const {
  if (deriv < 0 || deriv > 3) throw std::invalid_argument("trajectory derivative must be 0..3");
  if (states.empty()) throw std::logic_error("empty trajectory");
  const double h = 1.0 / steps;
  const double pos = std::clamp(x, 0.0, 1.0) * steps;
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) return states[static_cast<std::size_t>(nearest)][deriv];

  const int j = std::min(static_cast<int>(std::floor(pos)), steps - 1);
  const double t = pos - j;
  auto derivative_of = [&](const OdeState& s) {
    return deriv < 3 ? s[deriv + 1] : squeeze_rhs(params, s)[3];
  };
  const OdeState& a = states[static_cast<std::size_t>(j)];
  const OdeState& b = states[static_cast<std::size_t>(j + 1)];
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * a[deriv] + h10 * h * derivative_of(a) + h01 * b[deriv] + h11 * h * derivative_of(b);
}

Trajectory rk4_integrate(const ProblemParams& params, const Slopes& slopes, int steps) {
  if (steps < 100) throw std::invalid_argument("rk4_integrate needs at least 100 steps");
  Trajectory traj;
  traj.params = params;
  traj.steps = steps;
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  const double h = 1.0 / steps;
  OdeState y{0.0, slopes.fp0, 0.0, slopes.f3_0};
  traj.states.push_back(y);
  for (int j = 0; j < steps; ++j) {
    const OdeState k1 = squeeze_rhs(params, y);
    const OdeState k2 = squeeze_rhs(params, axpy(y, 0.5 * h, k1));
    const OdeState k3 = squeeze_rhs(params, axpy(y, 0.5 * h, k2));
    const OdeState k4 = squeeze_rhs(params, axpy(y, h, k3));
    for (int c = 0; c < 4; ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    if (!std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); })) {
      throw IntegrationError("RK4 state became non-finite at step " + std::to_string(j + 1), j + 1);
    }
    traj.states.push_back(y);
  }
  return traj;
}

std::vector<std::array<double, 5>> ShootingSolution::dense_values(int count) const {
  std::vector<std::array<double, 5>> rows;
  for (int i = 0; i <= count; ++i) {
    const double x = static_cast<double>(i) / count;
    rows.push_back({x, evaluate(x, 0), evaluate(x, 1), evaluate(x, 2), evaluate(x, 3)});
  }
  return rows;
}

ShootingSolution shoot(const ProblemParams& params, const ShootOptions& opts) {
  params.validate();
  if (opts.newton_tol <= 0.0) throw std::invalid_argument("newton_tol must be positive");
  Slopes slopes;  // exact for m = re = 0
  int total_iters = 0;
  const bool walk = opts.continuation && (params.m > 5.0 || std::abs(params.re) > 5.0);
  if (walk) {
    constexpr int stages = 8;
    for (int k = 1; k < stages; ++k) {
      const double t = static_cast<double>(k) / stages;
      const NewtonResult stage = newton_shoot({t * params.m, t * params.re}, slopes, opts);
      slopes = stage.slopes;
      total_iters += stage.iterations;
    }
  }
  NewtonResult fin = newton_shoot(params, slopes, opts);
  ShootingSolution sol;
  sol.slopes = fin.slopes;
  sol.steps = opts.steps;
  sol.newton_iters = total_iters + fin.iterations;
  sol.terminal_residual = fin.residual;
  sol.trajectory = std::move(fin.trajectory);
  return sol;
}

namespace {

// Fornberg's recursion for the weights of the `order`-th derivative at 0 on the given offsets.
std::vector<double> fd_weights(const std::vector<double>& offsets, int order) {
  const int n = static_cast<int>(offsets.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

}  // namespace

double finite_diff(const std::function<double(double)>& f, double x, int order, double h) {
  if (order < 1 || order > 4) throw std::invalid_argument("finite_diff order must be 1..4");
  if (!(h > 0.0)) throw std::invalid_argument("finite_diff step must be positive");
  const int half = (order + 1) / 2 + 1;
  std::vector<double> offsets;
  if (x - half * h >= 0.0 && x + half * h <= 1.0) {
    for (int k = -half; k <= half; ++k) offsets.push_back(k);
  } else {
    const int count = order + 4;
    const bool forward = x - half * h < 0.0;
    for (int k = 0; k < count; ++k) offsets.push_back(forward ? k : -k);
  }
  const std::vector<double> w = fd_weights(offsets, order);
  double acc = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) acc += w[i] * f(x + offsets[i] * h);
  return acc / std::pow(h, order);
}

}  // namespace rkhsm
