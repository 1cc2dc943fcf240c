#include "rkhsm/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "rkhsm/kernel.hpp"
#include "rkhsm/oracles.hpp"
#include "rkhsm/printed_kernel.hpp"
#include "rkhsm/reference_data.hpp"

namespace rkhsm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

std::string at_line(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : ""; }

double parse_real(const std::string& key, const std::string& raw, int line) {
  const std::string v = trim(raw);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError(at_line(line) + "cannot parse '" + v + "' as a finite number for key '" + key + "'",
                      line, key);
  }
  return out;
}

int parse_int(const std::string& key, const std::string& raw, int line) {
  const std::string v = trim(raw);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(at_line(line) + "cannot parse '" + v + "' as an integer for key '" + key + "'", line, key);
  }
  return out;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
  if (key == "m") {
    cfg.m = parse_real(key, value, line);
  } else if (key == "re") {
    cfg.re = parse_real(key, value, line);
  } else if (key == "n") {
    cfg.n = parse_int(key, value, line);
  } else if (key == "grid") {
    try {
      cfg.grid = grid_scheme_from_string(trim(value));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(at_line(line) + e.what(), line, key);
    }
  } else if (key == "tol") {
    cfg.tol = parse_real(key, value, line);
  } else if (key == "max_iter") {
    cfg.max_iter = parse_int(key, value, line);
  } else if (key == "relaxation") {
    cfg.relaxation = parse_real(key, value, line);
  } else if (key == "oracle_steps") {
    cfg.oracle_steps = parse_int(key, value, line);
  } else if (key == "format") {
    try {
      cfg.format = output_format_from_string(trim(value));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(at_line(line) + e.what(), line, key);
    }
  } else if (key == "eval_points") {
    cfg.eval_points.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.eval_points.push_back(parse_real(key, item, line));
  } else {
    throw ConfigError(at_line(line) + "unknown key '" + key + "'", line, key);
  }
}

// Validation with the line of the key that set the value, when known.
void validate_with_lines(const RunConfig& cfg, const std::vector<std::pair<std::string, int>>& seen) {
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    int line = 0;
    for (const auto& [k, l] : seen) {
      if (k == e.key()) line = l;
    }
    if (line == 0) throw;
    throw ConfigError(at_line(line) + e.what(), line, e.key());
  }
}

RunConfig parse_block(const std::vector<std::pair<int, std::string>>& lines) {
  RunConfig cfg;
  std::vector<std::pair<std::string, int>> seen;
  for (const auto& [line_no, raw] : lines) {
    std::string text = raw;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(at_line(line_no) + "expected key=value, got '" + text + "'", line_no);
    }
    const std::string key = trim(text.substr(0, eq));
    for (const auto& [k, l] : seen) {
      if (k == key) {
        throw ConfigError(at_line(line_no) + "key '" + key + "' repeated (first on line " + std::to_string(l) + ")",
                          line_no, key);
      }
    }
    apply_key(cfg, key, text.substr(eq + 1), line_no);
    seen.emplace_back(key, line_no);
  }
  validate_with_lines(cfg, seen);
  return cfg;
}

std::vector<std::pair<int, std::string>> numbered_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::stringstream ss(text);
  std::string line;
  int no = 0;
  while (std::getline(ss, line)) out.emplace_back(++no, line);
  return out;
}

const ReferenceRow* reference_row(const ReferenceCase* ref, double x) {
  if (ref == nullptr) return nullptr;
  for (const auto& r : ref->rows) {
    if (std::abs(r.x - x) < 1e-12) return &r;
  }
  return nullptr;
}

std::string opt_g17(const std::optional<double>& v) { return v ? g17(*v) : std::string(); }

std::string render_x(double x) {
  const double tenths = x * 10.0;
  if (std::abs(tenths - std::round(tenths)) < 1e-12) return fmt("%.1f", x);
  return fmt("%.6g", x);
}

const char* kConventionNote =
    "F runs from 0 on the symmetry plane to 1 on the plate. Velocities in units of the plate "
    "speed: u_z = -F(z), u_r = (r/2) F'(z).";

nlohmann::json opt_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::optional<double> json_opt(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

bool is_w25_typo(double derived, double printed) {
  return std::abs(derived - printed) > 1e-12 + 1e-9 * std::abs(derived);
}

}  // namespace

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::json: return "json";
  }
  return "csv";
}

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + name + "' (expected csv, markdown or json)");
}

std::vector<double> RunConfig::default_eval_points() {
  std::vector<double> pts;
  for (int i = 0; i <= 10; ++i) pts.push_back(i / 10.0);
  return pts;
}

void RunConfig::validate() const {
  if (!std::isfinite(m)) throw ConfigError("m must be finite", 0, "m");
  if (m < 0.0) throw ConfigError("m must be nonnegative (got " + g17(m) + ")", 0, "m");
  if (!std::isfinite(re)) throw ConfigError("re must be finite", 0, "re");
  if (n < 4) throw ConfigError("n must be at least 4 (got " + std::to_string(n) + ")", 0, "n");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tol must be positive and finite", 0, "tol");
  if (max_iter < 1) throw ConfigError("max_iter must be at least 1", 0, "max_iter");
  if (!(relaxation > 0.0 && relaxation <= 1.0)) {
    throw ConfigError("relaxation must lie in (0, 1] (got " + g17(relaxation) + ")", 0, "relaxation");
  }
  if (oracle_steps < 100) throw ConfigError("oracle_steps must be at least 100", 0, "oracle_steps");
  if (eval_points.empty()) throw ConfigError("eval_points must not be empty", 0, "eval_points");
  for (double x : eval_points) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw ConfigError("eval_points must lie in [0, 1] (got " + g17(x) + ")", 0, "eval_points");
    }
  }
}

RunConfig parse_config(const std::string& text) { return parse_block(numbered_lines(text)); }

std::vector<RunConfig> parse_sweep(const std::string& text) {
  std::vector<RunConfig> out;
  std::vector<std::pair<int, std::string>> block;
  bool block_has_content = false;
  auto flush = [&] {
    if (block_has_content) out.push_back(parse_block(block));
    block.clear();
    block_has_content = false;
  };
  for (auto& entry : numbered_lines(text)) {
    if (trim(entry.second) == "---") {
      flush();
      continue;
    }
    std::string body = entry.second;
    if (const auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
    if (!trim(body).empty()) block_has_content = true;
    block.push_back(std::move(entry));
  }
  flush();
  if (out.empty()) throw ConfigError("sweep file contains no cases");
  return out;
}

double CaseReport::max_abs_err() const {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_err);
  return worst;
}

void fill_errors(CaseRow& row) {
  row.abs_err = std::abs(row.f_rkhsm - row.f_oracle);
  row.rel_err = row.f_oracle != 0.0 ? row.abs_err / std::abs(row.f_oracle) : row.abs_err;
}

CaseReport run_case(const RunConfig& config) {
  config.validate();
  const auto start = Clock::now();
  CaseReport report;
  report.config = config;
  const ProblemParams params = config.params();

  auto t = Clock::now();
  const RkhsmSolution sol = solve(params, CollocationGrid::make(config.n, config.grid),
                                  SolveOptions{config.tol, config.max_iter, config.relaxation});
  report.meta.iterations = sol.iterations;
  report.meta.converged = sol.converged;
  report.meta.final_update_norm = sol.final_update_norm;
  report.meta.relaxation_used = sol.relaxation_used;
  report.meta.diagnostic = sol.diagnostic;
  report.meta.residual_norm = residual_norm(sol, 64);
  report.timing.solve = seconds_since(t);

  t = Clock::now();
  ShootOptions shoot_opts;
  shoot_opts.steps = config.oracle_steps;
  const ShootingSolution oracle = shoot(params, shoot_opts);
  report.meta.oracle_newton_iters = oracle.newton_iters;
  report.meta.oracle_terminal_residual =
      std::max(std::abs(oracle.terminal_residual[0]), std::abs(oracle.terminal_residual[1]));
  report.timing.oracle = seconds_since(t);

  const ReferenceCase* ref = find_reference(params);
  for (double x : config.eval_points) {
    CaseRow row;
    row.x = x;
    row.f_rkhsm = eval_solution(sol, x, 0);
    row.f_oracle = oracle.evaluate(x, 0);
    if (const ReferenceRow* pr = reference_row(ref, x)) {
      row.paper_rk4 = pr->rk4;
      row.paper_oham = pr->oham;
      row.paper_rkhsm = pr->rkhsm;
      row.paper_suspect = pr->suspect;
    }
    fill_errors(row);
    report.rows.push_back(row);
  }
  report.timing.total = seconds_since(start);
  return report;
}

std::vector<CaseReport> sweep(const std::vector<RunConfig>& configs) {
  if (configs.empty()) throw std::invalid_argument("sweep needs at least one configuration");
  std::vector<CaseReport> out(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        out[i] = run_case(configs[i]);
      } catch (const std::exception& e) {
        out[i] = CaseReport{};
        out[i].config = configs[i];
        out[i].error = e.what();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t count = std::min(configs.size(), hw);
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k + 1 < count; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::string emit_csv(const CaseReport& report) {
  std::string out = "x,f_rkhsm,f_oracle,f_paper_rk4,f_paper_oham,abs_err,rel_err\n";
  for (const auto& r : report.rows) {
    out += g17(r.x) + ',' + g17(r.f_rkhsm) + ',' + g17(r.f_oracle) + ',' + opt_g17(r.paper_rk4) + ',' +
           opt_g17(r.paper_oham) + ',' + g17(r.abs_err) + ',' + g17(r.rel_err) + '\n';
  }
  return out;
}

std::string emit_markdown(const CaseReport& report) {
  const RunConfig& c = report.config;
  std::ostringstream os;
  os << "### m = " << fmt("%g", c.m) << ", Re = " << fmt("%g", c.re) << " (n = " << c.n << ", "
     << to_string(c.grid) << " grid)\n\n";
  if (!report.error.empty()) {
    os << "**error:** " << report.error << "\n";
    return os.str();
  }
  os << "| x | RK-4 (oracle) | RKHSM | RK-4 (printed) | OHAM (printed) | Absolute Error | Relative Error |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    os << "| " << render_x(r.x) << " | " << fmt("%.6f", r.f_oracle) << " | " << fmt("%.6f", r.f_rkhsm) << " | "
       << (r.paper_rk4 ? fmt("%.6f", *r.paper_rk4) : "") << " | "
       << (r.paper_oham ? fmt("%.6f", *r.paper_oham) : "") << " | " << fmt("%.3e", r.abs_err) << " | "
       << fmt("%.3e", r.rel_err) << (r.paper_suspect ? " (suspect printed row)" : "") << " |\n";
  }
  os << "\niterations " << report.meta.iterations << (report.meta.converged ? " (converged)" : " (NOT converged)")
     << ", final update " << fmt("%.3e", report.meta.final_update_norm) << ", residual norm "
     << fmt("%.3e", report.meta.residual_norm) << ", time " << fmt("%.3f", report.timing.total) << " s\n\n";
  os << kConventionNote << "\n";
  return os.str();
}

nlohmann::json to_json(const CaseReport& report) {
  const RunConfig& c = report.config;
  nlohmann::json j;
  j["config"] = {{"m", c.m},
                 {"re", c.re},
                 {"n", c.n},
                 {"grid", to_string(c.grid)},
                 {"tol", c.tol},
                 {"max_iter", c.max_iter},
                 {"relaxation", c.relaxation},
                 {"oracle_steps", c.oracle_steps},
                 {"format", to_string(c.format)},
                 {"eval_points", c.eval_points}};
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    j["rows"].push_back({{"x", r.x},
                         {"f_rkhsm", r.f_rkhsm},
                         {"f_oracle", r.f_oracle},
                         {"f_paper_rk4", opt_json(r.paper_rk4)},
                         {"f_paper_oham", opt_json(r.paper_oham)},
                         {"f_paper_rkhsm", opt_json(r.paper_rkhsm)},
                         {"paper_suspect", r.paper_suspect},
                         {"abs_err", r.abs_err},
                         {"rel_err", r.rel_err}});
  }
  const SolverMeta& m = report.meta;
  j["solver_meta"] = {{"iterations", m.iterations},
                      {"converged", m.converged},
                      {"final_update_norm", m.final_update_norm},
                      {"residual_norm", m.residual_norm},
                      {"relaxation_used", m.relaxation_used},
                      {"diagnostic", m.diagnostic},
                      {"oracle_newton_iters", m.oracle_newton_iters},
                      {"oracle_terminal_residual", m.oracle_terminal_residual}};
  j["timing"] = {{"solve", report.timing.solve}, {"oracle", report.timing.oracle}, {"total", report.timing.total}};
  j["error"] = report.error;
  j["conventions"] = kConventionNote;
  j["reference_data_version"] = kReferenceDataVersion;
  j["typo_report"] = typo_report_json();
  return j;
}

CaseReport report_from_json(const nlohmann::json& j) {
  CaseReport r;
  const auto& c = j.at("config");
  r.config.m = c.at("m").get<double>();
  r.config.re = c.at("re").get<double>();
  r.config.n = c.at("n").get<int>();
  r.config.grid = grid_scheme_from_string(c.at("grid").get<std::string>());
  r.config.tol = c.at("tol").get<double>();
  r.config.max_iter = c.at("max_iter").get<int>();
  r.config.relaxation = c.at("relaxation").get<double>();
  r.config.oracle_steps = c.at("oracle_steps").get<int>();
  r.config.format = output_format_from_string(c.at("format").get<std::string>());
  r.config.eval_points = c.at("eval_points").get<std::vector<double>>();
  for (const auto& row : j.at("rows")) {
    CaseRow cr;
    cr.x = row.at("x").get<double>();
    cr.f_rkhsm = row.at("f_rkhsm").get<double>();
    cr.f_oracle = row.at("f_oracle").get<double>();
    cr.paper_rk4 = json_opt(row.at("f_paper_rk4"));
    cr.paper_oham = json_opt(row.at("f_paper_oham"));
    cr.paper_rkhsm = json_opt(row.at("f_paper_rkhsm"));
    cr.paper_suspect = row.at("paper_suspect").get<bool>();
    cr.abs_err = row.at("abs_err").get<double>();
    cr.rel_err = row.at("rel_err").get<double>();
    r.rows.push_back(cr);
  }
  const auto& m = j.at("solver_meta");
  r.meta.iterations = m.at("iterations").get<int>();
  r.meta.converged = m.at("converged").get<bool>();
  r.meta.final_update_norm = m.at("final_update_norm").get<double>();
  r.meta.residual_norm = m.at("residual_norm").get<double>();
  r.meta.relaxation_used = m.at("relaxation_used").get<double>();
  r.meta.diagnostic = m.at("diagnostic").get<std::string>();
  r.meta.oracle_newton_iters = m.at("oracle_newton_iters").get<int>();
  r.meta.oracle_terminal_residual = m.at("oracle_terminal_residual").get<double>();
  const auto& t = j.at("timing");
  r.timing.solve = t.at("solve").get<double>();
  r.timing.oracle = t.at("oracle").get<double>();
  r.timing.total = t.at("total").get<double>();
  r.error = j.at("error").get<std::string>();
  return r;
}

std::string emit(const CaseReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return emit_csv(report);
    case OutputFormat::markdown: return emit_markdown(report);
    case OutputFormat::json: return to_json(report).dump(2) + "\n";
  }
  return emit_csv(report);
}

PaperComparison compare_with_paper(const CaseReport& report, const std::string& table_id) {
  const ReferenceCase& ref = reference_for_table(table_id);
  if (!(ref.params == report.config.params())) {
    throw std::invalid_argument("table " + table_id + " is for m = " + fmt("%g", ref.params.m) + ", re = " +
                                fmt("%g", ref.params.re) + " but the report has m = " + fmt("%g", report.config.m) +
                                ", re = " + fmt("%g", report.config.re));
  }
  PaperComparison cmp;
  cmp.table_id = table_id;
  for (const auto& pr : ref.rows) {
    const auto it = std::find_if(report.rows.begin(), report.rows.end(),
                                 [&](const CaseRow& r) { return std::abs(r.x - pr.x) < 1e-12; });
    if (it == report.rows.end()) continue;
    PaperRowDiff d{pr.x, std::abs(it->f_rkhsm - pr.rkhsm), std::abs(it->f_oracle - pr.rk4), pr.suspect};
    if (!d.suspect) {
      cmp.max_rkhsm_dev = std::max(cmp.max_rkhsm_dev, d.rkhsm_dev);
      cmp.max_oracle_dev = std::max(cmp.max_oracle_dev, d.oracle_dev);
    }
    cmp.rows.push_back(d);
  }
  return cmp;
}

std::string format_comparison(const PaperComparison& cmp) {
  std::ostringstream os;
  os << "table " << cmp.table_id << ": deviation from printed columns\n";
  os << "  x      |RKHSM - printed RKHSM|  |oracle - printed RK-4|\n";
  for (const auto& d : cmp.rows) {
    os << "  " << render_x(d.x) << "    " << fmt("%.3e", d.rkhsm_dev) << "             " << fmt("%.3e", d.oracle_dev)
       << (d.suspect ? "   suspect, excluded" : "") << "\n";
  }
  os << "  max (excluding suspect rows): RKHSM " << fmt("%.3e", cmp.max_rkhsm_dev) << ", oracle "
     << fmt("%.3e", cmp.max_oracle_dev) << "\n";
  return os.str();
}

std::vector<TypoEntry> typo_report() {
  std::vector<TypoEntry> out = {
      {"linear operator, inertial term", "re g(x) with no derivative factor", "re g(x) u'''(x)",
       "substituting F = u + g into the ODE and collecting terms linear in u"},
      {"right-hand side, lift fourth derivative", "e^(x-1) (x^3 + 8x^2 + 8x - 2)", "e^(x-1) (x^3 + 8x^2 + 8x - 8)",
       "product-rule expansion of g'''' for g = e^(x-1) x (x-2)^2; g''''(0) = -8/e"},
      {"W25 kernel, tenth derivative", "stated both as -delta(x-y) and +delta(x-y)",
       "ninth x-derivative jumps by -1 across x = y", "reproducing-property test passes with this sign"},
      {"W25 kernel, coefficient index range", "i = 1, ..., 12", "i = 1, ..., 10 per piece",
       "degree-9 pieces carry ten coefficients"},
      {"reference table m = 1, re = 10, x = 0.7 and 0.8", "RK-4 0.901576 printed at both points",
       "both rows flagged suspect and excluded from comparisons",
       "monotone F cannot repeat; the OHAM column reads 0.956954 at x = 0.8"},
  };
  const BivariateKernel& k = w25_kernel();
  const KernelPieces derived = k.pieces_at(0.5);
  const auto& lower = printed_w25_lower();
  const auto& upper = printed_w25_upper();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const double printed = evaluate_printed(lower[i], 0.5);
    if (is_w25_typo(derived.lower[i], printed)) {
      out.push_back({"W25 kernel c" + std::to_string(i + 1) + "(y) at y = 0.5", g17(printed), g17(derived.lower[i]),
                     "condition-system solve"});
    }
  }
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const double printed = evaluate_printed(upper[i], 0.5);
    if (is_w25_typo(derived.upper[i], printed)) {
      out.push_back({"W25 kernel d" + std::to_string(i + 1) + "(y) at y = 0.5", g17(printed), g17(derived.upper[i]),
                     "condition-system solve"});
    }
  }
  return out;
}

nlohmann::json typo_report_json() {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : typo_report()) {
    j.push_back({{"location", t.location}, {"printed", t.printed}, {"adopted", t.adopted}, {"evidence", t.evidence}});
  }
  return j;
}

std::string dump_kernel(const std::string& space, double y) {
  if (!(y > 0.0 && y < 1.0)) throw std::invalid_argument("kernel dump needs y in (0, 1)");
  SpaceSpec spec;
  if (space == "w25") {
    spec = SpaceSpec::w25();
  } else if (space == "w24") {
    spec = SpaceSpec::w24();
  } else {
    throw std::invalid_argument("unknown space '" + space + "' (expected w25 or w24)");
  }
  const BivariateKernel kernel = space == "w25" ? w25_kernel() : derive_kernel(spec);
  const KernelPieces derived = kernel.pieces_at(y);
  const KernelPieces oracle = kernel_system_oracle(spec, y);
  const int count = kernel.coefficient_count();

  std::vector<double> printed_lower(count, 0.0), printed_upper(count, 0.0);
  if (space == "w25") {
    for (int i = 0; i < count; ++i) {
      printed_lower[i] = evaluate_printed(printed_w25_lower()[i], y);
      printed_upper[i] = evaluate_printed(printed_w25_upper()[i], y);
    }
  } else {
    // Lower piece: sum_b T(a, b) y^b multiplies x^a. Upper piece by symmetry.
    const Eigen::MatrixXd t = printed_w24_lower_table();
    for (int a = 0; a < count; ++a) {
      for (int b = 0; b < count; ++b) {
        printed_lower[a] += t(a, b) * std::pow(y, b);
        printed_upper[b] += t(a, b) * std::pow(y, a);
      }
    }
  }

  std::ostringstream os;
  os << spec.name() << " kernel piece coefficients at y = " << g17(y) << "\n";
  os << "coef   derived                  printed                  oracle                   |derived-printed|\n";
  std::vector<std::string> typos;
  auto emit_row = [&](const std::string& label, double d, double p, double o) {
    const double dev = std::abs(d - p);
    os << label << std::string(7 - std::min<std::size_t>(label.size(), 6), ' ') << fmt("%-24.16e ", d)
       << fmt("%-24.16e ", p) << fmt("%-24.16e ", o) << fmt("%.3e", dev) << "\n";
    if (is_w25_typo(d, p)) typos.push_back(label + ": printed " + g17(p) + ", derived " + g17(d));
  };
  const char lower_name = space == "w25" ? 'c' : 'a';
  const char upper_name = space == "w25" ? 'd' : 'b';
  for (int i = 0; i < count; ++i) {
    emit_row(std::string(1, lower_name) + std::to_string(i + 1), derived.lower[i], printed_lower[i], oracle.lower[i]);
  }
  for (int i = 0; i < count; ++i) {
    emit_row(std::string(1, upper_name) + std::to_string(i + 1), derived.upper[i], printed_upper[i], oracle.upper[i]);
  }
  os << "\nsuspected typos:\n";
  if (typos.empty()) os << "  none\n";
  for (const auto& t : typos) os << "  " << t << "\n";
  return os.str();
}

}  // namespace rkhsm
