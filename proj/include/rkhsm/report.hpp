#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rkhsm/problem.hpp"
#include "rkhsm/solver.hpp"

namespace rkhsm {

enum class OutputFormat { csv, markdown, json };

std::string to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& name);

/// Bad configuration text or value. `line` is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& what, int line = 0, std::string key = {})
      : std::runtime_error(what), line_(line), key_(std::move(key)) {}
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] const std::string& key() const { return key_; }

private:
  int line_;
  std::string key_;
};

struct RunConfig {
  double m = 1.0;
  double re = 1.0;
  int n = 32;
  GridScheme grid = GridScheme::uniform;
  double tol = 1e-12;
  int max_iter = 50;
  double relaxation = 1.0;
  int oracle_steps = 2000;
  OutputFormat format = OutputFormat::csv;
  std::vector<double> eval_points = default_eval_points();

  static std::vector<double> default_eval_points();

  [[nodiscard]] ProblemParams params() const { return {m, re}; }
  /// Throws ConfigError naming the offending field.
  void validate() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Flat key=value text, one pair per line, '#' starts a comment. Keys: m, re, n, grid, tol,
/// max_iter, relaxation, oracle_steps, format, eval_points (comma separated).
RunConfig parse_config(const std::string& text);

/// Several configs in one file, separated by lines consisting of "---".
std::vector<RunConfig> parse_sweep(const std::string& text);

struct CaseRow {
  double x = 0.0;
  double f_rkhsm = 0.0;
  double f_oracle = 0.0;
  std::optional<double> paper_rk4;
  std::optional<double> paper_oham;
  std::optional<double> paper_rkhsm;
  bool paper_suspect = false;
  double abs_err = 0.0;
  double rel_err = 0.0;

  friend bool operator==(const CaseRow&, const CaseRow&) = default;
};

struct SolverMeta {
  int iterations = 0;
  bool converged = false;
  double final_update_norm = 0.0;
  double residual_norm = 0.0;
  double relaxation_used = 1.0;
  std::string diagnostic;
  int oracle_newton_iters = 0;
  double oracle_terminal_residual = 0.0;

  friend bool operator==(const SolverMeta&, const SolverMeta&) = default;
};

/// Wall-clock seconds per phase.
struct Timing {
  double solve = 0.0;
  double oracle = 0.0;
  double total = 0.0;

  friend bool operator==(const Timing&, const Timing&) = default;
};

struct CaseReport {
  RunConfig config;
  std::vector<CaseRow> rows;
  SolverMeta meta;
  Timing timing;
  /// Non-empty when the case could not be run at all (sweeps keep going).
  std::string error;

  [[nodiscard]] double max_abs_err() const;
  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

/// abs = |a - b|; rel = abs / |b|, or abs itself when b == 0.
void fill_errors(CaseRow& row);

CaseReport run_case(const RunConfig& config);

/// Cases run concurrently; output order follows input order. A throwing case yields a report
/// with `error` set instead of aborting the sweep.
std::vector<CaseReport> sweep(const std::vector<RunConfig>& configs);

std::string emit(const CaseReport& report, OutputFormat format);
std::string emit_csv(const CaseReport& report);
std::string emit_markdown(const CaseReport& report);

nlohmann::json to_json(const CaseReport& report);
CaseReport report_from_json(const nlohmann::json& j);

struct PaperRowDiff {
  double x = 0.0;
  double rkhsm_dev = 0.0;
  double oracle_dev = 0.0;
  bool suspect = false;
};

struct PaperComparison {
  std::string table_id;
  std::vector<PaperRowDiff> rows;
  /// Suspect rows excluded.
  double max_rkhsm_dev = 0.0;
  double max_oracle_dev = 0.0;
};

/// Row-by-row deviation of the report from the printed columns of `table_id`. Throws
/// std::invalid_argument on an unknown id or when (m, re) differ.
PaperComparison compare_with_paper(const CaseReport& report, const std::string& table_id);
std::string format_comparison(const PaperComparison& cmp);

/// One known discrepancy between printed formulas or data and what is implemented.
struct TypoEntry {
  std::string location;
  std::string printed;
  std::string adopted;
  std::string evidence;
};

/// Static entries plus printed-vs-derived kernel coefficient deviations at y = 0.5.
std::vector<TypoEntry> typo_report();
nlohmann::json typo_report_json();

/// Derived piece coefficients at y next to the printed closed forms and the single-y oracle.
/// `space` is "w25" or "w24".
std::string dump_kernel(const std::string& space, double y);

}  // namespace rkhsm
