// Command-line front end: solve one case, run sweeps, reproduce reference tables, dump kernels,
// and run the acceptance checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rkhsm/acceptance.hpp"
#include "rkhsm/reference_data.hpp"
#include "rkhsm/report.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kNotConverged = 3, kVerifyFailed = 4 };

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kConfigError;
  }
  out << text;
  return kOk;
}

std::string emit_many(const std::vector<rkhsm::CaseReport>& reports, rkhsm::OutputFormat format) {
  if (format == rkhsm::OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(rkhsm::to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : reports) {
    if (format == rkhsm::OutputFormat::csv) {
      out += "# m=" + std::to_string(r.config.m) + " re=" + std::to_string(r.config.re) + " n=" +
             std::to_string(r.config.n) + "\n";
      if (!r.error.empty()) {
        out += "# error: " + r.error + "\n";
        continue;
      }
    }
    out += rkhsm::emit(r, format);
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproducing-kernel solver for the MHD squeeze-flow boundary value problem"};
  app.require_subcommand(1);

  rkhsm::RunConfig cfg;
  std::string grid = "uniform";
  std::string format = "csv";
  std::string out_path;

  auto* solve_cmd = app.add_subcommand("solve", "Solve one (m, re) case and compare with the shooting oracle");
  solve_cmd->add_option("--m", cfg.m, "Hartmann number (>= 0)");
  solve_cmd->add_option("--re", cfg.re, "Reynolds number");
  solve_cmd->add_option("--n", cfg.n, "Number of collocation points");
  solve_cmd->add_option("--tol", cfg.tol, "Fixed-point tolerance");
  solve_cmd->add_option("--max-iter", cfg.max_iter, "Fixed-point iteration limit");
  solve_cmd->add_option("--relaxation", cfg.relaxation, "Relaxation factor in (0, 1]");
  solve_cmd->add_option("--oracle-steps", cfg.oracle_steps, "RK-4 steps for the shooting oracle");
  solve_cmd->add_option("--grid", grid, "uniform | chebyshev");
  solve_cmd->add_option("--format", format, "csv | markdown | json");
  solve_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string config_path;
  std::string sweep_format;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run every case of a config file (blocks separated by ---)");
  sweep_cmd->add_option("--config", config_path, "Config file")->required();
  sweep_cmd->add_option("--format", sweep_format, "Override the per-case output format");
  sweep_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");

  std::string table_id;
  int table_n = 32;
  auto* table_cmd = app.add_subcommand("table", "Reproduce one reference table");
  table_cmd->add_option("--id", table_id, "Table id 4.1 .. 4.12")->required();
  table_cmd->add_option("--n", table_n, "Number of collocation points");
  table_cmd->add_option("--format", format, "csv | markdown | json");
  table_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string space = "w25";
  double kernel_y = 0.5;
  auto* kernel_cmd = app.add_subcommand("kernel", "Dump kernel coefficients next to the printed forms");
  kernel_cmd->add_option("--space", space, "w25 | w24");
  kernel_cmd->add_option("--y", kernel_y, "Kernel centre in (0, 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*solve_cmd) {
      cfg.grid = rkhsm::grid_scheme_from_string(grid);
      cfg.format = rkhsm::output_format_from_string(format);
      cfg.validate();
      const rkhsm::CaseReport report = rkhsm::run_case(cfg);
      if (const int rc = write_output(rkhsm::emit(report, cfg.format), out_path); rc != kOk) return rc;
      if (!report.meta.converged) {
        std::cerr << "warning: solver did not converge: " << report.meta.diagnostic << "\n";
        return kNotConverged;
      }
      return kOk;
    }

    if (*sweep_cmd) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read '" << config_path << "'\n";
        return kConfigError;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      const auto configs = rkhsm::parse_sweep(buf.str());
      const auto fmt = sweep_format.empty() ? configs.front().format : rkhsm::output_format_from_string(sweep_format);
      const auto reports = rkhsm::sweep(configs);
      if (const int rc = write_output(emit_many(reports, fmt), out_path); rc != kOk) return rc;
      for (const auto& r : reports) {
        if (!r.error.empty() || !r.meta.converged) return kNotConverged;
      }
      return kOk;
    }

    if (*verify_cmd) {
      bool all = true;
      for (const auto& r : rkhsm::run_acceptance()) {
        std::cout << rkhsm::format_result(r) << std::endl;
        all = all && r.passed;
      }
      return all ? kOk : kVerifyFailed;
    }

    if (*table_cmd) {
      const rkhsm::ReferenceCase& ref = rkhsm::reference_for_table(table_id);
      rkhsm::RunConfig tcfg;
      tcfg.m = ref.params.m;
      tcfg.re = ref.params.re;
      tcfg.n = table_n;
      tcfg.format = rkhsm::output_format_from_string(format);
      tcfg.validate();
      const rkhsm::CaseReport report = rkhsm::run_case(tcfg);
      const rkhsm::PaperComparison cmp = rkhsm::compare_with_paper(report, table_id);
      std::string text = rkhsm::emit(report, tcfg.format);
      if (tcfg.format == rkhsm::OutputFormat::markdown) text += "\n```\n" + rkhsm::format_comparison(cmp) + "```\n";
      if (const int rc = write_output(text, out_path); rc != kOk) return rc;
      if (tcfg.format != rkhsm::OutputFormat::markdown) std::cerr << rkhsm::format_comparison(cmp);
      return report.meta.converged ? kOk : kNotConverged;
    }

    if (*kernel_cmd) {
      std::cout << rkhsm::dump_kernel(space, kernel_y);
      return kOk;
    }
  } catch (const rkhsm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotConverged;
  }
  return kOk;
}
