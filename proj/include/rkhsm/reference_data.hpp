#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rkhsm/problem.hpp"

namespace rkhsm {

inline constexpr const char* kReferenceDataVersion = "1.0";

/// One printed row. RK-4 and OHAM carry 6 printed decimals; the RKHSM column is kept verbatim
/// as text (up to 20 digits) alongside its binary64 value.
struct ReferenceRow {
  double x = 0.0;
  double rk4 = 0.0;
  std::optional<double> oham;
  std::string rkhsm_text;
  double rkhsm = 0.0;
  bool suspect = false;
  std::string note;
};

/// One (m, re) case and the two printed tables that share it.
struct ReferenceCase {
  ProblemParams params;
  std::string results_table;     // RK-4 vs RKHSM with error columns
  std::string comparison_table;  // RK-4 vs OHAM vs RKHSM
  std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceCase>& reference_cases();

/// Case matching (m, re) exactly, or nullptr.
const ReferenceCase* find_reference(const ProblemParams& params);

/// Case for a table id "4.1" .. "4.12"; throws std::invalid_argument otherwise.
const ReferenceCase& reference_for_table(const std::string& table_id);

std::vector<std::string> reference_table_ids();

}  // namespace rkhsm
