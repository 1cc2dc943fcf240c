#pragma once

#include <string>
#include <vector>

namespace rkhsm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The eleven acceptance checks, each at its fixed tolerance.
std::vector<CriterionResult> run_acceptance();

/// Single check by id (1..11); throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

/// "PASS [id] name: detail" / "FAIL ...".
std::string format_result(const CriterionResult& r);

}  // namespace rkhsm
