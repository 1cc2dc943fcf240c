#pragma once

#include <vector>

#include <Eigen/Dense>

namespace rkhsm {

/// One printed rational term num/den * y^power.
struct PrintedTerm {
  double numerator;
  double denominator;
  int power;
};

/// Coefficient polynomials c_1..c_10 (x <= y) and d_1..d_10 (x > y) of the W_2^5 kernel exactly
/// as they appear in print. Known to contain transcription errors; used for comparison only.
const std::vector<std::vector<PrintedTerm>>& printed_w25_lower();
const std::vector<std::vector<PrintedTerm>>& printed_w25_upper();

/// Printed closed-form W_2^4 kernel as a lower-region table: entry (a, b) multiplies x^a y^b.
Eigen::MatrixXd printed_w24_lower_table();

double evaluate_printed(const std::vector<PrintedTerm>& terms, double y);

}  // namespace rkhsm
