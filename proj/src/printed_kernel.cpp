#include "rkhsm/printed_kernel.hpp"

#include <cmath>

namespace rkhsm {

const std::vector<std::vector<PrintedTerm>>& printed_w25_lower() {
  static const std::vector<std::vector<PrintedTerm>> table = {
      // c1
      {},
      // c2
      {{-1537, 378141715, 9}, {9374, 378141715, 8}, {-3932, 75628343, 7}, {608, 54020245, 6},
       {8006, 54020245, 5}, {8006, 10804049, 4}, {-14592, 10804049, 3}, {5201, 10804049, 1}},
      // c3
      {},
      // c4
      {{16061, 13613101740, 9}, {38, 1134425145, 8}, {-48487, 1134425145, 7}, {10758, 54020245, 6},
       {-145157, 324121470, 5}, {-145157, 64824294, 4}, {1509137, 388945764, 3}, {-14592, 10804049, 1}},
      // c5
      {{1243, 10890481392, 9}, {-4003, 217809627840, 8}, {-107867, 27226203480, 7}, {145157, 7778915280, 6},
       {-81901, 1944728820, 5}, {9493633, 6223132224, 4}, {-145157, 64824294, 3}, {8006, 10804049, 1}},
      // c6
      {{1243, 54452406960, 9}, {-4003, 1089048139200, 8}, {-107867, 136131017400, 7}, {145157, 38894576400, 6},
       {-81901, 9723644100, 5}, {9493633, 31115661120, 4}, {-145157, 324121470, 3}, {8006, 54020245, 1}},
      // c7
      {{-16061, 1633572208800, 9}, {-19, 68065508700, 8}, {48487, 136131017400, 7}, {-1793, 1080404900, 6},
       {145157, 38894576400, 5}, {145157, 7778915280, 4}, {-1509137, 46673491680, 3}, {608, 54020245, 1}},
      // c8
      {{3631, 1905834243600, 9}, {983, 762333697440, 8}, {-18797, 238229280450, 7}, {48487, 136131017400, 6},
       {-107867, 136131017400, 5}, {-107867, 27226203480, 4}, {-48487, 1134425145, 3}, {1, 10080, 2},
       {-3932, 75628343, 1}},
      // c9
      {{1537, 15246673948800, 9}, {-4687, 7623336974400, 8}, {983, 7623336974400, 7}, {-19, 68065508700, 6},
       {-4003, 1089048139200, 5}, {-4003, 217809627840, 4}, {38, 1134425145, 3}, {-743, 62231322240, 1}},
      // c10
      {{-323, 4288127048100, 9}, {1537, 15246673948800, 8}, {3631, 1905834243600, 7}, {-16061, 1633572208800, 6},
       {1243, 54452406960, 5}, {1243, 10890481392, 4}, {16061, 13613101740, 3}, {-1537, 378141715, 1},
       {1, 362880, 0}},
  };
  return table;
}

const std::vector<std::vector<PrintedTerm>>& printed_w25_upper() {
  static const std::vector<std::vector<PrintedTerm>> table = {
      // d1
      {{1, 362880, 9}},
      // d2
      {{-1537, 378141715, 9}, {-743, 62231322240, 8}, {-3932, 75628343, 7}, {608, 54020245, 6},
       {8006, 54020245, 5}, {8006, 10804049, 4}, {-14592, 10804049, 3}, {5201, 10804049, 1}},
      // d3
      {{1, 10080, 7}},
      // d4
      {{16061, 13613101740, 9}, {38, 1134425145, 8}, {-48487, 1134425145, 7}, {-1509137, 46673491680, 6},
       {-145157, 324121470, 5}, {-145157, 64824294, 4}, {1509137, 388945764, 3}, {-14592, 10804049, 1}},
      // d5
      {{1243, 10890481392, 9}, {-4003, 217809627840, 8}, {-107867, 27226203480, 7}, {145157, 7778915280, 6},
       {9493633, 31115661120, 5}, {9493633, 6223132224, 4}, {-145157, 64824294, 3}, {8006, 10804049, 1}},
      // d6
      {{1243, 54452406960, 9}, {-4003, 1089048139200, 8}, {-107867, 136131017400, 7}, {145157, 38894576400, 6},
       {-81901, 9723644100, 5}, {-81901, 1944728820, 4}, {-145157, 324121470, 3}, {8006, 54020245, 1}},
      // d7
      {{-16061, 1633572208800, 9}, {-19, 68065508700, 8}, {48487, 136131017400, 7}, {-1793, 1080404900, 6},
       {145157, 38894576400, 5}, {145157, 7778915280, 4}, {10758, 54020245, 3}, {608, 54020245, 1}},
      // d8
      {{3631, 1905834243600, 9}, {983, 762333697440, 8}, {-18797, 238229280450, 7}, {48487, 136131017400, 6},
       {-107867, 136131017400, 5}, {-107867, 27226203480, 4}, {-48487, 1134425145, 3}, {-3932, 75628343, 1}},
      // d9
      {{1537, 15246673948800, 9}, {-4687, 7623336974400, 8}, {983, 7623336974400, 7}, {-19, 68065508700, 6},
       {-4003, 1089048139200, 5}, {-4003, 217809627840, 4}, {38, 1134425145, 3}, {9374, 378141715, 1}},
      // d10
      {{-323, 4288127048100, 9}, {1537, 15246673948800, 8}, {3631, 1905834243600, 7}, {-16061, 1633572208800, 6},
       {1243, 54452406960, 5}, {1243, 10890481392, 4}, {16061, 13613101740, 3}, {-1537, 378141715, 1}},
  };
  return table;
}

Eigen::MatrixXd printed_w24_lower_table() {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(8, 8);
  t(0, 0) = 1.0;
  t(1, 1) = 1.0;
  t(2, 2) = 1.0 / 4.0;
  t(3, 3) = 1.0 / 36.0;
  t(4, 3) = 1.0 / 144.0;
  t(5, 2) = -1.0 / 240.0;
  t(6, 1) = 1.0 / 720.0;
  t(7, 0) = -1.0 / 5040.0;
  return t;
}

double evaluate_printed(const std::vector<PrintedTerm>& terms, double y) {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.numerator / t.denominator * std::pow(y, t.power);
  return acc;
}

}  // namespace rkhsm
