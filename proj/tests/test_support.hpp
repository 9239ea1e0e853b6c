#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "msqa/fuzzy.hpp"

// Shared helpers for the test suites. The Riemann centroid below is the
// independent check used against the analytic implementation: it only touches
// eval_membership and plain accumulation, never the segment machinery.

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(MSQA_TEST_DATA_DIR) + "/" + name;
}

inline std::string config_path(const std::string& name) {
  return std::string(MSQA_CONFIG_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct ExpectedRow {
  std::string service;
  double modifiability = 0.0;
  double testability = 0.0;
  double maintainability = 0.0;
  bool flag = false;
};

inline std::vector<ExpectedRow> load_expected(const std::string& path) {
  std::ifstream in(path);
  std::vector<ExpectedRow> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    ExpectedRow row;
    std::string cell;
    std::getline(cells, row.service, ',');
    std::getline(cells, cell, ',');
    row.modifiability = std::stod(cell);
    std::getline(cells, cell, ',');
    row.testability = std::stod(cell);
    std::getline(cells, cell, ',');
    row.maintainability = std::stod(cell);
    std::getline(cells, cell, ',');
    row.flag = cell == "true";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline double riemann_centroid(const msqa::fuzzy::AggregatedOutput& agg,
                               const msqa::fuzzy::LinguisticVariable& var, double step) {
  double num = 0.0, den = 0.0;
  for (double x = var.lo; x <= var.hi + step * 0.5; x += step) {
    double mu = 0.0;
    for (const auto& [level, strength] : agg.strengths) {
      const auto* mf = var.find_level(level);
      const double m = std::min(strength, msqa::fuzzy::eval_membership(*mf, std::min(x, var.hi)));
      mu = std::max(mu, m);
    }
    num += x * mu;
    den += mu;
  }
  return num / den;
}

}  // namespace testsupport
