#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vitali::testing {

struct GoldenRow {
  int d;
  long L;
  double m;
  double m_over_3d;
};

/// Rows of a (d, L_d, m_d, m_d/3^d) TSV, header skipped.
inline std::vector<GoldenRow> parse_table_tsv(std::istream& in) {
  std::vector<GoldenRow> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    GoldenRow r{};
    if (!(fields >> r.d >> r.L >> r.m >> r.m_over_3d)) throw std::runtime_error("bad golden row: " + line);
    rows.push_back(r);
  }
  return rows;
}

inline std::vector<GoldenRow> load_golden_table() {
  std::ifstream in(std::string(VITALI_GOLDEN_DIR) + "/table_d20.tsv");
  if (!in) throw std::runtime_error("golden table missing");
  return parse_table_tsv(in);
}

}  // namespace vitali::testing
