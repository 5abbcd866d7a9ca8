#pragma once

// Parameter grid over which every construction must certify, each row with
// the order its formula predicts.

#include <map>
#include <string>
#include <vector>

#include "gallai/constructions.hpp"
#include "gallai/io.hpp"

namespace gallai::grid {

struct Row {
  std::string name;
  std::map<std::string, int> args;
  std::string target;
  int k = 0;
  int expected_order = 0;
  std::string formula;
};

inline std::vector<Row> construction_grid() {
  std::vector<Row> rows;
  auto star = [](int t, int r) { return "S" + std::to_string(t) + "^" + std::to_string(r); };
  auto pa = [](int t, int w) { return "PA" + std::to_string(t) + "," + std::to_string(w); };

  rows.push_back({"G1", {}, "S4^1", 5, 4, "4"});
  rows.push_back({"G2", {}, "S4^1", 6, 4, "4"});
  rows.push_back({"F3", {}, "S4^1", 4, 5, "5"});
  rows.push_back({"F3", {}, "S5^1", 4, 5, "5"});
  rows.push_back({"F9", {}, "S4^1", 5, 4, "4"});
  rows.push_back({"F10", {}, "S4^1", 6, 4, "4"});
  rows.push_back({"F11", {}, "S5^1", 5, 5, "5"});
  for (int t = 5; t <= 7; ++t) rows.push_back({"G3", {{"t", t}}, star(t, 1), t, t, "t"});
  for (int a = 3; a <= 5; ++a)
    for (int t = 4; t <= 6; ++t)
      for (int k = 4; k <= a; ++k) {
        if (t < a) continue;
        std::string h = t == a ? "K" + std::to_string(t) : pa(t, a);
        rows.push_back({"G4", {{"a", a}, {"t", t}, {"k", k}}, h, k, (a - 1) * (t - 1), "(a-1)(t-1)"});
      }
  for (int t = 6; t <= 9; ++t)
    for (int k = 5; k <= t - 1; ++k)
      if (2 * k >= t + 2)
        rows.push_back({"G5", {{"t", t}, {"k", k}}, "K" + std::to_string(t) + "-M", k, t, "t"});
  for (int k = 5; k <= 7; ++k)
    for (int t = 2 * k - 2; t <= 2 * k + 1; ++t) {  // p >= 2 keeps every block colored
      int delta = t - 1, p = (delta - 1) / (k - 2), q = (delta - 1) % (k - 2);
      rows.push_back({"G6", {{"k", k}, {"delta", delta}}, star(t, 1), k, (k - 1) * p + q, "(k-1)p+q"});
    }
  for (int t = 6; t <= 10; ++t)
    for (int r = 1; r <= 2; ++r) {
      int p = (t - 2) / 2, q = (t - 2) % 2;
      rows.push_back({"F1", {{"t", t}}, star(t, r), 4, 3 * p + q, "3p+q"});
      rows.push_back({"F2", {{"t", t}}, star(t, r), 4, t, "t"});
    }
  for (int t = 13; t <= 17; t += 2) {
    rows.push_back({"F4", {{"t", t}}, star(t, 3), 4, (3 * t - 7) / 2, "(3t-7)/2"});
    rows.push_back({"F5", {{"t", t}, {"r", 3}}, star(t, 3), 4, t + 2 * 3 - 3, "t+2r-3"});
  }
  for (int t = 12; t <= 16; t += 2)
    rows.push_back({"F6", {{"t", t}}, star(t, 3), 4, (3 * t - 6) / 2, "(3t-6)/2"});
  for (int t = 3; t <= 5; ++t) rows.push_back({"F7", {{"t", t}}, star(t, 1), 3, 5 * (t - 1), "5(t-1)"});
  rows.push_back({"F12", {}, pa(6, 5), 4, 23, "23"});
  rows.push_back({"F13", {}, pa(7, 5), 4, 25, "25"});
  return rows;
}

struct RowResult {
  Row row;
  int order = 0;
  bool exact = false;
  bool certified = false;
  std::string failure;

  bool ok() const { return certified && exact && order == row.expected_order; }
};

inline RowResult check_row(const Row& row) {
  RowResult out{row, 0, false, false, {}};
  try {
    auto c = construction(row.name, row.args);
    out.order = c.order();
    out.exact = c.exact() && c.declared_colors() == row.k;
    auto r = verify_witness(c, parse_target(row.target), row.name);
    out.certified = is_certificate(r);
    if (!out.certified) out.failure = std::get<WitnessFailure>(r).reason;
  } catch (const std::exception& e) {
    out.failure = e.what();
  }
  return out;
}

inline std::string describe_row(const Row& row) {
  std::string s = row.name;
  for (const auto& [key, v] : row.args) s += " " + key + "=" + std::to_string(v);
  return s + " H=" + row.target + " k=" + std::to_string(row.k);
}

}  // namespace gallai::grid
