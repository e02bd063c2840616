#pragma once

#include <string>
#include <vector>

#include "hpt/analysis.hpp"
#include "hpt/triangle.hpp"

namespace hpt {

// Defaults follow the figure legend: type A red circles, type B cyan
// diamonds, wingers white diamonds.
struct DotStyle {
  std::string color_a = "red";
  std::string color_b = "cyan";
  std::string color_winger = "white";
  std::string shape_a = "circle";
  std::string shape_b = "diamond";
  std::string shape_winger = "diamond";
  bool rank_by_row = true;
};

// Directed-graph rendering; one node per vertex (id "n{n}_k{k}"), one
// edge per ascendant link.  Rows must be consecutive from row 0.
std::string to_dot(const std::vector<Row>& rows, const DotStyle& style = {});

enum class TableFormat { Plain, Csv, Json };

TableFormat parse_format(const std::string& token);

std::string rows_to_table(int q, const std::vector<Row>& rows,
                          TableFormat format);

// weights, when given, add a weighted-sum column ((v+w)s^ + (v-w)s~)/2.
std::string report_to_table(const SumsReport& report, TableFormat format,
                            const BigInt* weight_v = nullptr,
                            const BigInt* weight_w = nullptr);

// Minimal cell model for the CSV surface (ascendants are not part of it).
struct CsvCell {
  long n;
  long k;
  std::string type;
  std::string value;
};

std::vector<CsvCell> parse_csv(const std::string& text);
std::string emit_csv(const std::vector<CsvCell>& cells);

}  // namespace hpt
