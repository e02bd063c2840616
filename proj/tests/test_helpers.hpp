#pragma once

#include <vector>

#include "hpt/triangle.hpp"

namespace hpt::testing {

inline std::vector<Row> build_rows(int q, long n_max,
                                   std::uint64_t max_cells = kDefaultMaxCells) {
  std::vector<Row> rows;
  build_stream(Mosaic(q), n_max, [&](const Row& r) { rows.push_back(r); },
               max_cells);
  return rows;
}

inline std::vector<BigInt> values_of(const Row& row) {
  std::vector<BigInt> values;
  for (const Node& node : row.nodes) values.push_back(node.value);
  return values;
}

// classical Pascal row, additive oracle independent of the triangle code
inline std::vector<BigInt> binomial_row(long n) {
  std::vector<BigInt> row{1};
  for (long i = 0; i < n; ++i) {
    std::vector<BigInt> next{1};
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      next.push_back(row[j] + row[j + 1]);
    next.push_back(1);
    row = std::move(next);
  }
  return row;
}

}  // namespace hpt::testing
