#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hpt/mosaic.hpp"

namespace hpt {

enum class NodeKind : std::uint8_t { Base, Winger, TypeA, TypeB };

const char* kind_code(NodeKind k);  // "Base", "W", "A", "B"

// One triangle vertex. The value counts shortest paths from the base
// vertex; ascendants index into the previous row.
struct Node {
  NodeKind kind;
  BigInt value;
  std::uint32_t asc[2] = {0, 0};
  std::uint8_t asc_count = 0;
};

struct Row {
  long n = 0;
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
};

inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;

// Raised when a build would pass the configured cell cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(long row, std::uint64_t cells, std::uint64_t cap);

  long row() const { return row_; }
  std::uint64_t cells() const { return cells_; }

 private:
  long row_;
  std::uint64_t cells_;
};

// Downward edge count by vertex kind: wingers 2, type A q-2, type B q-1.
int descendant_count(NodeKind kind, const Mosaic& mosaic);

// Row 0 (single base vertex) and row 1 (two wingers linked to the base).
std::pair<Row, Row> initial_rows(const Mosaic& mosaic);

// Grows row n+1 from row n (n >= 1) by the neighbor-edge merging rule.
// Refuses to build a successor larger than max_cells.
Row next_row(const Mosaic& mosaic, const Row& row,
             std::uint64_t max_cells = kDefaultMaxCells);

struct BuildSummary {
  long rows_emitted = 0;
  std::uint64_t total_cells = 0;
};

using RowSink = std::function<void(const Row&)>;

// Streams rows 0..n_max to the sink in order, keeping a two-row window.
// Both per-row and cumulative cell counts are checked against max_cells.
BuildSummary build_stream(const Mosaic& mosaic, long n_max, const RowSink& sink,
                          std::uint64_t max_cells = kDefaultMaxCells);

// Value of the k-th node of row n, by streaming construction.
BigInt element(const Mosaic& mosaic, long n, long k,
               std::uint64_t max_cells = kDefaultMaxCells);

}  // namespace hpt
