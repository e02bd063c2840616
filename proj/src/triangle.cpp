#include "hpt/triangle.hpp"

#include <string>
#include <utility>

namespace hpt {

const char* kind_code(NodeKind k) {
  switch (k) {
    case NodeKind::Base:
      return "Base";
    case NodeKind::Winger:
      return "W";
    case NodeKind::TypeA:
      return "A";
    case NodeKind::TypeB:
      return "B";
  }
  return "?";
}

CapExceededError::CapExceededError(long row, std::uint64_t cells,
                                   std::uint64_t cap)
    : std::runtime_error("cell cap exceeded at row " + std::to_string(row) +
                         ": " + std::to_string(cells) + " cells > cap " +
                         std::to_string(cap)),
      row_(row),
      cells_(cells) {}

int descendant_count(NodeKind kind, const Mosaic& mosaic) {
  switch (kind) {
    case NodeKind::Base:
    case NodeKind::Winger:
      return 2;
    case NodeKind::TypeA:
      return mosaic.q() - 2;
    case NodeKind::TypeB:
      return mosaic.q() - 1;
  }
  throw std::invalid_argument("unknown node kind");
}

std::pair<Row, Row> initial_rows(const Mosaic& mosaic) {
  (void)mosaic;  // validated at construction
  Row row0;
  row0.n = 0;
  row0.nodes.push_back(Node{NodeKind::Base, 1, {0, 0}, 0});

  Row row1;
  row1.n = 1;
  row1.nodes.push_back(Node{NodeKind::Winger, 1, {0, 0}, 1});
  row1.nodes.push_back(Node{NodeKind::Winger, 1, {0, 0}, 1});
  return {std::move(row0), std::move(row1)};
}

namespace {

std::uint64_t successor_size(const Mosaic& mosaic, const Row& row) {
  std::uint64_t size = 2;  // the two new wingers
  for (const Node& node : row.nodes)
    size += static_cast<std::uint64_t>(descendant_count(node.kind, mosaic) - 2);
  size += row.nodes.size() - 1;  // one type-A merge per neighbor pair
  return size;
}

}  // namespace

Row next_row(const Mosaic& mosaic, const Row& row, std::uint64_t max_cells) {
  if (row.n < 1 || row.nodes.size() < 2)
    throw std::invalid_argument("next_row requires a row with n >= 1");

  const std::uint64_t size = successor_size(mosaic, row);
  if (size > max_cells)
    throw CapExceededError(row.n + 1, size, max_cells);

  Row out;
  out.n = row.n + 1;
  out.nodes.reserve(size);
  out.nodes.push_back(Node{NodeKind::Winger, 1, {0, 0}, 1});

  const std::uint32_t last = static_cast<std::uint32_t>(row.nodes.size()) - 1;
  for (std::uint32_t i = 0; i <= last; ++i) {
    const Node& v = row.nodes[i];
    const int copies = descendant_count(v.kind, mosaic) - 2;
    for (int c = 0; c < copies; ++c)
      out.nodes.push_back(Node{NodeKind::TypeB, v.value, {i, 0}, 1});
    if (i < last) {
      const Node& w = row.nodes[i + 1];
      out.nodes.push_back(Node{NodeKind::TypeA, v.value + w.value, {i, i + 1}, 2});
    }
  }
  out.nodes.push_back(Node{NodeKind::Winger, 1, {last, 0}, 1});
  return out;
}

BuildSummary build_stream(const Mosaic& mosaic, long n_max, const RowSink& sink,
                          std::uint64_t max_cells) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

  BuildSummary summary;
  auto emit = [&](const Row& row) {
    const std::uint64_t cells = row.nodes.size();
    if (cells > max_cells || summary.total_cells + cells > max_cells)
      throw CapExceededError(row.n, summary.total_cells + cells, max_cells);
    summary.total_cells += cells;
    ++summary.rows_emitted;
    sink(row);
  };

  auto [row0, row1] = initial_rows(mosaic);
  emit(row0);
  if (n_max == 0) return summary;
  emit(row1);

  Row current = std::move(row1);
  for (long n = 2; n <= n_max; ++n) {
    Row next = next_row(mosaic, current, max_cells);
    emit(next);
    current = std::move(next);
  }
  return summary;
}

BigInt element(const Mosaic& mosaic, long n, long k, std::uint64_t max_cells) {
  if (n < 0 || k < 0) throw std::out_of_range("element index out of range");

  BigInt value;
  bool found = false;
  build_stream(
      mosaic, n,
      [&](const Row& row) {
        if (row.n != n) return;
        if (static_cast<std::size_t>(k) >= row.nodes.size())
          throw std::out_of_range("element index " + std::to_string(k) +
                                  " out of range for row of size " +
                                  std::to_string(row.nodes.size()));
        value = row.nodes[static_cast<std::size_t>(k)].value;
        found = true;
      },
      max_cells);
  if (!found) throw std::out_of_range("row not reached");
  return value;
}

}  // namespace hpt
