#include <doctest.h>

#include "hpt/sequences.hpp"
#include "hpt/triangle.hpp"
#include "test_helpers.hpp"

using namespace hpt;
using hpt::testing::binomial_row;
using hpt::testing::build_rows;
using hpt::testing::values_of;

TEST_CASE("mosaic validation") {
  CHECK_THROWS_AS(Mosaic(3), std::invalid_argument);
  CHECK_THROWS_AS(Mosaic(-1), std::invalid_argument);
  CHECK(Mosaic(4).q() == 4);
  CHECK_FALSE(Mosaic(4).hyperbolic());
  CHECK(Mosaic(5).hyperbolic());
}

TEST_CASE("descendant counts") {
  CHECK(descendant_count(NodeKind::Winger, Mosaic(6)) == 2);
  CHECK(descendant_count(NodeKind::TypeA, Mosaic(6)) == 4);
  CHECK(descendant_count(NodeKind::TypeB, Mosaic(4)) == 3);
  CHECK(descendant_count(NodeKind::Base, Mosaic(9)) == 2);
}

TEST_CASE("initial rows") {
  auto [row0, row1] = initial_rows(Mosaic(5));
  CHECK(row0.n == 0);
  CHECK(row0.nodes.size() == 1);
  CHECK(row0.nodes[0].kind == NodeKind::Base);
  CHECK(row0.nodes[0].value == 1);
  CHECK(row0.nodes[0].asc_count == 0);

  CHECK(row1.n == 1);
  REQUIRE(row1.nodes.size() == 2);
  for (const Node& node : row1.nodes) {
    CHECK(node.kind == NodeKind::Winger);
    CHECK(node.value == 1);
    CHECK(node.asc_count == 1);
    CHECK(node.asc[0] == 0);
  }
}

TEST_CASE("next_row reproduces the hand-built {4,6} rows") {
  auto rows = build_rows(6, 4);
  CHECK(values_of(rows[2]) == std::vector<BigInt>{1, 2, 1});
  CHECK(values_of(rows[3]) == std::vector<BigInt>{1, 3, 2, 2, 3, 1});
  CHECK(values_of(rows[4]) ==
        std::vector<BigInt>{1, 4, 3, 3, 5, 2, 2, 2, 4, 2, 2, 2, 5, 3, 3, 4, 1});
  CHECK(rows[4].nodes.size() == 17);

  BigInt sum3 = 0, sum4 = 0;
  for (const auto& v : values_of(rows[3])) sum3 += v;
  for (const auto& v : values_of(rows[4])) sum4 += v;
  CHECK(sum3 == 12);  // 2q
  CHECK(sum4 == 48);  // 2q^2 - 4q
}

TEST_CASE("q=4 reproduces classical Pascal rows") {
  auto rows = build_rows(4, 20);
  for (long n = 0; n <= 20; ++n)
    CHECK(values_of(rows[n]) == binomial_row(n));
}

TEST_CASE("build_stream summary and determinism") {
  auto count = [](int q, long n_max) {
    BuildSummary s = build_stream(Mosaic(q), n_max, [](const Row&) {});
    return s;
  };
  BuildSummary s = count(6, 5);
  CHECK(s.rows_emitted == 6);
  CHECK(s.total_cells == 87);

  s = count(5, 0);
  CHECK(s.rows_emitted == 1);
  CHECK(s.total_cells == 1);

  auto rows = build_rows(10, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].nodes.size() == 1);
  CHECK(rows[1].nodes.size() == 2);
  CHECK(rows[2].nodes.size() == 3);

  // identical inputs, identical streams
  auto again = build_rows(10, 2);
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(values_of(rows[i]) == values_of(again[i]));
}

TEST_CASE("cell cap aborts with the offending row") {
  CHECK_THROWS_AS(build_stream(Mosaic(6), 10, [](const Row&) {}, 50),
                  CapExceededError);
  try {
    build_stream(Mosaic(6), 10, [](const Row&) {}, 50);
  } catch (const CapExceededError& e) {
    CHECK(e.row() == 5);  // cumulative 87 > 50 first at row 5
  }
}

TEST_CASE("element lookup") {
  CHECK(element(Mosaic(6), 4, 4) == 5);
  CHECK(element(Mosaic(7), 9, 0) == 1);
  CHECK(element(Mosaic(4), 4, 2) == 6);
  CHECK_THROWS_AS(element(Mosaic(6), 2, 3), std::out_of_range);
  CHECK_THROWS_AS(element(Mosaic(6), 1, -1), std::out_of_range);
}

TEST_CASE("element symmetry") {
  const Mosaic mosaic(7);
  for (long n : {3L, 5L, 6L}) {
    const long size = row_count(mosaic, n).convert_to<long>();
    for (long k = 0; k < size; ++k)
      CHECK(element(mosaic, n, k) == element(mosaic, n, size - 1 - k));
  }
}

TEST_CASE("row structure invariants across q") {
  for (int q : {4, 5, 6, 7, 9, 12}) {
    const Mosaic mosaic(q);
    auto rows = build_rows(q, 6);
    for (const Row& row : rows) {
      CHECK(BigInt(row.nodes.size()) == row_count(mosaic, row.n));
      const std::size_t len = row.nodes.size();
      for (std::size_t i = 0; i < len; ++i) {
        CHECK(row.nodes[i].value == row.nodes[len - 1 - i].value);
        CHECK(row.nodes[i].kind == row.nodes[len - 1 - i].kind);
        CHECK(row.nodes[i].value >= 1);
      }
      if (row.n == 0) continue;
      const Row& prev = rows[row.n - 1];
      std::uint32_t watermark = 0;
      for (const Node& node : row.nodes) {
        REQUIRE(node.asc_count >= 1);
        BigInt from_asc = 0;
        for (int a = 0; a < node.asc_count; ++a) {
          CHECK(node.asc[a] < prev.nodes.size());
          from_asc += prev.nodes[node.asc[a]].value;
        }
        if (node.asc_count == 2) CHECK(node.asc[0] < node.asc[1]);
        CHECK(node.asc[0] >= watermark);
        watermark = node.asc[0];
        if (node.kind == NodeKind::TypeA) {
          CHECK(node.asc_count == 2);
          CHECK(node.value == from_asc);
        } else {
          CHECK(node.asc_count == 1);
          CHECK(node.value == from_asc);
        }
      }
      CHECK(row.nodes.front().kind == NodeKind::Winger);
      CHECK(row.nodes.back().kind == NodeKind::Winger);
      CHECK(row.nodes.front().value == 1);
    }
  }
}
