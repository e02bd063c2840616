#pragma once

#include <string>
#include <vector>

#include "hpt/sequences.hpp"
#include "hpt/triangle.hpp"

namespace hpt {

// Alternating sum of a row, index 0 taken positive.
BigInt alt_sum_direct(const Row& row);

// Alternating subsums restricted to type-A and type-B positions,
// signs from global position parity; wingers excluded.
std::pair<BigInt, BigInt> type_subsums(const Row& row);

enum class CheckOutcome { Pass, Fail, Skipped };

struct CheckResult {
  CheckOutcome outcome;
  std::string identity;
  long n = 0;
  std::string expected;
  std::string actual;
};

// s~_n = s~_n^A + s~_n^B + 2, asserted only on odd-size rows.
CheckResult check_decomposition(const Row& row);

// (subA, subB) at n+step against the influence map applied at n.
// Both rows must have odd size; others are skipped.
CheckResult check_subsum_recurrence(const Mosaic& mosaic, const Row& from,
                                    const Row& to);

// s~_n = -s~_n^B.  Asserted for even q; observe-only for odd q.
CheckResult check_remark_negB(const Mosaic& mosaic, const Row& row);

enum : unsigned {
  kSuiteRows = 1u << 0,
  kSuiteSums = 1u << 1,
  kSuiteSubsums = 1u << 2,
  kSuiteLemma = 1u << 3,
  kSuiteAll = kSuiteRows | kSuiteSums | kSuiteSubsums | kSuiteLemma,
};

struct ReportEntry {
  long n;
  BigInt s;
  BigInt s_hat;
  BigInt alt_direct;
  BigInt alt_closed;
  BigInt sub_a;
  BigInt sub_b;
};

struct Mismatch {
  std::string identity;
  long n;
  std::string expected;  // decimal strings, exact
  std::string actual;
};

struct SuiteStats {
  std::string name;
  long passed = 0;
  long skipped = 0;
  long failed = 0;
};

struct SumsReport {
  int q;
  std::vector<ReportEntry> entries;
  std::vector<Mismatch> failures;
  std::vector<SuiteStats> suites;
  std::vector<std::string> observations;  // Remark-2 data for odd q
  bool truncated = false;
  long truncated_at = -1;

  bool all_passed() const { return failures.empty(); }
};

// Streams the triangle once and runs the selected identity suites.
SumsReport verify_range(const Mosaic& mosaic, long n_max,
                        unsigned suites = kSuiteAll,
                        std::uint64_t max_cells = kDefaultMaxCells);

// 100 random coupled systems reduced by the lemma; both component
// sequences must satisfy the ternary recurrence with zero residual.
// Returns failure descriptions (empty on success).
std::vector<std::string> lemma_property_suite(unsigned seed = 0x5eed,
                                              int systems = 100,
                                              int terms = 12);

}  // namespace hpt
