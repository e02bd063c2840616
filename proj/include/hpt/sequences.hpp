#pragma once

#include <array>

#include "hpt/mosaic.hpp"

namespace hpt {

// Coefficients and seeds of z_{n+3} = c2*z_{n+2} + c1*z_{n+1} + c0*z_n.
struct TernaryRecurrence {
  BigInt c2, c1, c0;
  long start_index = 0;
  std::array<BigInt, 3> initial{};

  BigInt at(long n) const;
};

enum class Parity { Even, Odd };

// Per-step linear map of the type-restricted subsum pair, plus the
// additive contribution of the two wingers.
struct InfluenceCoefficients {
  Parity parity;
  int step;                          // 2 for even q, 3 for odd q
  BigInt matrix[2][2];               // maps (subA, subB) at n to n+step
  BigInt winger_constants[2];

  std::pair<BigInt, BigInt> apply(const BigInt& sub_a,
                                  const BigInt& sub_b) const;
};

// s_n: number of vertices in row n.  s_0 = 1 by convention.
BigInt row_count(const Mosaic& mosaic, long n);

// s_hat_n: sum of the values in row n.  s_hat_0 = 1 by convention.
BigInt row_sum(const Mosaic& mosaic, long n);

// s_tilde_n: alternating sum of row n, closed form.
BigInt alt_sum_closed(const Mosaic& mosaic, long n);

// Same quantity through the merged ternary recurrences.
BigInt alt_sum_via_recurrence(const Mosaic& mosaic, long n);

// Row sum with weight v on even positions and w on odd positions.
BigInt weighted_alt_sum(const Mosaic& mosaic, long n, const BigInt& v,
                        const BigInt& w);

// Reduces the coupled system x' = u1*x + v1*y + w1, y' = u2*x + v2*y + w2
// to the ternary recurrence both component sequences satisfy.
// Requires u2*v1 != 0.
std::array<BigInt, 3> lemma_reduce(const BigInt& u1, const BigInt& v1,
                                   const BigInt& w1, const BigInt& u2,
                                   const BigInt& v2, const BigInt& w2);

// The subsum-system coefficients for q >= 5 (q = 4 degenerates).
InfluenceCoefficients influence_coefficients(const Mosaic& mosaic);

}  // namespace hpt
