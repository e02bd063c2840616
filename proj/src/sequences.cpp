#include "hpt/sequences.hpp"

#include <stdexcept>

namespace hpt {

namespace {

// pow with the convention base^0 = 1 for every base, 0^0 included.
BigInt int_pow(BigInt base, long exp) {
  BigInt result = 1;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result *= base;
    base *= base;
  }
  return result;
}

BigInt iterate_ternary(const BigInt& c2, const BigInt& c1, const BigInt& c0,
                       BigInt z0, BigInt z1, BigInt z2, long steps) {
  for (long i = 0; i < steps; ++i) {
    BigInt z3 = c2 * z2 + c1 * z1 + c0 * z0;
    z0 = std::move(z1);
    z1 = std::move(z2);
    z2 = std::move(z3);
  }
  return z0;
}

}  // namespace

BigInt TernaryRecurrence::at(long n) const {
  if (n < start_index)
    throw std::out_of_range("index below recurrence start");
  return iterate_ternary(c2, c1, c0, initial[0], initial[1], initial[2],
                         n - start_index);
}

std::pair<BigInt, BigInt> InfluenceCoefficients::apply(
    const BigInt& sub_a, const BigInt& sub_b) const {
  return {matrix[0][0] * sub_a + matrix[0][1] * sub_b + winger_constants[0],
          matrix[1][0] * sub_a + matrix[1][1] * sub_b + winger_constants[1]};
}

BigInt row_count(const Mosaic& mosaic, long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  const long q = mosaic.q();
  switch (n) {
    case 0:
      return 1;
    case 1:
      return 2;
    case 2:
      return 3;
    case 3:
      return q;
  }
  // s_n = (q-1) s_{n-1} - (q-1) s_{n-2} + s_{n-3}
  TernaryRecurrence rec{q - 1, -(q - 1), 1, 1, {2, 3, q}};
  return rec.at(n);
}

BigInt row_sum(const Mosaic& mosaic, long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  const long q = mosaic.q();
  switch (n) {
    case 0:
      return 1;
    case 1:
      return 2;
    case 2:
      return 4;
    case 3:
      return 2 * q;
  }
  // s^_n = q s^_{n-1} - (q+1) s^_{n-2} + 2 s^_{n-3}
  TernaryRecurrence rec{q, -(q + 1), 2, 1, {2, 4, 2 * q}};
  return rec.at(n);
}

BigInt alt_sum_closed(const Mosaic& mosaic, long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  if (n == 0) return 1;
  const long q = mosaic.q();
  if (mosaic.even_q()) {
    if (n % 2 == 1) return 0;
    const long t = n / 2;
    return -2 * int_pow(5 - q, t - 1) + 2;
  }
  if (n % 3 == 1) return 0;
  if (n % 3 == 2) {
    const long t = (n + 1) / 3;
    return int_pow(-2, t) * int_pow(q - 5, t - 1) + 2;
  }
  const long t = n / 3;
  return 2 * int_pow(-2, t) * int_pow(q - 5, t - 1) + 2;
}

BigInt alt_sum_via_recurrence(const Mosaic& mosaic, long n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  if (n == 0) return 1;
  const long q = mosaic.q();
  if (q == 4) return 0;  // classical Pascal, every alternating sum vanishes

  if (mosaic.even_q()) {
    if (n % 2 == 1) return 0;
    // s~_{n+6} = (6-q) s~_{n+4} + (q-5) s~_{n+2}, order 2 on even indices
    BigInt a = 0;              // s~_2
    BigInt b = 2 * (q - 4);    // s~_4
    for (long i = 2; i < n; i += 2) {
      BigInt c = (6 - q) * b + (q - 5) * a;
      a = std::move(b);
      b = std::move(c);
    }
    return a;
  }

  if (n % 3 == 1) return 0;
  // s~_{n+9} = (11-2q) s~_{n+6} + (2q-10) s~_{n+3}, per residue class mod 3
  BigInt a, b;
  long base;
  if (n % 3 == 2) {
    a = 0;             // s~_2
    b = 4 * q - 18;    // s~_5
    base = 2;
  } else {
    a = -2;            // s~_3
    b = 8 * q - 38;    // s~_6
    base = 3;
  }
  for (long i = base; i < n; i += 3) {
    BigInt c = (11 - 2 * q) * b + (2 * q - 10) * a;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

BigInt weighted_alt_sum(const Mosaic& mosaic, long n, const BigInt& v,
                        const BigInt& w) {
  const BigInt numerator =
      (v + w) * row_sum(mosaic, n) + (v - w) * alt_sum_closed(mosaic, n);
  if (numerator % 2 != 0)
    throw std::logic_error("row sum and alternating sum parity mismatch");
  return numerator / 2;
}

std::array<BigInt, 3> lemma_reduce(const BigInt& u1, const BigInt& v1,
                                   const BigInt& w1, const BigInt& u2,
                                   const BigInt& v2, const BigInt& w2) {
  (void)w1;
  (void)w2;  // the constant terms are absorbed by the eigenvalue-1 factor
  if (u2 * v1 == 0)
    throw std::invalid_argument("lemma reduction requires u2*v1 != 0");
  return {u1 + v2 + 1, -u1 * v2 + u2 * v1 - u1 - v2, u1 * v2 - u2 * v1};
}

InfluenceCoefficients influence_coefficients(const Mosaic& mosaic) {
  const long q = mosaic.q();
  if (q < 5)
    throw std::invalid_argument(
        "influence coefficients are defined for q >= 5");
  InfluenceCoefficients coeffs;
  if (mosaic.even_q()) {
    coeffs.parity = Parity::Even;
    coeffs.step = 2;
    coeffs.matrix[0][0] = -2 * (q - 4);
    coeffs.matrix[0][1] = -2 * (q - 3);
    coeffs.matrix[1][0] = q - 4;
    coeffs.matrix[1][1] = q - 3;
    coeffs.winger_constants[0] = -2;
    coeffs.winger_constants[1] = 0;
  } else {
    coeffs.parity = Parity::Odd;
    coeffs.step = 3;
    coeffs.matrix[0][0] = -4 * (q - 4);
    coeffs.matrix[0][1] = -4 * (q - 3);
    coeffs.matrix[1][0] = 2 * (q - 4);
    coeffs.matrix[1][1] = 2 * (q - 3);
    coeffs.winger_constants[0] = -6;
    coeffs.winger_constants[1] = 2;
  }
  return coeffs;
}

}  // namespace hpt
