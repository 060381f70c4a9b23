#pragma once

// Elementary number theory shared by every module: Moebius function,
// divisor enumeration, coprime parts, cyclotomic polynomials and integer
// partitions. Everything is exact and desk-scale (trial division only).

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lambdanr {

using i64 = std::int64_t;

i64 gcd_i64(i64 a, i64 b);
// lcm with overflow check; indices in this library stay desk-scale.
i64 lcm_i64(i64 a, i64 b);

// 2-adic valuation of n >= 1.
int valuation2(i64 n);

std::vector<std::pair<i64, int>> factorize(i64 n);

int mobius(i64 n);

// Divisors of n, ascending.
std::vector<i64> divisors(i64 n);

// Largest divisor d of k with gcd(d, n) = 1.
i64 coprime_part(i64 n, i64 k);

i64 euler_phi(i64 m);

// Coefficients of the m-th cyclotomic polynomial, constant term first,
// computed by iterated exact division of u^m - 1. Results are cached.
const std::vector<mpz_class>& cyclotomic_polynomial(i64 m);

// Partitions of n as descending part lists, in the canonical class order
// used for symmetric groups ([1^n] first).
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace lambdanr
