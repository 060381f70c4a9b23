#include "lambdanr/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "lambdanr/error.hpp"

namespace lambdanr {

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  const i64 g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  if (l > static_cast<__int128>(INT64_MAX))
    raise(Errc::invalid_argument, "lcm overflow");
  return static_cast<i64>(l);
}

int valuation2(i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "valuation2: n must be positive");
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "factorize: n must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "mobius: n must be positive");
  int primes = 0;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    ++primes;
  }
  return primes % 2 == 0 ? 1 : -1;
}

std::vector<i64> divisors(i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "divisors: n must be positive");
  std::vector<i64> out;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 coprime_part(i64 n, i64 k) {
  if (n < 1 || k < 1)
    raise(Errc::invalid_argument, "coprime_part: arguments must be positive");
  // Strip from k every prime it shares with n.
  i64 d = k;
  for (;;) {
    const i64 g = std::gcd(d, n);
    if (g == 1) return d;
    while (d % g == 0) d /= g;
  }
}

i64 euler_phi(i64 m) {
  i64 out = 1;
  for (auto [p, e] : factorize(m)) {
    i64 pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    out *= pe * (p - 1);
  }
  return out;
}

namespace {

// Exact division of integer polynomials (constant term first); the divisor
// must be monic and must divide evenly.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
  const auto dn = static_cast<i64>(num.size()) - 1;
  const auto dd = static_cast<i64>(den.size()) - 1;
  std::vector<mpz_class> quo(static_cast<size_t>(dn - dd + 1), mpz_class(0));
  for (i64 i = dn; i >= dd; --i) {
    const mpz_class c = num[static_cast<size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<size_t>(i - dd)] = c;
    for (i64 j = 0; j <= dd; ++j)
      num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
  }
  return quo;
}

}  // namespace

namespace {
std::mutex cyclo_mutex;
std::map<i64, std::vector<mpz_class>> cyclo_cache;
}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(i64 m) {
  if (m < 1) raise(Errc::invalid_argument, "cyclotomic_polynomial: m >= 1");
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    if (auto it = cyclo_cache.find(m); it != cyclo_cache.end())
      return it->second;
  }
  // Phi_m = (u^m - 1) / prod_{d | m, d < m} Phi_d; the recursion runs
  // outside the lock, map nodes are reference-stable.
  std::vector<mpz_class> num(static_cast<size_t>(m) + 1, mpz_class(0));
  num.front() = -1;
  num.back() = 1;
  for (i64 d : divisors(m)) {
    if (d == m) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  return cyclo_cache.emplace(m, std::move(num)).first->second;
}

namespace {

void partitions_ascending(int n, int min_part, std::vector<int>& acc,
                          std::vector<std::vector<int>>& out) {
  if (n == 0) {
    std::vector<int> parts(acc.rbegin(), acc.rend());  // descending
    out.push_back(std::move(parts));
    return;
  }
  for (int p = min_part; p <= n; ++p) {
    acc.push_back(p);
    partitions_ascending(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  if (n < 1) raise(Errc::invalid_argument, "partitions_of: n must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  partitions_ascending(n, 1, acc, out);
  return out;
}

}  // namespace lambdanr
