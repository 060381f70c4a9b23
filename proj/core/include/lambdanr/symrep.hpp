#pragma once

// Representations of symmetric groups built from a multiplicative
// anti-symmetric matrix Q (q_ij q_ji = 1): the braided swap on V (x) V,
// representation matrices through generator words, the closed-form
// character k^{s1} Tr(Q)^{s2}, and closed-form exponent vectors for cycles
// and their powers. Matrices stay exact and row-sparse; everything in this
// module is a (scaled) permutation matrix, so products are cheap.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lambdanr/lambda_series.hpp"
#include "lambdanr/necklace.hpp"
#include "lambdanr/scalar.hpp"

namespace lambdanr {

// Hard cap on oracle-path matrix sizes.
inline constexpr i64 kMatrixSizeCap = 4096;

class ExactMatrix {
public:
  ExactMatrix(Ring ring, i64 dim);
  static ExactMatrix identity(Ring ring, i64 dim);

  i64 dim() const { return dim_; }
  const Ring& ring() const { return ring_; }

  void set(i64 i, i64 j, Scalar v);  // drops zeros
  Scalar get(i64 i, i64 j) const;
  const std::map<i64, Scalar>& row(i64 i) const {
    return rows_[static_cast<size_t>(i)];
  }

  ExactMatrix mul(const ExactMatrix& other) const;
  ExactMatrix kron(const ExactMatrix& other) const;
  Scalar trace() const;
  bool equal(const ExactMatrix& other) const;

private:
  Ring ring_;
  i64 dim_;
  std::vector<std::map<i64, Scalar>> rows_;
};

class MASMatrix {
public:
  // Validates q_ij q_ji = 1 (not_mas otherwise). Entries must be rational
  // or cyclotomic scalars.
  static MASMatrix validate(i64 k, std::vector<std::vector<Scalar>> entries);

  i64 k() const { return k_; }
  const Scalar& entry(i64 i, i64 j) const {
    return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  // Integer in [-k, k] by the q_ii = +-1 constraint.
  const Scalar& trace() const { return trace_; }
  Ring ring() const { return ring_; }

private:
  MASMatrix() = default;
  i64 k_ = 1;
  std::vector<std::vector<Scalar>> entries_;
  Scalar trace_;
  Ring ring_;
};

class Permutation {
public:
  // Images as a bijection of {1..n}; img[i] = sigma(i+1), 1-based values.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[static_cast<size_t>(x - 1)]; }
  std::vector<std::vector<int>> cycles() const;  // nontrivial + fixed points
  std::vector<int> cycle_type() const;           // descending partition of n
  i64 order() const;

private:
  std::vector<int> img_;
};

// Disjoint-cycle text "(1 2 3)(4 5)"; "()" is the identity. When n = 0 the
// degree is inferred as the largest point mentioned.
Permutation parse_permutation(const std::string& text, int n);

// Cycle type of sigma^k: each part l splits into gcd(l,k) parts of
// length l / gcd(l,k).
std::vector<int> power_of_cycle_type(const std::vector<int>& type, i64 k);

// P(Q,l), the representation matrix of the full cycle (1 2 ... l) on
// V^{(x) l}, built by the block recursion on F_{l,j,i}; size_limit when
// k^l exceeds the cap.
ExactMatrix p_matrix(const MASMatrix& Q, i64 l);

// rho_{Q,n}(sigma) as a product of generator matrices over a reduced word
// from a sorting pass; independent of the chosen word.
ExactMatrix rep_matrix(const MASMatrix& Q, int n, const Permutation& sigma);
// Second word strategy, used to check word independence.
ExactMatrix rep_matrix_alt_word(const MASMatrix& Q, int n,
                                const Permutation& sigma);

// chi_{Q,n}(sigma) = k^{s1} Tr(Q)^{s2} with s1/s2 the odd/even part counts
// of the cycle type (0^0 = 1).
Scalar chi_closed(const MASMatrix& Q, const std::vector<int>& cycle_type);

// Coefficients of det(I + A t) to order min(order, dim) by the exact trace
// recursion on power sums; requires a Q-algebra entry ring.
LambdaSeries det_series(const ExactMatrix& A, i64 order);

// Exponent vector of lambda_t(chi_{Q,n}) at the full cycle: sparse on the
// divisors of n, from the ghost values (k^d when 2^c | d, Tr(Q)^d
// otherwise, c the 2-adic valuation of n) by Moebius inversion. c = 0 is
// admitted with W_1 = id.
NeckVec enr_full_cycle(const MASMatrix& Q, i64 n);

// Same for sigma^r with r | n (not_divisor otherwise); equals
// F_r(enr_full_cycle(Q, n)).
NeckVec enr_cycle_power(const MASMatrix& Q, i64 n, i64 r);

struct SigmaSeriesResult {
  LambdaSeries series;
  NeckVec exponents;  // lam_enr of the series, truncated to the order
};

// lambda_t(chi_{Q,n})(sigma): per disjoint cycle the closed form, combined
// with the Lambda-multiplication.
SigmaSeriesResult lam_series_sigma(const MASMatrix& Q, int n,
                                   const Permutation& sigma, i64 order);

struct RelationsReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_ok = true;
};

// F o F = id, the Yang-Baxter identity, and the S_n presentation relations
// on generator matrices.
RelationsReport relations_check(const MASMatrix& Q, int n);

}  // namespace lambdanr
