#pragma once

// The necklace ring Nr(R): componentwise addition and the gcd/lcm
// convolution product alpha_n = sum_{lcm(i,j)=n} gcd(i,j) x_i y_j.
//
// Two representations:
//   Sparse     — finite support, exact at every index (zero off support);
//                no zero coefficients are stored.
//   Truncated  — entries 1..N only.
//
// The ghost map phi(x)_n = sum_{d|n} d x_d sends a sparse vector to a
// Periodic ghost vector with period lcm(supp); its inverse is Moebius
// inversion x_n = (1/n) sum_{d|n} mu(n/d) a_d over a Q-algebra.

#include <map>
#include <set>
#include <vector>

#include "lambdanr/ghost.hpp"
#include "lambdanr/scalar.hpp"

namespace lambdanr {

class NeckVec {
public:
  static NeckVec zero(Ring ring);
  // u * delta_n: the sparse vector with single entry u at index n.
  static NeckVec delta(const Scalar& u, i64 n);
  static NeckVec sparse(Ring ring, std::map<i64, Scalar> entries);
  static NeckVec truncated(Ring ring, std::vector<Scalar> values);

  bool is_sparse() const { return sparse_; }
  i64 horizon() const;  // truncated only
  const Ring& ring() const { return ring_; }

  // Exact everywhere for sparse vectors; bounded by the horizon otherwise.
  Scalar at(i64 n) const;
  // Key set of a sparse vector; throws unknown_support for truncated.
  std::vector<i64> support() const;
  const std::map<i64, Scalar>& entries() const;   // sparse only
  const std::vector<Scalar>& values() const;      // truncated only

  NeckVec coerced(const Ring& target) const;

private:
  NeckVec() = default;
  Ring ring_;
  bool sparse_ = true;
  std::map<i64, Scalar> entries_;
  std::vector<Scalar> vals_;
};

NeckVec nr_add(const NeckVec& x, const NeckVec& y);
NeckVec nr_mul(const NeckVec& x, const NeckVec& y);
// Alternative multiplication strategy over a Q-algebra: transform through
// phi, multiply pointwise, invert. Agrees with nr_mul exactly; exists for
// the strategy benchmark.
NeckVec nr_mul_ghost_route(const NeckVec& x, const NeckVec& y);
NeckVec nr_scale(const NeckVec& x, const Scalar& s);

// V/V'/F/T/W with the paper's necklace-side semantics. Sparse stays sparse
// and exact for all five; truncated horizons propagate as V -> N*r,
// F -> floor(N/r), T -> sparse when N >= r, W -> floor(N/r)*r. Division in
// V'/W over Z is refused entry-wise unless exact (non_divisible).
NeckVec nr_apply(const NeckVec& x, Op op);

// supp(x) contained in the divisors of r.
bool nr_is_truncation_image(const NeckVec& x, i64 r);

// phi; Sparse -> Periodic(lcm supp), Truncated(N) -> Truncated(N).
GhostVec nr_phi(const NeckVec& x);

// Exact inverse: requires a Q-algebra ring and a Periodic(c) input that is
// in the image of T_c (not_t_shaped otherwise); the result is sparse with
// support in the divisors of c.
NeckVec nr_phi_inv_exact(const GhostVec& a);
// Prefix inverse to horizon h.
NeckVec nr_phi_inv_truncated(const GhostVec& a, i64 h);

// Necklace polynomial vector M(l): m_n = (1/n) sum_{d|n} mu(n/d) l^d, with
// ghost components l^n. `l` must be an integer or rational scalar.
NeckVec necklace_poly_truncated(const Scalar& l, i64 h);
// The exact sparse T_c(M(l)) supported on divisors of c.
NeckVec necklace_poly_mod(const Scalar& l, i64 c);

// Computes phi(x), finds the minimal period c of the resulting periodic
// vector and asserts supp(x) is contained in divisors(c); returns c.
// A failed assertion would contradict the finite-support theorem and is
// reported as certificate_violation.
i64 finite_support_certificate(const NeckVec& x);

// (T_r(x) . T_s(y))_{lcm(r,s)} through the factorized Frobenius/Moebius
// form; requires a Q-algebra ring when the shared-exponent part a2 > 1.
Scalar truncated_product_entry(const NeckVec& x, const NeckVec& y, i64 r, i64 s);
// Same entry by direct convolution; the independent reference path.
Scalar truncated_product_entry_direct(const NeckVec& x, const NeckVec& y,
                                      i64 r, i64 s);

NeckVec nr_map(const NeckVec& x, const RingHom& hom);

bool nr_equal(const NeckVec& x, const NeckVec& y);

}  // namespace lambdanr
