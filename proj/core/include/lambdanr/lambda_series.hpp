#pragma once

// The universal lambda-ring Lambda(R) = 1 + tR[[t]] as truncated power
// series with constant term 1. Addition is the series product, negation
// the series reciprocal; multiplication goes through the ghost components
// (z is an injective ring homomorphism on the rings supported here, which
// all embed into a Q-algebra).
//
// E_Nr writes f uniquely as prod_{i>=1} (1 - (-t)^i)^{a_i} and returns the
// exponent vector; z = phi o E_Nr.

#include <string>
#include <vector>

#include "lambdanr/ghost.hpp"
#include "lambdanr/necklace.hpp"
#include "lambdanr/scalar.hpp"

namespace lambdanr {

class LambdaSeries {
public:
  // Constant series 1 of the given order.
  static LambdaSeries one(Ring ring, i64 order);
  // Coefficients c_0..c_N; c_0 must equal 1.
  static LambdaSeries from_coeffs(Ring ring, std::vector<Scalar> coeffs);

  i64 order() const { return static_cast<i64>(coeffs_.size()) - 1; }
  const Scalar& coeff(i64 i) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Ring& ring() const { return ring_; }

  LambdaSeries truncated_to(i64 order) const;
  LambdaSeries coerced(const Ring& target) const;

private:
  LambdaSeries() = default;
  Ring ring_;
  std::vector<Scalar> coeffs_;
};

// Addition of Lambda(R): series product, order = min of operand orders.
LambdaSeries lam_add(const LambdaSeries& f, const LambdaSeries& g);
// Additive inverse: truncated reciprocal series.
LambdaSeries lam_neg(const LambdaSeries& f);
// Multiplication of Lambda(R) through componentwise ghost multiplication;
// coefficients are asserted to lie in the joined ring (integrality_violation
// otherwise). The unit is 1 + t.
LambdaSeries lam_mul(const LambdaSeries& f, const LambdaSeries& g);

// z: ghost components a_i with sum a_i (-t)^i = -t f'/f, solved by an
// integral recurrence (no division, exact over Z).
GhostVec lam_z(const LambdaSeries& f);
// Unique f with z(f) = a to the given order. Divides by 1..N, so the ghost
// ring must be a Q-algebra; an Integers-tagged input is computed over Q and
// re-tagged after an integrality check.
LambdaSeries lam_z_inv(const GhostVec& a, i64 order);

// E_Nr by iterative peeling of the product basis; truncated to the order
// of f. Over Z a fractional exponent raises integrality_violation.
NeckVec lam_enr(const LambdaSeries& f);
// prod_{i<=N} (1 - (-t)^i)^{x_i}, truncated to the given order; rational
// exponents expand through the generalized binomial series.
LambdaSeries lam_enr_inv(const NeckVec& x, i64 order);

LambdaSeries lam_map(const LambdaSeries& f, const RingHom& hom);

bool lam_equal(const LambdaSeries& f, const LambdaSeries& g);
bool lam_agree_upto(const LambdaSeries& f, const LambdaSeries& g, i64 order);

// Canonical product-form grammar: factors ascending in d, "(1+t)^a" for
// d = 1, "(1-t^d)^a" for even d, "(1+t^d)^a" for odd d > 1; zero exponents
// omitted; the empty product prints "1".
std::string product_form_text(const NeckVec& exponents);
// "1 + c1*t + c2*t^2 + ...".
std::string series_text(const LambdaSeries& f);

}  // namespace lambdanr
