#pragma once

// Exact scalars over Z, Q and the cyclotomic fields Q(zeta_m).
//
// A cyclotomic value lives in Q[u]/Phi_m(u) with power-basis coordinates
// (constant term first, length deg Phi_m = phi(m)); reduction mod Phi_m is
// canonical, so equality is coordinate-wise. The coercion ladder is
// Integer -> Rational -> Cyclotomic(m), and Cyclotomic(m) -> Cyclotomic(m')
// when m | m' via zeta_m = zeta_{m'}^{m'/m}. Binary operations lift both
// operands to the join automatically.
//
// Values are immutable after construction; every operation is pure.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lambdanr/error.hpp"
#include "lambdanr/numtheory.hpp"

namespace lambdanr {

struct Ring {
  enum class Tag { integers, rationals, cyclotomic };
  Tag tag = Tag::integers;
  i64 order = 0;  // conductor m, meaningful only for cyclotomic

  static Ring Z() { return {Tag::integers, 0}; }
  static Ring Q() { return {Tag::rationals, 0}; }
  static Ring Qzeta(i64 m);

  // Division by nonzero integers is total exactly in Q-algebras.
  bool q_algebra() const { return tag != Tag::integers; }

  bool operator==(const Ring&) const = default;
  std::string text() const;
};

// Smallest ring in the ladder containing both.
Ring ring_join(const Ring& a, const Ring& b);
// Whether `from` embeds into `to` along the ladder.
bool ring_embeds(const Ring& from, const Ring& to);

class Scalar {
public:
  Scalar() : v_(mpz_class(0)) {}
  Scalar(long value) : v_(mpz_class(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpz_class value) : v_(std::move(value)) {}

  static Scalar integer(mpz_class v) { return Scalar(std::move(v)); }
  static Scalar rational(mpz_class num, mpz_class den);
  static Scalar rational(mpq_class q);
  // Coordinates in the power basis of Q(zeta_m); length must be phi(m).
  static Scalar cyclotomic(i64 m, std::vector<mpq_class> coords);
  // zeta_m^power.
  static Scalar zeta(i64 m, i64 power = 1);

  // Minimal ring of the representation (not of the value).
  Ring ring() const;

  bool is_zero() const;
  bool is_one() const;
  // Value-level membership tests (a cyclotomic with only a constant
  // coordinate is a rational value).
  bool is_integer_value() const;
  bool is_rational_value() const;
  std::optional<mpz_class> integer_value() const;
  std::optional<mpq_class> rational_value() const;

  // Embed into a larger ring; throws ring_mismatch when impossible.
  Scalar coerced(const Ring& target) const;
  // Re-tag into `target` if the value genuinely lives there, else throws
  // integrality_violation / ring_mismatch.
  Scalar demoted(const Ring& target) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Exact division by a nonzero integer. On an integer representation the
  // quotient must be exact (non_divisible otherwise); rationals and
  // cyclotomics divide freely.
  Scalar div_by_integer(const mpz_class& d) const;
  Scalar div_by_integer(i64 d) const { return div_by_integer(mpz_class(static_cast<long>(d))); }

  Scalar pow(i64 exponent) const;  // exponent >= 0

  // Galois substitution u -> u^k on Q(zeta_m); requires gcd(k, m) = 1.
  // Integers and rationals are fixed.
  Scalar galois(i64 k) const;

  // Power-basis coordinates of a cyclotomic representation (constant term
  // first); invalid_argument on other kinds.
  const std::vector<mpq_class>& cyclotomic_coords() const;
  i64 cyclotomic_order() const;

  // "-3", "p/q", or a polynomial in z<m> for cyclotomics.
  std::string text() const;

private:
  struct Cyclo {
    i64 m = 1;
    std::vector<mpq_class> coords;  // length phi(m), constant term first
    bool operator==(const Cyclo&) const = default;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(Cyclo c) : v_(std::move(c)) {}

  const mpz_class& as_z() const { return std::get<mpz_class>(v_); }
  const mpq_class& as_q() const { return std::get<mpq_class>(v_); }
  const Cyclo& as_c() const { return std::get<Cyclo>(v_); }

  static Scalar binary_op(int op, const Scalar& a, const Scalar& b);

  mpq_class lifted_rational() const;   // integer/rational kinds only
  Cyclo lifted_cyclotomic(i64 m) const;

  std::variant<mpz_class, mpq_class, Cyclo> v_;
};

struct RingHom {
  enum class Kind { identity, embed, galois };
  Kind kind = Kind::identity;
  Ring domain;
  Ring codomain;
  i64 galois_exp = 1;

  static RingHom identity(const Ring& r) { return {Kind::identity, r, r, 1}; }
  static RingHom embed(const Ring& from, const Ring& to);
  static RingHom galois(i64 m, i64 k);

  Scalar apply(const Scalar& s) const;
};

std::string ring_text(const Ring& r);

}  // namespace lambdanr
