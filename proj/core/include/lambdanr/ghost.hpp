#pragma once

// The ghost ring Gh(R): infinite vectors with componentwise operations,
// carried in one of two exact representations.
//
//   Periodic(c)  — entry n is values[(n-1) mod c]; exact at every index.
//   Truncated(N) — entries 1..N only; reading past the horizon is an
//                  error, never a silent zero.
//
// Operators follow the paper's definitions on components:
//   V_r(a)_n = r*a_{n/r} if r|n else 0        (Verschiebung)
//   V'_r     = (1/r) V_r                       (divided Verschiebung)
//   F_r(a)_n = a_{nr}                          (Frobenius)
//   T_r(a)_n = a_{gcd(n,r)}                    (truncated operation)
//   W_r(a)_n = a_n if r|n else 0               (V'_r after F_r)

#include <vector>

#include "lambdanr/scalar.hpp"

namespace lambdanr {

enum class OpKind { V, Vdiv, F, T, W };

struct Op {
  OpKind kind;
  i64 r;
};

class GhostVec {
public:
  // Period is values.size(); horizon likewise for the truncated form.
  static GhostVec periodic(Ring ring, std::vector<Scalar> values);
  static GhostVec truncated(Ring ring, std::vector<Scalar> values);
  static GhostVec constant(Ring ring, Scalar value);  // Periodic(1)
  static GhostVec zero(Ring ring) { return constant(ring, Scalar(0)); }

  bool is_periodic() const { return periodic_; }
  i64 period() const;   // periodic only
  i64 horizon() const;  // truncated only
  const Ring& ring() const { return ring_; }
  const std::vector<Scalar>& values() const { return values_; }

  // 1-based component access; throws horizon_exceeded for truncated reads
  // past the horizon.
  const Scalar& at(i64 n) const;

private:
  GhostVec() = default;
  Ring ring_;
  bool periodic_ = true;
  std::vector<Scalar> values_;
};

GhostVec gh_add(const GhostVec& a, const GhostVec& b);
GhostVec gh_mul(const GhostVec& a, const GhostVec& b);
GhostVec gh_scale(const GhostVec& a, const Scalar& s);

// Applies one of V/V'/F/T/W with the representation propagation rules:
// Periodic(c): V -> Periodic(rc), F -> Periodic(c/(c,r)), T -> Periodic(r),
// W -> Periodic(lcm(c,r)); Truncated(N): V -> N*r, F -> floor(N/r),
// T -> Periodic(r) when N >= r, W -> N. V' and W require a Q-algebra ring
// unless r = 1.
GhostVec gh_apply(const GhostVec& a, Op op);

struct TImageResult {
  bool holds = false;
  bool partial = false;  // truncated input: only a prefix was checkable
};

// Membership in the image of T_r: a_n = a_{gcd(n,r)} for all n. Decidable
// exactly for Periodic (window lcm(c,r) suffices); Truncated inputs need
// horizon >= r and yield a partial verdict.
TImageResult gh_is_truncation_image(const GhostVec& a, i64 r);

GhostVec gh_map(const GhostVec& a, const RingHom& hom);

// Semantic equality: two periodic vectors agree iff they agree on a window
// of length lcm of the periods; if either side is truncated, both horizons
// must match and all defined entries agree.
bool gh_equal(const GhostVec& a, const GhostVec& b);
// Entrywise agreement on 1..window (both sides must be defined there).
bool gh_agree_upto(const GhostVec& a, const GhostVec& b, i64 window);
// Largest window on which both sides are defined, capped for periodic pairs
// at lcm of the periods.
i64 gh_common_window(const GhostVec& a, const GhostVec& b);

}  // namespace lambdanr
