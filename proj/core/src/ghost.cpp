#include "lambdanr/ghost.hpp"

#include <algorithm>

namespace lambdanr {

GhostVec GhostVec::periodic(Ring ring, std::vector<Scalar> values) {
  if (values.empty())
    raise(Errc::invalid_argument, "periodic ghost vector needs period >= 1");
  GhostVec v;
  v.ring_ = ring;
  v.periodic_ = true;
  v.values_ = std::move(values);
  for (auto& s : v.values_) s = s.coerced(ring);
  return v;
}

GhostVec GhostVec::truncated(Ring ring, std::vector<Scalar> values) {
  GhostVec v;
  v.ring_ = ring;
  v.periodic_ = false;
  v.values_ = std::move(values);
  for (auto& s : v.values_) s = s.coerced(ring);
  return v;
}

GhostVec GhostVec::constant(Ring ring, Scalar value) {
  return periodic(ring, {std::move(value)});
}

i64 GhostVec::period() const {
  if (!periodic_) raise(Errc::invalid_argument, "not a periodic ghost vector");
  return static_cast<i64>(values_.size());
}

i64 GhostVec::horizon() const {
  if (periodic_) raise(Errc::invalid_argument, "not a truncated ghost vector");
  return static_cast<i64>(values_.size());
}

const Scalar& GhostVec::at(i64 n) const {
  if (n < 1) raise(Errc::invalid_argument, "ghost index must be >= 1");
  if (periodic_)
    return values_[static_cast<size_t>((n - 1) % static_cast<i64>(values_.size()))];
  if (n > static_cast<i64>(values_.size()))
    raise(Errc::horizon_exceeded,
          "ghost read at " + std::to_string(n) + " past horizon " +
              std::to_string(values_.size()));
  return values_[static_cast<size_t>(n - 1)];
}

namespace {

GhostVec pointwise(const GhostVec& a, const GhostVec& b, bool add) {
  const Ring ring = ring_join(a.ring(), b.ring());
  auto combine = [&](i64 n) {
    return add ? a.at(n) + b.at(n) : a.at(n) * b.at(n);
  };
  if (a.is_periodic() && b.is_periodic()) {
    const i64 c = lcm_i64(a.period(), b.period());
    std::vector<Scalar> vals;
    vals.reserve(static_cast<size_t>(c));
    for (i64 n = 1; n <= c; ++n) vals.push_back(combine(n));
    return GhostVec::periodic(ring, std::move(vals));
  }
  const i64 na = a.is_periodic() ? INT64_MAX : a.horizon();
  const i64 nb = b.is_periodic() ? INT64_MAX : b.horizon();
  const i64 n = std::min(na, nb);
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(n));
  for (i64 i = 1; i <= n; ++i) vals.push_back(combine(i));
  return GhostVec::truncated(ring, std::move(vals));
}

}  // namespace

GhostVec gh_add(const GhostVec& a, const GhostVec& b) { return pointwise(a, b, true); }
GhostVec gh_mul(const GhostVec& a, const GhostVec& b) { return pointwise(a, b, false); }

GhostVec gh_scale(const GhostVec& a, const Scalar& s) {
  const Ring ring = ring_join(a.ring(), s.ring());
  std::vector<Scalar> vals;
  vals.reserve(a.values().size());
  for (const auto& v : a.values()) vals.push_back(v * s);
  return a.is_periodic() ? GhostVec::periodic(ring, std::move(vals))
                         : GhostVec::truncated(ring, std::move(vals));
}

GhostVec gh_apply(const GhostVec& a, Op op) {
  const i64 r = op.r;
  if (r < 1) raise(Errc::invalid_argument, "operator index must be >= 1");
  const Ring ring = a.ring();
  if ((op.kind == OpKind::Vdiv || op.kind == OpKind::W) && r > 1 &&
      !ring.q_algebra())
    raise(Errc::q_algebra_required,
          "divided Verschiebung and W need a Q-algebra ring");

  switch (op.kind) {
    case OpKind::V:
    case OpKind::Vdiv: {
      const bool divided = op.kind == OpKind::Vdiv;
      const i64 n = (a.is_periodic() ? a.period() : a.horizon()) * r;
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(n));
      for (i64 i = 1; i <= n; ++i) {
        if (i % r != 0) {
          vals.push_back(Scalar(0).coerced(ring));
        } else {
          Scalar x = a.at(i / r);
          if (!divided) x = x * Scalar(static_cast<long>(r));
          vals.push_back(std::move(x));
        }
      }
      return a.is_periodic() ? GhostVec::periodic(ring, std::move(vals))
                             : GhostVec::truncated(ring, std::move(vals));
    }
    case OpKind::F: {
      if (a.is_periodic()) {
        const i64 c = a.period();
        const i64 cc = c / gcd_i64(c, r);
        std::vector<Scalar> vals;
        vals.reserve(static_cast<size_t>(cc));
        for (i64 i = 1; i <= cc; ++i) vals.push_back(a.at(i * r));
        return GhostVec::periodic(ring, std::move(vals));
      }
      const i64 n = a.horizon() / r;
      if (n < 1)
        raise(Errc::horizon_exceeded, "Frobenius leaves an empty horizon");
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(n));
      for (i64 i = 1; i <= n; ++i) vals.push_back(a.at(i * r));
      return GhostVec::truncated(ring, std::move(vals));
    }
    case OpKind::T: {
      if (a.is_periodic() || a.horizon() >= r) {
        std::vector<Scalar> vals;
        vals.reserve(static_cast<size_t>(r));
        for (i64 i = 1; i <= r; ++i) vals.push_back(a.at(gcd_i64(i, r)));
        return GhostVec::periodic(ring, std::move(vals));
      }
      const i64 n = a.horizon();
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(n));
      for (i64 i = 1; i <= n; ++i) vals.push_back(a.at(gcd_i64(i, r)));
      return GhostVec::truncated(ring, std::move(vals));
    }
    case OpKind::W: {
      const i64 n = a.is_periodic() ? lcm_i64(a.period(), r) : a.horizon();
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(n));
      for (i64 i = 1; i <= n; ++i)
        vals.push_back(i % r == 0 ? a.at(i) : Scalar(0).coerced(ring));
      return a.is_periodic() ? GhostVec::periodic(ring, std::move(vals))
                             : GhostVec::truncated(ring, std::move(vals));
    }
  }
  raise(Errc::internal_disagreement, "unreachable ghost operator");
}

TImageResult gh_is_truncation_image(const GhostVec& a, i64 r) {
  if (r < 1) raise(Errc::invalid_argument, "operator index must be >= 1");
  if (a.is_periodic()) {
    const i64 window = lcm_i64(a.period(), r);
    for (i64 n = 1; n <= window; ++n)
      if (!(a.at(n) == a.at(gcd_i64(n, r)))) return {false, false};
    return {true, false};
  }
  if (a.horizon() < r)
    raise(Errc::invalid_argument, "truncated T-image check needs horizon >= r");
  for (i64 n = 1; n <= a.horizon(); ++n)
    if (!(a.at(n) == a.at(gcd_i64(n, r)))) return {false, true};
  return {true, true};
}

GhostVec gh_map(const GhostVec& a, const RingHom& hom) {
  std::vector<Scalar> vals;
  vals.reserve(a.values().size());
  for (const auto& v : a.values()) vals.push_back(hom.apply(v));
  return a.is_periodic() ? GhostVec::periodic(hom.codomain, std::move(vals))
                         : GhostVec::truncated(hom.codomain, std::move(vals));
}

i64 gh_common_window(const GhostVec& a, const GhostVec& b) {
  if (a.is_periodic() && b.is_periodic())
    return lcm_i64(a.period(), b.period());
  i64 w = INT64_MAX;
  if (!a.is_periodic()) w = std::min(w, a.horizon());
  if (!b.is_periodic()) w = std::min(w, b.horizon());
  return w;
}

bool gh_agree_upto(const GhostVec& a, const GhostVec& b, i64 window) {
  for (i64 n = 1; n <= window; ++n)
    if (!(a.at(n) == b.at(n))) return false;
  return true;
}

bool gh_equal(const GhostVec& a, const GhostVec& b) {
  if (a.is_periodic() != b.is_periodic()) return false;
  if (!a.is_periodic() && a.horizon() != b.horizon()) return false;
  return gh_agree_upto(a, b, gh_common_window(a, b));
}

}  // namespace lambdanr
