#include "lambdanr/necklace.hpp"

#include <algorithm>
#include <cassert>

namespace lambdanr {

NeckVec NeckVec::zero(Ring ring) {
  NeckVec v;
  v.ring_ = ring;
  v.sparse_ = true;
  return v;
}

NeckVec NeckVec::delta(const Scalar& u, i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "delta index must be >= 1");
  NeckVec v = zero(u.ring());
  if (!u.is_zero()) v.entries_.emplace(n, u);
  return v;
}

NeckVec NeckVec::sparse(Ring ring, std::map<i64, Scalar> entries) {
  NeckVec v = zero(ring);
  for (auto& [n, s] : entries) {
    if (n < 1) raise(Errc::invalid_argument, "necklace index must be >= 1");
    if (s.is_zero()) continue;
    v.entries_.emplace(n, s.coerced(ring));
  }
  return v;
}

NeckVec NeckVec::truncated(Ring ring, std::vector<Scalar> values) {
  NeckVec v;
  v.ring_ = ring;
  v.sparse_ = false;
  v.vals_ = std::move(values);
  for (auto& s : v.vals_) s = s.coerced(ring);
  return v;
}

i64 NeckVec::horizon() const {
  if (sparse_) raise(Errc::invalid_argument, "sparse vector has no horizon");
  return static_cast<i64>(vals_.size());
}

Scalar NeckVec::at(i64 n) const {
  if (n < 1) raise(Errc::invalid_argument, "necklace index must be >= 1");
  if (sparse_) {
    auto it = entries_.find(n);
    return it == entries_.end() ? Scalar(0).coerced(ring_) : it->second;
  }
  if (n > static_cast<i64>(vals_.size()))
    raise(Errc::horizon_exceeded,
          "necklace read at " + std::to_string(n) + " past horizon " +
              std::to_string(vals_.size()));
  return vals_[static_cast<size_t>(n - 1)];
}

std::vector<i64> NeckVec::support() const {
  if (!sparse_)
    raise(Errc::unknown_support, "support of a truncated vector is not known");
  std::vector<i64> out;
  out.reserve(entries_.size());
  for (const auto& [n, s] : entries_) {
    (void)s;
    out.push_back(n);
  }
  return out;
}

const std::map<i64, Scalar>& NeckVec::entries() const {
  if (!sparse_) raise(Errc::unknown_support, "truncated vector has no entry map");
  return entries_;
}

const std::vector<Scalar>& NeckVec::values() const {
  if (sparse_) raise(Errc::invalid_argument, "sparse vector has no value array");
  return vals_;
}

NeckVec NeckVec::coerced(const Ring& target) const {
  if (ring_ == target) return *this;
  if (sparse_) {
    std::map<i64, Scalar> out;
    for (const auto& [n, s] : entries_) out.emplace(n, s.coerced(target));
    return sparse(target, std::move(out));
  }
  std::vector<Scalar> out;
  out.reserve(vals_.size());
  for (const auto& s : vals_) out.push_back(s.coerced(target));
  return truncated(target, std::move(out));
}

NeckVec nr_add(const NeckVec& x, const NeckVec& y) {
  const Ring ring = ring_join(x.ring(), y.ring());
  if (x.is_sparse() && y.is_sparse()) {
    std::map<i64, Scalar> out = x.coerced(ring).entries();
    for (const auto& [n, s] : y.entries()) {
      auto it = out.find(n);
      if (it == out.end()) {
        out.emplace(n, s.coerced(ring));
      } else {
        it->second = it->second + s;
      }
    }
    return NeckVec::sparse(ring, std::move(out));
  }
  const i64 n = std::min(x.is_sparse() ? INT64_MAX : x.horizon(),
                         y.is_sparse() ? INT64_MAX : y.horizon());
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(n));
  for (i64 i = 1; i <= n; ++i) vals.push_back(x.at(i) + y.at(i));
  return NeckVec::truncated(ring, std::move(vals));
}

NeckVec nr_mul(const NeckVec& x, const NeckVec& y) {
  const Ring ring = ring_join(x.ring(), y.ring());
  if (x.is_sparse() && y.is_sparse()) {
    std::map<i64, Scalar> out;
    for (const auto& [i, xi] : x.entries()) {
      for (const auto& [j, yj] : y.entries()) {
        const i64 n = lcm_i64(i, j);
        Scalar term = Scalar(static_cast<long>(gcd_i64(i, j))) * xi * yj;
        auto it = out.find(n);
        if (it == out.end()) {
          out.emplace(n, std::move(term));
        } else {
          it->second = it->second + term;
        }
      }
    }
    return NeckVec::sparse(ring, std::move(out));
  }
  // Valid to the smaller horizon: every contributing index i, j is at most
  // lcm(i, j) = n.
  const i64 cap = std::min(x.is_sparse() ? INT64_MAX : x.horizon(),
                           y.is_sparse() ? INT64_MAX : y.horizon());
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(cap));
  for (i64 n = 1; n <= cap; ++n) {
    Scalar acc = Scalar(0).coerced(ring);
    for (i64 i : divisors(n)) {
      const Scalar xi = x.at(i);
      if (xi.is_zero()) continue;
      for (i64 j : divisors(n)) {
        if (lcm_i64(i, j) != n) continue;
        const Scalar yj = y.at(j);
        if (yj.is_zero()) continue;
        acc = acc + Scalar(static_cast<long>(gcd_i64(i, j))) * xi * yj;
      }
    }
    vals.push_back(std::move(acc));
  }
  return NeckVec::truncated(ring, std::move(vals));
}

NeckVec nr_mul_ghost_route(const NeckVec& x, const NeckVec& y) {
  const Ring ring = ring_join(x.ring(), y.ring());
  if (!ring.q_algebra())
    raise(Errc::q_algebra_required, "ghost-route multiplication inverts phi");
  const GhostVec prod = gh_mul(nr_phi(x), nr_phi(y));
  if (prod.is_periodic()) return nr_phi_inv_exact(prod);
  return nr_phi_inv_truncated(prod, prod.horizon());
}

NeckVec nr_scale(const NeckVec& x, const Scalar& s) {
  const Ring ring = ring_join(x.ring(), s.ring());
  if (x.is_sparse()) {
    std::map<i64, Scalar> out;
    for (const auto& [n, v] : x.entries()) out.emplace(n, v * s);
    return NeckVec::sparse(ring, std::move(out));
  }
  std::vector<Scalar> vals;
  vals.reserve(x.values().size());
  for (const auto& v : x.values()) vals.push_back(v * s);
  return NeckVec::truncated(ring, std::move(vals));
}

namespace {

// F_r(u delta_n) = (n,r) u delta_{n/(n,r)}, extended by linearity.
NeckVec frobenius_sparse(const NeckVec& x, i64 r) {
  std::map<i64, Scalar> out;
  for (const auto& [n, u] : x.entries()) {
    const i64 g = gcd_i64(n, r);
    Scalar term = Scalar(static_cast<long>(g)) * u;
    const i64 target = n / g;
    auto it = out.find(target);
    if (it == out.end()) {
      out.emplace(target, std::move(term));
    } else {
      it->second = it->second + term;
    }
  }
  return NeckVec::sparse(x.ring(), std::move(out));
}

Scalar frobenius_component_truncated(const NeckVec& x, i64 r, i64 n) {
  // z_n = sum_{lcm(j,r) = n r} (j/n) x_j; contributing j divide n*r.
  Scalar acc = Scalar(0).coerced(x.ring());
  for (i64 j : divisors(n * r)) {
    if (lcm_i64(j, r) != n * r) continue;
    const Scalar xj = x.at(j);
    if (xj.is_zero()) continue;
    acc = acc + Scalar(static_cast<long>(j / n)) * xj;
  }
  return acc;
}

Scalar div_entry(const Scalar& s, i64 r, const Ring& ring) {
  if (ring.q_algebra()) return s.coerced(ring).div_by_integer(r);
  return s.div_by_integer(r);  // non_divisible when not exact in Z
}

}  // namespace

NeckVec nr_apply(const NeckVec& x, Op op) {
  const i64 r = op.r;
  if (r < 1) raise(Errc::invalid_argument, "operator index must be >= 1");
  const Ring ring = x.ring();

  switch (op.kind) {
    case OpKind::V:
    case OpKind::Vdiv: {
      const bool divided = op.kind == OpKind::Vdiv;
      if (x.is_sparse()) {
        std::map<i64, Scalar> out;
        for (const auto& [n, u] : x.entries())
          out.emplace(n * r, divided ? div_entry(u, r, ring) : u);
        return NeckVec::sparse(ring, std::move(out));
      }
      const i64 h = x.horizon() * r;
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(h));
      for (i64 n = 1; n <= h; ++n) {
        if (n % r != 0) {
          vals.push_back(Scalar(0).coerced(ring));
        } else {
          Scalar u = x.at(n / r);
          vals.push_back(divided ? div_entry(u, r, ring) : std::move(u));
        }
      }
      return NeckVec::truncated(ring, std::move(vals));
    }
    case OpKind::F: {
      if (x.is_sparse()) return frobenius_sparse(x, r);
      const i64 h = x.horizon() / r;
      if (h < 1)
        raise(Errc::horizon_exceeded, "Frobenius leaves an empty horizon");
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(h));
      for (i64 n = 1; n <= h; ++n)
        vals.push_back(frobenius_component_truncated(x, r, n));
      return NeckVec::truncated(ring, std::move(vals));
    }
    case OpKind::T: {
      if (x.is_sparse()) {
        std::map<i64, Scalar> out;
        for (const auto& [n, u] : x.entries())
          if (r % n == 0) out.emplace(n, u);
        return NeckVec::sparse(ring, std::move(out));
      }
      if (x.horizon() >= r) {
        std::map<i64, Scalar> out;
        for (i64 d : divisors(r)) {
          Scalar u = x.at(d);
          if (!u.is_zero()) out.emplace(d, std::move(u));
        }
        return NeckVec::sparse(ring, std::move(out));
      }
      const i64 h = x.horizon();
      std::vector<Scalar> vals;
      vals.reserve(static_cast<size_t>(h));
      for (i64 n = 1; n <= h; ++n)
        vals.push_back(r % n == 0 ? x.at(n) : Scalar(0).coerced(ring));
      return NeckVec::truncated(ring, std::move(vals));
    }
    case OpKind::W:
      return nr_apply(nr_apply(x, {OpKind::F, r}), {OpKind::Vdiv, r});
  }
  raise(Errc::internal_disagreement, "unreachable necklace operator");
}

bool nr_is_truncation_image(const NeckVec& x, i64 r) {
  if (r < 1) raise(Errc::invalid_argument, "operator index must be >= 1");
  for (i64 n : x.support())
    if (r % n != 0) return false;
  return true;
}

GhostVec nr_phi(const NeckVec& x) {
  if (x.is_sparse()) {
    i64 period = 1;
    for (i64 n : x.support()) period = lcm_i64(period, n);
    std::vector<Scalar> vals;
    vals.reserve(static_cast<size_t>(period));
    for (i64 n = 1; n <= period; ++n) {
      Scalar acc = Scalar(0).coerced(x.ring());
      for (const auto& [d, u] : x.entries())
        if (n % d == 0) acc = acc + Scalar(static_cast<long>(d)) * u;
      vals.push_back(std::move(acc));
    }
    return GhostVec::periodic(x.ring(), std::move(vals));
  }
  const i64 h = x.horizon();
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(h));
  for (i64 n = 1; n <= h; ++n) {
    Scalar acc = Scalar(0).coerced(x.ring());
    for (i64 d : divisors(n)) {
      const Scalar u = x.at(d);
      if (!u.is_zero()) acc = acc + Scalar(static_cast<long>(d)) * u;
    }
    vals.push_back(std::move(acc));
  }
  return GhostVec::truncated(x.ring(), std::move(vals));
}

namespace {

Scalar moebius_inverted_entry(const GhostVec& a, i64 n) {
  Scalar acc = Scalar(0).coerced(a.ring());
  for (i64 d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    acc = mu > 0 ? acc + a.at(d) : acc - a.at(d);
  }
  return acc.div_by_integer(n);
}

}  // namespace

NeckVec nr_phi_inv_exact(const GhostVec& a) {
  if (!a.ring().q_algebra())
    raise(Errc::q_algebra_required, "phi is only invertible over a Q-algebra");
  if (!a.is_periodic())
    raise(Errc::not_t_shaped, "exact inversion needs a periodic ghost vector");
  const i64 c = a.period();
  if (!gh_is_truncation_image(a, c).holds)
    raise(Errc::not_t_shaped,
          "ghost vector is not in the image of T_" + std::to_string(c));
  std::map<i64, Scalar> out;
  for (i64 n : divisors(c)) {
    Scalar v = moebius_inverted_entry(a, n);
    if (!v.is_zero()) out.emplace(n, std::move(v));
  }
  return NeckVec::sparse(a.ring(), std::move(out));
}

NeckVec nr_phi_inv_truncated(const GhostVec& a, i64 h) {
  if (!a.ring().q_algebra())
    raise(Errc::q_algebra_required, "phi is only invertible over a Q-algebra");
  if (h < 1) raise(Errc::invalid_argument, "horizon must be >= 1");
  if (!a.is_periodic() && a.horizon() < h)
    raise(Errc::horizon_exceeded, "input horizon below requested horizon");
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(h));
  for (i64 n = 1; n <= h; ++n) vals.push_back(moebius_inverted_entry(a, n));
  return NeckVec::truncated(a.ring(), std::move(vals));
}

namespace {

Scalar necklace_poly_entry(const Scalar& l, i64 n) {
  // (1/n) sum_{d|n} mu(n/d) l^d; integral whenever l is an integer.
  Scalar acc = Scalar(0).coerced(ring_join(l.ring(), Ring::Q()));
  for (i64 d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    const Scalar p = l.pow(d);
    acc = mu > 0 ? acc + p : acc - p;
  }
  acc = acc.div_by_integer(n);
  return l.ring() == Ring::Z() ? acc.demoted(Ring::Z()) : acc;
}

void check_necklace_base(const Scalar& l) {
  if (l.ring().tag == Ring::Tag::cyclotomic)
    raise(Errc::invalid_argument,
          "necklace polynomial base must be an integer or rational");
}

}  // namespace

NeckVec necklace_poly_truncated(const Scalar& l, i64 h) {
  check_necklace_base(l);
  if (h < 1) raise(Errc::invalid_argument, "horizon must be >= 1");
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(h));
  for (i64 n = 1; n <= h; ++n) vals.push_back(necklace_poly_entry(l, n));
  return NeckVec::truncated(l.ring(), std::move(vals));
}

NeckVec necklace_poly_mod(const Scalar& l, i64 c) {
  check_necklace_base(l);
  if (c < 1) raise(Errc::invalid_argument, "modulus must be >= 1");
  std::map<i64, Scalar> out;
  for (i64 n : divisors(c)) {
    Scalar v = necklace_poly_entry(l, n);
    if (!v.is_zero()) out.emplace(n, std::move(v));
  }
  return NeckVec::sparse(l.ring(), std::move(out));
}

i64 finite_support_certificate(const NeckVec& x) {
  const GhostVec a = nr_phi(x);
  const i64 big = a.period();
  // The minimal period divides every period of a purely periodic sequence.
  i64 minimal = big;
  for (i64 c : divisors(big)) {
    bool ok = true;
    for (i64 n = 1; n <= big && ok; ++n)
      ok = a.at(n) == a.at(((n - 1) % c) + 1);
    if (ok) {
      minimal = c;
      break;
    }
  }
  for (i64 n : x.support()) {
    if (minimal % n != 0)
      raise(Errc::certificate_violation,
            "support index " + std::to_string(n) +
                " does not divide the ghost period " + std::to_string(minimal));
  }
  return minimal;
}

namespace {

Scalar frobenius_component(const NeckVec& x, i64 m, i64 j) {
  // (F_m(x))_j for sparse x.
  Scalar acc = Scalar(0).coerced(x.ring());
  for (const auto& [n, u] : x.entries()) {
    if (lcm_i64(n, m) != j * m) continue;
    acc = acc + Scalar(static_cast<long>(n / j)) * u;
  }
  return acc;
}

}  // namespace

Scalar truncated_product_entry_direct(const NeckVec& x, const NeckVec& y,
                                      i64 r, i64 s) {
  const NeckVec tx = nr_apply(x, {OpKind::T, r});
  const NeckVec ty = nr_apply(y, {OpKind::T, s});
  return nr_mul(tx, ty).at(lcm_i64(r, s));
}

Scalar truncated_product_entry(const NeckVec& x, const NeckVec& y, i64 r,
                               i64 s) {
  if (!x.is_sparse() || !y.is_sparse())
    raise(Errc::unknown_support, "factorized product entry needs sparse inputs");
  if (r < 1 || s < 1) raise(Errc::invalid_argument, "r, s must be >= 1");

  // Split r = a1 a2 a3 and s = b1 b2 b3 by comparing prime exponents
  // (r wins / tie / s wins).
  i64 a1 = 1, a2 = 1, a3 = 1, b1 = 1, b3 = 1;
  {
    auto fr = factorize(r);
    auto fs = factorize(s);
    std::set<i64> primes;
    for (auto [p, e] : fr) {
      (void)e;
      primes.insert(p);
    }
    for (auto [p, e] : fs) {
      (void)e;
      primes.insert(p);
    }
    auto exp_of = [](const std::vector<std::pair<i64, int>>& f, i64 p) {
      for (auto [q, e] : f)
        if (q == p) return e;
      return 0;
    };
    auto pow_i64 = [](i64 p, int e) {
      i64 v = 1;
      for (int i = 0; i < e; ++i) v *= p;
      return v;
    };
    for (i64 p : primes) {
      const int ri = exp_of(fr, p);
      const int si = exp_of(fs, p);
      if (ri > si) {
        a1 *= pow_i64(p, ri);
        b1 *= pow_i64(p, si);
      } else if (ri == si) {
        a2 *= pow_i64(p, ri);
      } else {
        a3 *= pow_i64(p, ri);
        b3 *= pow_i64(p, si);
      }
    }
  }

  const Ring ring = ring_join(x.ring(), y.ring());
  if (a2 > 1 && !ring.q_algebra())
    raise(Errc::q_algebra_required, "shared-exponent part a2 > 1 divides by a2");

  // The statement, the proof and the worked example of the source theorem
  // disagree on index placement; this is the convention validated against
  // the direct convolution on exhaustive small cases: Frobenius subscripts
  // a3*d2 on x and b1*d2 on y, output indices a1 and b3.
  Scalar acc = Scalar(0).coerced(ring);
  for (i64 d2 : divisors(a2)) {
    const int mu = mobius(a2 / d2);
    if (mu == 0) continue;
    const Scalar term = frobenius_component(x, a3 * d2, a1) *
                        frobenius_component(y, b1 * d2, b3);
    acc = mu > 0 ? acc + term : acc - term;
  }
  Scalar result = a2 == 1 ? acc : acc.div_by_integer(a2);

#ifndef NDEBUG
  assert(result == truncated_product_entry_direct(x, y, r, s));
#endif
  return result;
}

NeckVec nr_map(const NeckVec& x, const RingHom& hom) {
  if (x.is_sparse()) {
    std::map<i64, Scalar> out;
    for (const auto& [n, u] : x.entries()) {
      Scalar v = hom.apply(u);
      if (!v.is_zero()) out.emplace(n, std::move(v));
    }
    return NeckVec::sparse(hom.codomain, std::move(out));
  }
  std::vector<Scalar> vals;
  vals.reserve(x.values().size());
  for (const auto& u : x.values()) vals.push_back(hom.apply(u));
  return NeckVec::truncated(hom.codomain, std::move(vals));
}

bool nr_equal(const NeckVec& x, const NeckVec& y) {
  if (x.is_sparse() != y.is_sparse()) return false;
  if (x.is_sparse()) {
    if (x.entries().size() != y.entries().size()) return false;
    auto it = y.entries().begin();
    for (const auto& [n, u] : x.entries()) {
      if (it->first != n || !(it->second == u)) return false;
      ++it;
    }
    return true;
  }
  if (x.horizon() != y.horizon()) return false;
  for (i64 n = 1; n <= x.horizon(); ++n)
    if (!(x.at(n) == y.at(n))) return false;
  return true;
}

}  // namespace lambdanr
