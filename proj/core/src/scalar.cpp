#include "lambdanr/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace lambdanr {

Ring Ring::Qzeta(i64 m) {
  if (m < 1) raise(Errc::invalid_argument, "cyclotomic order must be positive");
  return {Tag::cyclotomic, m};
}

std::string Ring::text() const {
  switch (tag) {
    case Tag::integers: return "Z";
    case Tag::rationals: return "Q";
    case Tag::cyclotomic: return "Q(zeta" + std::to_string(order) + ")";
  }
  return "?";
}

std::string ring_text(const Ring& r) { return r.text(); }

Ring ring_join(const Ring& a, const Ring& b) {
  if (a.tag == Ring::Tag::cyclotomic || b.tag == Ring::Tag::cyclotomic) {
    const i64 ma = a.tag == Ring::Tag::cyclotomic ? a.order : 1;
    const i64 mb = b.tag == Ring::Tag::cyclotomic ? b.order : 1;
    return Ring::Qzeta(lcm_i64(ma, mb));
  }
  if (a.tag == Ring::Tag::rationals || b.tag == Ring::Tag::rationals)
    return Ring::Q();
  return Ring::Z();
}

bool ring_embeds(const Ring& from, const Ring& to) {
  if (from == to) return true;
  switch (from.tag) {
    case Ring::Tag::integers:
      return true;
    case Ring::Tag::rationals:
      return to.tag != Ring::Tag::integers;
    case Ring::Tag::cyclotomic:
      return to.tag == Ring::Tag::cyclotomic && to.order % from.order == 0;
  }
  return false;
}

namespace {

// Reduce a rational polynomial (constant term first) modulo the monic
// integer polynomial Phi_m; result has degree < phi(m).
std::vector<mpq_class> reduce_mod_phi(std::vector<mpq_class> p, i64 m) {
  const auto& phi = cyclotomic_polynomial(m);
  const auto deg = static_cast<i64>(phi.size()) - 1;
  for (i64 i = static_cast<i64>(p.size()) - 1; i >= deg; --i) {
    const mpq_class c = p[static_cast<size_t>(i)];
    if (c == 0) continue;
    for (i64 j = 0; j <= deg; ++j)
      p[static_cast<size_t>(i - deg + j)] -= c * mpq_class(phi[static_cast<size_t>(j)]);
  }
  p.resize(static_cast<size_t>(deg), mpq_class(0));
  for (auto& c : p) c.canonicalize();
  return p;
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a,
                                const std::vector<mpq_class>& b) {
  std::vector<mpq_class> out(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

Scalar Scalar::rational(mpz_class num, mpz_class den) {
  if (den == 0) raise(Errc::invalid_argument, "rational with zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::cyclotomic(i64 m, std::vector<mpq_class> coords) {
  if (m < 1) raise(Errc::invalid_argument, "cyclotomic order must be positive");
  const auto deg = static_cast<size_t>(euler_phi(m));
  if (coords.size() != deg)
    raise(Errc::invalid_argument,
          "cyclotomic coords length must equal deg Phi_m");
  for (auto& c : coords) c.canonicalize();
  return Scalar(Cyclo{m, std::move(coords)});
}

Scalar Scalar::zeta(i64 m, i64 power) {
  if (m < 1) raise(Errc::invalid_argument, "cyclotomic order must be positive");
  i64 e = power % m;
  if (e < 0) e += m;
  std::vector<mpq_class> p(static_cast<size_t>(e) + 1, mpq_class(0));
  p.back() = 1;
  return Scalar(Cyclo{m, reduce_mod_phi(std::move(p), m)});
}

Ring Scalar::ring() const {
  if (std::holds_alternative<mpz_class>(v_)) return Ring::Z();
  if (std::holds_alternative<mpq_class>(v_)) return Ring::Q();
  return Ring::Qzeta(as_c().m);
}

bool Scalar::is_zero() const {
  if (auto* z = std::get_if<mpz_class>(&v_)) return *z == 0;
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
  const auto& c = as_c();
  return std::all_of(c.coords.begin(), c.coords.end(),
                     [](const mpq_class& x) { return x == 0; });
}

bool Scalar::is_one() const {
  auto r = rational_value();
  return r && *r == 1;
}

mpq_class Scalar::lifted_rational() const {
  if (auto* z = std::get_if<mpz_class>(&v_)) return mpq_class(*z);
  return as_q();
}

Scalar::Cyclo Scalar::lifted_cyclotomic(i64 m) const {
  const auto deg = static_cast<size_t>(euler_phi(m));
  if (!std::holds_alternative<Cyclo>(v_)) {
    std::vector<mpq_class> coords(deg, mpq_class(0));
    coords[0] = lifted_rational();
    return Cyclo{m, std::move(coords)};
  }
  const auto& c = as_c();
  if (c.m == m) return c;
  if (m % c.m != 0)
    raise(Errc::ring_mismatch, "no embedding of Q(zeta" + std::to_string(c.m) +
                                   ") into Q(zeta" + std::to_string(m) + ")");
  // zeta_m' = zeta_{m}^{m/m'}: send u^i to u^{i * m/c.m mod m}.
  const i64 stretch = m / c.m;
  std::vector<mpq_class> p(static_cast<size_t>(m), mpq_class(0));
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    p[static_cast<size_t>((static_cast<i64>(i) * stretch) % m)] += c.coords[i];
  }
  return Cyclo{m, reduce_mod_phi(std::move(p), m)};
}

std::optional<mpq_class> Scalar::rational_value() const {
  if (auto* z = std::get_if<mpz_class>(&v_)) return mpq_class(*z);
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  const auto& c = as_c();
  for (size_t i = 1; i < c.coords.size(); ++i)
    if (c.coords[i] != 0) return std::nullopt;
  return c.coords.empty() ? mpq_class(0) : c.coords[0];
}

std::optional<mpz_class> Scalar::integer_value() const {
  auto q = rational_value();
  if (!q || q->get_den() != 1) return std::nullopt;
  return q->get_num();
}

bool Scalar::is_integer_value() const { return integer_value().has_value(); }
bool Scalar::is_rational_value() const { return rational_value().has_value(); }

Scalar Scalar::coerced(const Ring& target) const {
  const Ring self = ring();
  if (self == target) return *this;
  if (!ring_embeds(self, target))
    raise(Errc::ring_mismatch,
          "cannot embed " + self.text() + " into " + target.text());
  switch (target.tag) {
    case Ring::Tag::integers:
      return *this;  // unreachable given ring_embeds
    case Ring::Tag::rationals:
      return Scalar(lifted_rational());
    case Ring::Tag::cyclotomic:
      return Scalar(lifted_cyclotomic(target.order));
  }
  return *this;
}

Scalar Scalar::demoted(const Ring& target) const {
  switch (target.tag) {
    case Ring::Tag::integers: {
      auto z = integer_value();
      if (!z)
        raise(Errc::integrality_violation,
              "value " + text() + " is not a rational integer");
      return Scalar(*z);
    }
    case Ring::Tag::rationals: {
      auto q = rational_value();
      if (!q)
        raise(Errc::ring_mismatch, "value " + text() + " is not rational");
      return Scalar(*q);
    }
    case Ring::Tag::cyclotomic:
      return coerced(target);
  }
  return *this;
}

namespace {
constexpr int kAdd = 0, kSub = 1, kMul = 2;
}

Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar::binary_op(kAdd, a, b); }
Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar::binary_op(kSub, a, b); }
Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar::binary_op(kMul, a, b); }

Scalar Scalar::binary_op(int op, const Scalar& a, const Scalar& b) {
  const Ring join = ring_join(a.ring(), b.ring());
  switch (join.tag) {
    case Ring::Tag::integers: {
      const mpz_class& x = a.as_z();
      const mpz_class& y = b.as_z();
      if (op == kAdd) return Scalar(mpz_class(x + y));
      if (op == kSub) return Scalar(mpz_class(x - y));
      return Scalar(mpz_class(x * y));
    }
    case Ring::Tag::rationals: {
      const mpq_class x = a.lifted_rational();
      const mpq_class y = b.lifted_rational();
      if (op == kAdd) return Scalar::rational(x + y);
      if (op == kSub) return Scalar::rational(x - y);
      return Scalar::rational(x * y);
    }
    case Ring::Tag::cyclotomic: {
      const i64 m = join.order;
      const Cyclo ca = a.lifted_cyclotomic(m);
      const Cyclo cb = b.lifted_cyclotomic(m);
      if (op == kMul) {
        auto prod = poly_mul(ca.coords, cb.coords);
        return Scalar::cyclotomic(m, reduce_mod_phi(std::move(prod), m));
      }
      std::vector<mpq_class> out(ca.coords.size());
      for (size_t i = 0; i < ca.coords.size(); ++i)
        out[i] = op == kAdd ? mpq_class(ca.coords[i] + cb.coords[i])
                            : mpq_class(ca.coords[i] - cb.coords[i]);
      return Scalar::cyclotomic(m, std::move(out));
    }
  }
  raise(Errc::internal_disagreement, "unreachable scalar op");
}

Scalar Scalar::operator-() const {
  if (auto* z = std::get_if<mpz_class>(&v_)) return Scalar(mpz_class(-*z));
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  Cyclo c = as_c();
  for (auto& x : c.coords) x = -x;
  return Scalar(std::move(c));
}

bool operator==(const Scalar& a, const Scalar& b) {
  const Ring join = ring_join(a.ring(), b.ring());
  switch (join.tag) {
    case Ring::Tag::integers:
      return a.as_z() == b.as_z();
    case Ring::Tag::rationals:
      return a.lifted_rational() == b.lifted_rational();
    case Ring::Tag::cyclotomic:
      return a.lifted_cyclotomic(join.order) == b.lifted_cyclotomic(join.order);
  }
  return false;
}

Scalar Scalar::div_by_integer(const mpz_class& d) const {
  if (d == 0) raise(Errc::invalid_argument, "division by zero integer");
  if (auto* z = std::get_if<mpz_class>(&v_)) {
    if (*z % d != 0)
      raise(Errc::non_divisible,
            z->get_str() + " is not divisible by " + d.get_str() + " in Z");
    return Scalar(mpz_class(*z / d));
  }
  if (auto* q = std::get_if<mpq_class>(&v_))
    return Scalar::rational(mpq_class(*q / mpq_class(d)));
  Cyclo c = as_c();
  for (auto& x : c.coords) {
    x /= mpq_class(d);
    x.canonicalize();
  }
  return Scalar(std::move(c));
}

Scalar Scalar::pow(i64 exponent) const {
  if (exponent < 0) raise(Errc::invalid_argument, "negative exponent");
  Scalar acc(1);
  Scalar base = *this;
  i64 e = exponent;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::galois(i64 k) const {
  if (!std::holds_alternative<Cyclo>(v_)) return *this;
  const auto& c = as_c();
  const i64 m = c.m;
  i64 kk = k % m;
  if (kk < 0) kk += m;
  if (gcd_i64(kk, m) != 1)
    raise(Errc::invalid_argument, "galois exponent not coprime to conductor");
  std::vector<mpq_class> p(static_cast<size_t>(m), mpq_class(0));
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    p[static_cast<size_t>((static_cast<i64>(i) * kk) % m)] += c.coords[i];
  }
  return Scalar::cyclotomic(m, reduce_mod_phi(std::move(p), m));
}

const std::vector<mpq_class>& Scalar::cyclotomic_coords() const {
  if (!std::holds_alternative<Cyclo>(v_))
    raise(Errc::invalid_argument, "scalar has no cyclotomic representation");
  return as_c().coords;
}

i64 Scalar::cyclotomic_order() const {
  if (!std::holds_alternative<Cyclo>(v_))
    raise(Errc::invalid_argument, "scalar has no cyclotomic representation");
  return as_c().m;
}

std::string Scalar::text() const {
  if (auto* z = std::get_if<mpz_class>(&v_)) return z->get_str();
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    if (q->get_den() == 1) return q->get_num().get_str();
    return q->get_num().get_str() + "/" + q->get_den().get_str();
  }
  const auto& c = as_c();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    mpq_class q = c.coords[i];
    if (q.get_den() == 1)
      os << q.get_num().get_str();
    else
      os << q.get_num().get_str() << "/" << q.get_den().get_str();
    if (i >= 1) {
      os << "*z" << c.m;
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

RingHom RingHom::embed(const Ring& from, const Ring& to) {
  if (!ring_embeds(from, to))
    raise(Errc::invalid_argument,
          "no embedding " + from.text() + " -> " + to.text());
  return {Kind::embed, from, to, 1};
}

RingHom RingHom::galois(i64 m, i64 k) {
  i64 kk = k % m;
  if (kk < 0) kk += m;
  if (gcd_i64(kk, m) != 1)
    raise(Errc::invalid_argument, "galois exponent not coprime to conductor");
  return {Kind::galois, Ring::Qzeta(m), Ring::Qzeta(m), kk};
}

Scalar RingHom::apply(const Scalar& s) const {
  switch (kind) {
    case Kind::identity:
      return s;
    case Kind::embed:
      return s.coerced(codomain);
    case Kind::galois:
      return s.coerced(domain).galois(galois_exp);
  }
  return s;
}

}  // namespace lambdanr
