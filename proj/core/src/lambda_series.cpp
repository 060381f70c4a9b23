#include "lambdanr/lambda_series.hpp"

#include <algorithm>
#include <sstream>

namespace lambdanr {

LambdaSeries LambdaSeries::one(Ring ring, i64 order) {
  if (order < 0) raise(Errc::invalid_argument, "series order must be >= 0");
  std::vector<Scalar> c(static_cast<size_t>(order) + 1, Scalar(0));
  c[0] = Scalar(1);
  return from_coeffs(ring, std::move(c));
}

LambdaSeries LambdaSeries::from_coeffs(Ring ring, std::vector<Scalar> coeffs) {
  if (coeffs.empty() || !coeffs[0].is_one())
    raise(Errc::invalid_argument, "lambda series must have constant term 1");
  LambdaSeries f;
  f.ring_ = ring;
  f.coeffs_ = std::move(coeffs);
  for (auto& c : f.coeffs_) c = c.coerced(ring);
  return f;
}

const Scalar& LambdaSeries::coeff(i64 i) const {
  if (i < 0 || i > order())
    raise(Errc::horizon_exceeded,
          "coefficient " + std::to_string(i) + " beyond order " +
              std::to_string(order()));
  return coeffs_[static_cast<size_t>(i)];
}

LambdaSeries LambdaSeries::truncated_to(i64 order) const {
  if (order < 0) raise(Errc::invalid_argument, "series order must be >= 0");
  std::vector<Scalar> c = coeffs_;
  if (order + 1 < static_cast<i64>(c.size()))
    c.resize(static_cast<size_t>(order) + 1);
  else
    c.resize(static_cast<size_t>(order) + 1, Scalar(0).coerced(ring_));
  return from_coeffs(ring_, std::move(c));
}

LambdaSeries LambdaSeries::coerced(const Ring& target) const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(s.coerced(target));
  return from_coeffs(target, std::move(c));
}

LambdaSeries lam_add(const LambdaSeries& f, const LambdaSeries& g) {
  const Ring ring = ring_join(f.ring(), g.ring());
  const i64 n = std::min(f.order(), g.order());
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0).coerced(ring));
  for (i64 i = 0; i <= n; ++i) {
    Scalar acc = Scalar(0).coerced(ring);
    for (i64 j = 0; j <= i; ++j) {
      if (j > f.order() || i - j > g.order()) continue;
      acc = acc + f.coeff(j) * g.coeff(i - j);
    }
    c[static_cast<size_t>(i)] = std::move(acc);
  }
  return LambdaSeries::from_coeffs(ring, std::move(c));
}

LambdaSeries lam_neg(const LambdaSeries& f) {
  const i64 n = f.order();
  const Ring ring = f.ring();
  std::vector<Scalar> g(static_cast<size_t>(n) + 1, Scalar(0).coerced(ring));
  g[0] = Scalar(1).coerced(ring);
  for (i64 i = 1; i <= n; ++i) {
    Scalar acc = Scalar(0).coerced(ring);
    for (i64 j = 1; j <= i; ++j)
      acc = acc + f.coeff(j) * g[static_cast<size_t>(i - j)];
    g[static_cast<size_t>(i)] = -acc;
  }
  return LambdaSeries::from_coeffs(ring, std::move(g));
}

GhostVec lam_z(const LambdaSeries& f) {
  // -n c_n = sum_{i=1}^{n} (-1)^i a_i c_{n-i}, solved upward for a_n;
  // integral over any ring.
  const i64 n = f.order();
  std::vector<Scalar> a(static_cast<size_t>(n) + 1, Scalar(0).coerced(f.ring()));
  for (i64 k = 1; k <= n; ++k) {
    Scalar rhs = Scalar(-static_cast<long>(k)) * f.coeff(k);
    for (i64 i = 1; i < k; ++i) {
      const Scalar term = a[static_cast<size_t>(i)] * f.coeff(k - i);
      rhs = i % 2 == 0 ? rhs - term : rhs + term;
    }
    // (-1)^k a_k = rhs.
    a[static_cast<size_t>(k)] = k % 2 == 0 ? rhs : -rhs;
  }
  a.erase(a.begin());
  return GhostVec::truncated(f.ring(), std::move(a));
}

LambdaSeries lam_z_inv(const GhostVec& a, i64 order) {
  if (order < 0) raise(Errc::invalid_argument, "series order must be >= 0");
  const Ring declared = a.ring();
  const Ring work = ring_join(declared, Ring::Q());
  std::vector<Scalar> c(static_cast<size_t>(order) + 1, Scalar(0).coerced(work));
  c[0] = Scalar(1).coerced(work);
  for (i64 k = 1; k <= order; ++k) {
    // c_k = -(1/k) sum_{i=1}^{k} (-1)^i a_i c_{k-i}.
    Scalar acc = Scalar(0).coerced(work);
    for (i64 i = 1; i <= k; ++i) {
      const Scalar term = a.at(i).coerced(work) * c[static_cast<size_t>(k - i)];
      acc = i % 2 == 0 ? acc + term : acc - term;
    }
    c[static_cast<size_t>(k)] = (-acc).div_by_integer(k);
  }
  if (declared == Ring::Z()) {
    for (auto& s : c) s = s.demoted(Ring::Z());
    return LambdaSeries::from_coeffs(Ring::Z(), std::move(c));
  }
  return LambdaSeries::from_coeffs(work, std::move(c));
}

LambdaSeries lam_mul(const LambdaSeries& f, const LambdaSeries& g) {
  const Ring declared = ring_join(f.ring(), g.ring());
  const Ring work = ring_join(declared, Ring::Q());
  const i64 n = std::min(f.order(), g.order());
  const GhostVec prod = gh_mul(lam_z(f.truncated_to(n).coerced(work)),
                               lam_z(g.truncated_to(n).coerced(work)));
  LambdaSeries h = lam_z_inv(prod, n);
  if (declared == Ring::Z()) {
    std::vector<Scalar> c;
    c.reserve(h.coeffs().size());
    for (const auto& s : h.coeffs()) c.push_back(s.demoted(Ring::Z()));
    return LambdaSeries::from_coeffs(Ring::Z(), std::move(c));
  }
  return h.coerced(declared);
}

namespace {

// Multiply f by (1 - (-t)^d)^e truncated to the order of f. Rational e
// expands through generalized binomial coefficients C(e, j).
std::vector<Scalar> multiply_basis_power(const std::vector<Scalar>& f,
                                         i64 d, const Scalar& e,
                                         const Ring& ring) {
  const i64 n = static_cast<i64>(f.size()) - 1;
  // (1 - (-t)^d)^e = sum_j C(e,j) (-1)^j (-t)^{dj}
  //               = sum_j C(e,j) (-1)^{j + dj} t^{dj}.
  std::vector<Scalar> basis(static_cast<size_t>(n) + 1, Scalar(0).coerced(ring));
  basis[0] = Scalar(1).coerced(ring);
  Scalar binom = Scalar(1).coerced(ring);
  for (i64 j = 1; j * d <= n; ++j) {
    // C(e, j) = C(e, j-1) * (e - j + 1) / j.
    binom = (binom * (e.coerced(ring) - Scalar(static_cast<long>(j - 1))))
                .div_by_integer(j);
    const bool negative = (j + d * j) % 2 != 0;
    basis[static_cast<size_t>(j * d)] = negative ? -binom : binom;
  }
  std::vector<Scalar> out(static_cast<size_t>(n) + 1, Scalar(0).coerced(ring));
  for (i64 i = 0; i <= n; ++i) {
    if (f[static_cast<size_t>(i)].is_zero()) continue;
    for (i64 j = 0; i + j <= n; ++j) {
      if (basis[static_cast<size_t>(j)].is_zero()) continue;
      out[static_cast<size_t>(i + j)] =
          out[static_cast<size_t>(i + j)] +
          f[static_cast<size_t>(i)] * basis[static_cast<size_t>(j)];
    }
  }
  return out;
}

}  // namespace

NeckVec lam_enr(const LambdaSeries& f) {
  const Ring declared = f.ring();
  const Ring work = ring_join(declared, Ring::Q());
  const i64 n = f.order();
  std::vector<Scalar> rem;
  rem.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) rem.push_back(c.coerced(work));

  std::vector<Scalar> exps;
  exps.reserve(static_cast<size_t>(n));
  for (i64 i = 1; i <= n; ++i) {
    // After clearing lower degrees the remainder is 1 + r_i t^i + ...,
    // and (1-(-t)^i)^{a} = 1 + a(-1)^{i+1} t^i + O(t^{2i}).
    Scalar a = rem[static_cast<size_t>(i)];
    if (i % 2 == 0) a = -a;
    exps.push_back(a);
    if (!a.is_zero()) rem = multiply_basis_power(rem, i, -a, work);
  }
  if (declared == Ring::Z()) {
    for (auto& e : exps) e = e.demoted(Ring::Z());
    return NeckVec::truncated(Ring::Z(), std::move(exps));
  }
  return NeckVec::truncated(declared, std::move(exps));
}

LambdaSeries lam_enr_inv(const NeckVec& x, i64 order) {
  if (order < 0) raise(Errc::invalid_argument, "series order must be >= 0");
  if (!x.is_sparse() && x.horizon() < order)
    raise(Errc::horizon_exceeded,
          "exponent vector horizon below requested order");
  const Ring ring = ring_join(x.ring(), Ring::Q());
  std::vector<Scalar> acc(static_cast<size_t>(order) + 1,
                          Scalar(0).coerced(ring));
  acc[0] = Scalar(1).coerced(ring);
  if (x.is_sparse()) {
    for (const auto& [d, e] : x.entries())
      if (d <= order) acc = multiply_basis_power(acc, d, e.coerced(ring), ring);
  } else {
    for (i64 d = 1; d <= order; ++d) {
      const Scalar e = x.at(d);
      if (!e.is_zero()) acc = multiply_basis_power(acc, d, e.coerced(ring), ring);
    }
  }
  // Integer exponents keep integer coefficients; retag when possible.
  if (x.ring() == Ring::Z()) {
    std::vector<Scalar> c;
    c.reserve(acc.size());
    for (const auto& s : acc) c.push_back(s.demoted(Ring::Z()));
    return LambdaSeries::from_coeffs(Ring::Z(), std::move(c));
  }
  return LambdaSeries::from_coeffs(ring, std::move(acc));
}

LambdaSeries lam_map(const LambdaSeries& f, const RingHom& hom) {
  std::vector<Scalar> c;
  c.reserve(f.coeffs().size());
  for (const auto& s : f.coeffs()) c.push_back(hom.apply(s));
  return LambdaSeries::from_coeffs(hom.codomain, std::move(c));
}

bool lam_agree_upto(const LambdaSeries& f, const LambdaSeries& g, i64 order) {
  for (i64 i = 0; i <= order; ++i)
    if (!(f.coeff(i) == g.coeff(i))) return false;
  return true;
}

bool lam_equal(const LambdaSeries& f, const LambdaSeries& g) {
  return f.order() == g.order() && lam_agree_upto(f, g, f.order());
}

std::string product_form_text(const NeckVec& exponents) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](i64 d, const Scalar& a) {
    if (a.is_zero()) return;
    if (!first) os << " ";
    first = false;
    if (d == 1)
      os << "(1+t)";
    else if (d % 2 == 0)
      os << "(1-t^" << d << ")";
    else
      os << "(1+t^" << d << ")";
    os << "^" << a.text();
  };
  if (exponents.is_sparse()) {
    for (const auto& [d, a] : exponents.entries()) emit(d, a);
  } else {
    for (i64 d = 1; d <= exponents.horizon(); ++d) emit(d, exponents.at(d));
  }
  return first ? "1" : os.str();
}

std::string series_text(const LambdaSeries& f) {
  std::ostringstream os;
  os << "1";
  for (i64 i = 1; i <= f.order(); ++i) {
    os << " + " << f.coeff(i).text() << "*t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace lambdanr
