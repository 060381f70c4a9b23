#include "lambdanr/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lambdanr {

NeckVec random_sparse_z(Rng& rng, i64 max_index, int max_support,
                        i64 coeff_bound) {
  std::map<i64, Scalar> entries;
  const int count = static_cast<int>(rng.uniform(0, max_support));
  for (int i = 0; i < count; ++i)
    entries[rng.uniform(1, max_index)] =
        Scalar(static_cast<long>(rng.nonzero(coeff_bound)));
  return NeckVec::sparse(Ring::Z(), std::move(entries));
}

NeckVec random_sparse_q(Rng& rng, i64 max_index, int max_support,
                        i64 coeff_bound) {
  std::map<i64, Scalar> entries;
  const int count = static_cast<int>(rng.uniform(0, max_support));
  for (int i = 0; i < count; ++i)
    entries[rng.uniform(1, max_index)] = Scalar::rational(
        mpz_class(static_cast<long>(rng.nonzero(coeff_bound))),
        mpz_class(static_cast<long>(rng.uniform(1, 6))));
  return NeckVec::sparse(Ring::Q(), std::move(entries));
}

GhostVec random_periodic_z(Rng& rng, i64 max_period, i64 coeff_bound) {
  const i64 c = rng.uniform(1, max_period);
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(c));
  for (i64 i = 0; i < c; ++i)
    vals.push_back(Scalar(static_cast<long>(rng.uniform(-coeff_bound, coeff_bound))));
  return GhostVec::periodic(Ring::Z(), std::move(vals));
}

GhostVec random_periodic_q(Rng& rng, i64 max_period, i64 coeff_bound) {
  const i64 c = rng.uniform(1, max_period);
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(c));
  for (i64 i = 0; i < c; ++i)
    vals.push_back(Scalar::rational(
        mpz_class(static_cast<long>(rng.uniform(-coeff_bound, coeff_bound))),
        mpz_class(static_cast<long>(rng.uniform(1, 6)))));
  return GhostVec::periodic(Ring::Q(), std::move(vals));
}

LambdaSeries random_integer_series(Rng& rng, i64 order, i64 coeff_bound) {
  std::vector<Scalar> c(static_cast<size_t>(order) + 1);
  c[0] = Scalar(1);
  for (i64 i = 1; i <= order; ++i)
    c[static_cast<size_t>(i)] =
        Scalar(static_cast<long>(rng.uniform(-coeff_bound, coeff_bound)));
  return LambdaSeries::from_coeffs(Ring::Z(), std::move(c));
}

MASMatrix random_mas(Rng& rng, i64 k) {
  std::vector<std::vector<Scalar>> q(
      static_cast<size_t>(k),
      std::vector<Scalar>(static_cast<size_t>(k), Scalar(1).coerced(Ring::Q())));
  for (i64 i = 0; i < k; ++i)
    q[static_cast<size_t>(i)][static_cast<size_t>(i)] =
        Scalar(rng.uniform(0, 1) == 0 ? 1L : -1L).coerced(Ring::Q());
  for (i64 i = 0; i < k; ++i)
    for (i64 j = i + 1; j < k; ++j) {
      const i64 num = rng.nonzero(5);
      const i64 den = rng.uniform(1, 5);
      q[static_cast<size_t>(i)][static_cast<size_t>(j)] = Scalar::rational(
          mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
      q[static_cast<size_t>(j)][static_cast<size_t>(i)] = Scalar::rational(
          mpz_class(static_cast<long>(den)), mpz_class(static_cast<long>(num)));
    }
  return MASMatrix::validate(k, std::move(q));
}

bool gh_same(const GhostVec& a, const GhostVec& b) {
  i64 window;
  if (a.is_periodic() && b.is_periodic())
    window = lcm_i64(a.period(), b.period());
  else
    window = std::min(a.is_periodic() ? INT64_MAX : a.horizon(),
                      b.is_periodic() ? INT64_MAX : b.horizon());
  return gh_agree_upto(a, b, window);
}

ClassFunction sign_character_sn(int n) {
  GroupPtr g = symmetric_group(n);
  std::vector<Scalar> vals;
  for (int c = 0; c < g->class_count(); ++c) {
    const auto& parts = g->partition_of_class(c);
    const int parity = (n - static_cast<int>(parts.size())) % 2;
    vals.push_back(Scalar(parity == 0 ? 1L : -1L));
  }
  return cf_from_values(std::move(g), Ring::Z(), std::move(vals));
}

ClassFunction cyclic_linear_character(int n, int k) {
  GroupPtr g = cyclic_group(n);
  std::vector<Scalar> vals;
  for (int j = 0; j < n; ++j)
    vals.push_back(Scalar::zeta(n, static_cast<i64>(j) * k));
  return cf_from_values(std::move(g), Ring::Qzeta(n), std::move(vals));
}

namespace {

struct Checker {
  SuiteResult res;
  explicit Checker(std::string name) { res.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      ++res.failures;
      if (res.failure_lines.size() < 25) res.failure_lines.push_back(what);
    }
  }
};

std::string rs_tag(i64 r, i64 s) {
  return "(r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")";
}

// ---------------------------------------------------------------- ring --

SuiteResult suite_ring(std::uint64_t seed, int cases) {
  Checker ck("ring");
  Rng rng(seed);
  for (int it = 0; it < cases; ++it) {
    const NeckVec x = random_sparse_z(rng);
    const NeckVec y = random_sparse_z(rng);
    const NeckVec z = random_sparse_z(rng);
    const std::string tag = " #" + std::to_string(it);
    ck.check(nr_equal(nr_add(x, y), nr_add(y, x)), "nr add commutes" + tag);
    ck.check(nr_equal(nr_add(nr_add(x, y), z), nr_add(x, nr_add(y, z))),
             "nr add associates" + tag);
    ck.check(nr_equal(nr_mul(x, y), nr_mul(y, x)), "nr mul commutes" + tag);
    ck.check(nr_equal(nr_mul(nr_mul(x, y), z), nr_mul(x, nr_mul(y, z))),
             "nr mul associates" + tag);
    ck.check(nr_equal(nr_mul(x, nr_add(y, z)), nr_add(nr_mul(x, y), nr_mul(x, z))),
             "nr distributes" + tag);
    ck.check(nr_equal(nr_mul(NeckVec::delta(Scalar(1), 1), x), x),
             "delta_1 is the unit" + tag);
    ck.check(nr_equal(nr_add(x, nr_scale(x, Scalar(-1))), NeckVec::zero(Ring::Z())),
             "additive inverse" + tag);
    ck.check(gh_same(nr_phi(nr_add(x, y)), gh_add(nr_phi(x), nr_phi(y))),
             "phi is additive" + tag);
    ck.check(gh_same(nr_phi(nr_mul(x, y)), gh_mul(nr_phi(x), nr_phi(y))),
             "phi transports the product" + tag);

    // Ghost ring axioms on random periodic vectors.
    const GhostVec a = random_periodic_z(rng);
    const GhostVec b = random_periodic_z(rng);
    const GhostVec c = random_periodic_z(rng);
    ck.check(gh_same(gh_mul(a, gh_add(b, c)), gh_add(gh_mul(a, b), gh_mul(a, c))),
             "gh distributes" + tag);
    ck.check(gh_same(gh_mul(a, GhostVec::constant(Ring::Z(), Scalar(1))), a),
             "gh unit" + tag);
    ck.check(gh_same(gh_mul(gh_mul(a, b), c), gh_mul(a, gh_mul(b, c))),
             "gh mul associates" + tag);

    // Finite-support certificate.
    try {
      const i64 cc = finite_support_certificate(x);
      bool divides = true;
      for (i64 idx : x.support()) divides = divides && cc % idx == 0;
      ck.check(divides, "certificate divisibility" + tag);
    } catch (const Error&) {
      ck.check(false, "certificate raised" + tag);
    }

    // phi injectivity over Z via the roundtrip through Q.
    const NeckVec lifted = x.coerced(Ring::Q());
    const NeckVec back = nr_phi_inv_exact(nr_phi(lifted));
    ck.check(nr_equal(back, lifted), "phi roundtrip" + tag);
  }
  return ck.res;
}

// ----------------------------------------------------------------- vft --

template <typename Vec, typename ApplyFn, typename EqFn, typename ScaleFn>
void operator_identities(Checker& ck, const Vec& x, i64 r, i64 s,
                         ApplyFn apply, EqFn eq, ScaleFn scale,
                         const Vec& zero, const std::string& side) {
  const i64 g = gcd_i64(r, s);
  const std::string tag = " on " + side + " " + rs_tag(r, s);
  auto V = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::V, k}); };
  auto Vd = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::Vdiv, k}); };
  auto F = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::F, k}); };
  auto T = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::T, k}); };
  auto W = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::W, k}); };

  ck.check(eq(V(r, V(s, x)), V(r * s, x)), "V_r V_s = V_rs" + tag);
  ck.check(eq(F(r, F(s, x)), F(r * s, x)), "F_r F_s = F_rs" + tag);
  ck.check(eq(F(r, V(r, x)), scale(x, r)), "F_r V_r = r id" + tag);
  if (g == 1)
    ck.check(eq(F(r, V(s, x)), V(s, F(r, x))), "F_r V_s = V_s F_r" + tag);
  ck.check(eq(F(r, V(s, x)), scale(F(r / g, V(s / g, x)), g)),
           "F_r V_s = (r,s) F_{r/g} V_{s/g}" + tag);
  ck.check(eq(Vd(r, Vd(s, x)), Vd(r * s, x)), "V'_r V'_s = V'_rs" + tag);
  ck.check(eq(F(r, Vd(r, x)), x), "F_r V'_r = id" + tag);
  ck.check(eq(T(r, T(s, x)), T(g, x)), "T_r T_s = T_(r,s)" + tag);
  ck.check(eq(F(r, T(s, x)), T(s / g, F(g, x))),
           "F_r T_s = T_{s/g} F_g" + tag);
  if (r % s == 0)
    ck.check(eq(T(r, V(s, x)), V(s, T(r / s, x))),
             "T_r V_s = V_s T_{r/s}" + tag);
  else
    ck.check(eq(T(r, V(s, x)), zero), "T_r V_s = 0" + tag);
  ck.check(eq(F(r, W(s, x)), W(s / g, F(r, x))),
           "F_r W_s = W_{s/g} F_r" + tag);
  if (r % s != 0)
    ck.check(eq(T(r, W(s, x)), zero), "T_r W_s = 0" + tag);
  ck.check(eq(W(r, W(r, x)), W(r, x)), "W_r W_r = W_r" + tag);
}

SuiteResult suite_vft(std::uint64_t seed, int cases) {
  Checker ck("vft");
  Rng rng(seed);
  const i64 max_rs = 12;
  auto nr_eq = [](const NeckVec& a, const NeckVec& b) { return nr_equal(a, b); };
  auto nr_ap = [](const NeckVec& v, Op op) { return nr_apply(v, op); };
  auto nr_sc = [](const NeckVec& v, i64 k) {
    return nr_scale(v, Scalar(static_cast<long>(k)));
  };
  auto gh_ap = [](const GhostVec& v, Op op) { return gh_apply(v, op); };
  auto gh_sc = [](const GhostVec& v, i64 k) {
    return gh_scale(v, Scalar(static_cast<long>(k)));
  };

  const int vectors = std::max(1, cases / 10);
  for (int it = 0; it < vectors; ++it) {
    const NeckVec x = random_sparse_q(rng, 12, 3, 5);
    const GhostVec a = random_periodic_q(rng, 6, 5);
    const NeckVec nzero = NeckVec::zero(Ring::Q());
    const GhostVec gzero = GhostVec::zero(Ring::Q());
    for (i64 r = 1; r <= max_rs; ++r)
      for (i64 s = 1; s <= max_rs; ++s) {
        operator_identities(ck, x, r, s, nr_ap, nr_eq, nr_sc, nzero, "Nr");
        operator_identities(ck, a, r, s, gh_ap, gh_same, gh_sc, gzero, "Gh");
      }
    // phi commutes with every operator.
    for (i64 r = 1; r <= 6; ++r) {
      for (OpKind k : {OpKind::V, OpKind::Vdiv, OpKind::F, OpKind::T, OpKind::W}) {
        const Op op{k, r};
        ck.check(gh_same(nr_phi(nr_apply(x, op)), gh_apply(nr_phi(x), op)),
                 "phi commutes with operator kind " +
                     std::to_string(static_cast<int>(k)) + " r=" +
                     std::to_string(r));
      }
    }
    // F_r is a ring homomorphism; V_r is additive.
    const NeckVec y = random_sparse_q(rng, 12, 3, 5);
    for (i64 r = 1; r <= 6; ++r) {
      ck.check(nr_equal(nr_apply(nr_mul(x, y), Op{OpKind::F, r}),
                        nr_mul(nr_apply(x, Op{OpKind::F, r}),
                               nr_apply(y, Op{OpKind::F, r}))),
               "F_r multiplicative on Nr r=" + std::to_string(r));
      ck.check(nr_equal(nr_apply(nr_add(x, y), Op{OpKind::V, r}),
                        nr_add(nr_apply(x, Op{OpKind::V, r}),
                               nr_apply(y, Op{OpKind::V, r}))),
               "V_r additive on Nr r=" + std::to_string(r));
    }
    // Bezout witness: gcd(c, r) = 1 gives s with r | s and F_s(a) = a.
    const i64 c = a.period();
    for (i64 r = 1; r <= max_rs; ++r) {
      if (gcd_i64(c, r) != 1) continue;
      i64 q = 1;
      while ((q * r) % c != 1 % c) ++q;  // q r = 1 (mod c), q > 0
      const i64 s = q * r;
      ck.check(gh_same(gh_apply(a, Op{OpKind::F, s}), a),
               "Bezout witness F_s(a) = a, s=" + std::to_string(s));
    }
  }
  return ck.res;
}

// ----------------------------------------------------------------- enr --

SuiteResult suite_enr(std::uint64_t seed, int cases) {
  Checker ck("enr");
  Rng rng(seed);
  const i64 order = 40;
  for (int it = 0; it < cases; ++it) {
    const std::string tag = " #" + std::to_string(it);
    const LambdaSeries f = random_integer_series(rng, order);
    const NeckVec e = lam_enr(f);
    ck.check(gh_same(nr_phi(e), lam_z(f)), "phi(E_Nr(f)) = z(f)" + tag);
    ck.check(lam_equal(lam_enr_inv(e, order), f), "E_Nr inverse roundtrip" + tag);

    // E_Nr o E_Nr^{-1} = id on small sparse exponent vectors.
    const NeckVec x = random_sparse_z(rng, 12, 4, 4);
    const LambdaSeries g = lam_enr_inv(x, order);
    const NeckVec back = lam_enr(g);
    bool same = true;
    for (i64 n = 1; n <= order; ++n) same = same && back.at(n) == x.at(n);
    ck.check(same, "E_Nr of expanded product recovers exponents" + tag);

    // z is a ring homomorphism.
    const LambdaSeries h = random_integer_series(rng, order);
    ck.check(gh_same(lam_z(lam_add(f, h)), gh_add(lam_z(f), lam_z(h))),
             "z additive" + tag);
    ck.check(gh_same(lam_z(lam_mul(f, h)), gh_mul(lam_z(f), lam_z(h))),
             "z multiplicative" + tag);

    // Functoriality through Z -> Q and a Galois map.
    const RingHom incl = RingHom::embed(Ring::Z(), Ring::Q());
    ck.check(gh_same(lam_z(lam_map(f, incl)), gh_map(lam_z(f), incl)),
             "z commutes with Z->Q" + tag);
    ck.check(gh_same(nr_phi(nr_map(x, incl)), gh_map(nr_phi(x), incl)),
             "phi commutes with Z->Q" + tag);
    bool enr_functorial = true;
    const NeckVec mapped = lam_enr(lam_map(f, incl));
    for (i64 n = 1; n <= order; ++n)
      enr_functorial = enr_functorial && mapped.at(n) == e.at(n).coerced(Ring::Q());
    ck.check(enr_functorial, "Nr(F) E_Nr = E_Nr Lambda(F)" + tag);
  }
  // Galois functoriality over Q(zeta_3).
  {
    const RingHom gal = RingHom::galois(3, 2);
    std::map<i64, Scalar> entries;
    entries.emplace(1, Scalar::zeta(3, 1));
    entries.emplace(3, Scalar::zeta(3, 2));
    const NeckVec x = NeckVec::sparse(Ring::Qzeta(3), std::move(entries));
    ck.check(gh_same(nr_phi(nr_map(x, gal)), gh_map(nr_phi(x), gal)),
             "phi commutes with the Galois map");
  }
  return ck.res;
}

// -------------------------------------------------------------- thm322 --

SuiteResult suite_thm322(std::uint64_t seed, int cases) {
  Checker ck("thm322");
  Rng rng(seed);
  (void)cases;
  for (i64 r = 1; r <= 60; ++r)
    for (i64 s = 1; s <= 60; ++s) {
      const NeckVec x = random_sparse_q(rng, 2 * r, 4, 9);
      const NeckVec y = random_sparse_q(rng, 2 * s, 4, 9);
      ck.check(truncated_product_entry(x, y, r, s) ==
                   truncated_product_entry_direct(x, y, r, s),
               "factorized = direct " + rs_tag(r, s));
    }
  // The worked r=12, s=18 factorization.
  {
    const Scalar x4(3), x12(-5), y9(7), y18(2);
    NeckVec x = nr_add(NeckVec::delta(x4, 4), NeckVec::delta(x12, 12));
    NeckVec y = nr_add(NeckVec::delta(y9, 9), NeckVec::delta(y18, 18));
    const Scalar four_terms = x4 * y9 + Scalar(3) * x12 * y9 +
                              Scalar(2) * x4 * y18 + Scalar(6) * x12 * y18;
    ck.check(truncated_product_entry(x, y, 12, 18) == four_terms,
             "worked example: four-term expansion");
    const Scalar u4 = nr_apply(x, Op{OpKind::F, 3}).at(4);
    const Scalar v9 = nr_apply(y, Op{OpKind::F, 2}).at(9);
    ck.check(four_terms == u4 * v9, "worked example: (F_3 x)_4 (F_2 y)_9");
  }
  return ck.res;
}

// -------------------------------------------------------------- intval --

SuiteResult suite_intval(std::uint64_t seed, int cases) {
  Checker ck("intval");
  (void)seed;
  (void)cases;

  std::vector<std::pair<std::string, ClassFunction>> accepted;
  std::vector<std::pair<std::string, ClassFunction>> rejected;

  for (int n : {3, 4}) {
    const ClassFunction perm = cf_perm_character_sn(n);
    const i64 e = perm.group()->exponent();
    auto powers = cf_lambda_powers(perm, 2 * e);
    for (size_t i = 0; i < powers.size(); ++i)
      accepted.emplace_back(
          "lambda^" + std::to_string(i) + " of S" + std::to_string(n) + " perm",
          powers[i]);
  }
  for (int n : {2, 3, 4})
    accepted.emplace_back("sign of S" + std::to_string(n), sign_character_sn(n));
  accepted.emplace_back("regular of Z2",
                        cf_from_values(cyclic_group(2), Ring::Z(),
                                       {Scalar(2), Scalar(0)}));
  for (int k = 0; k < 6; ++k) {
    auto chi = cyclic_linear_character(6, k);
    const std::string name = "Z6 linear k=" + std::to_string(k);
    if (k == 0 || k == 3)
      accepted.emplace_back(name, chi);
    else
      rejected.emplace_back(name, chi);
  }

  for (const auto& [name, chi] : accepted) {
    try {
      const auto v = cf_is_integer_valued(chi);
      ck.check(v.integer_valued && v.agree, name + " accepted unanimously");
    } catch (const Error& e) {
      ck.check(false, name + " raised: " + e.what());
    }
  }
  for (const auto& [name, chi] : rejected) {
    try {
      const auto v = cf_is_integer_valued(chi);
      ck.check(!v.integer_valued && v.agree, name + " rejected unanimously");
    } catch (const Error& e) {
      ck.check(false, name + " raised: " + e.what());
    }
  }

  // The rejected Z6 character has off-divisor support in its truncated
  // exponent vector.
  {
    const auto res = cf_necklace_at(cyclic_linear_character(6, 1), 1, 40);
    ck.check(!res.integer_valued, "Z6 zeta-valued falls back to truncated");
    bool off_divisor = false;
    for (i64 n = 1; n <= 40; ++n)
      if (6 % n != 0 && !res.vec.at(n).is_zero()) off_divisor = true;
    ck.check(off_divisor, "truncated vector has support off divisors(6)");
  }
  return ck.res;
}

// -------------------------------------------------------------- symrep --

i64 ipow(i64 base, i64 exp) {
  i64 v = 1;
  for (i64 i = 0; i < exp; ++i) v *= base;
  return v;
}

SuiteResult suite_symrep(std::uint64_t seed, int cases) {
  Checker ck("symrep");
  Rng rng(seed);
  const int mats_per_size = std::max(1, cases / 100);

  for (i64 k = 1; k <= 3; ++k) {
    for (int rep = 0; rep < mats_per_size; ++rep) {
      const MASMatrix Q = random_mas(rng, k);
      const std::string tag =
          " (k=" + std::to_string(k) + " #" + std::to_string(rep) + ")";

      // Traces of P(Q,l).
      for (i64 l = 1; l <= 6; ++l) {
        if (ipow(k, l) > kMatrixSizeCap) break;
        const Scalar expected = l % 2 == 1
                                    ? Scalar(static_cast<long>(k)).coerced(Ring::Q())
                                    : Q.trace().coerced(Ring::Q());
        ck.check(p_matrix(Q, l).trace() == expected,
                 "Tr P(Q," + std::to_string(l) + ")" + tag);
      }
      // P(Q,l) recursion against the Kronecker route.
      for (i64 l = 2; l <= 4; ++l) {
        if (ipow(k, l) > kMatrixSizeCap) break;
        ExactMatrix lhs = p_matrix(Q, l);
        ExactMatrix rhs = p_matrix(Q, l - 1).kron(ExactMatrix::identity(Q.ring(), k));
        ExactMatrix tail =
            l >= 3 ? ExactMatrix::identity(Q.ring(), ipow(k, l - 2))
                         .kron(p_matrix(Q, 2))
                   : p_matrix(Q, 2);
        ck.check(lhs.equal(rhs.mul(tail)),
                 "P recursion l=" + std::to_string(l) + tag);
      }

      ck.check(relations_check(Q, 4).all_ok, "relations hold" + tag);

      // Closed character against the Kronecker trace, all of S_4.
      const int n = 4;
      GroupPtr sym = symmetric_group(n);
      for (int c = 0; c < sym->class_count(); ++c) {
        const auto& parts = sym->partition_of_class(c);
        // A representative with consecutive cycles.
        std::vector<int> img(static_cast<size_t>(n));
        int base = 1;
        for (int l : parts) {
          for (int i = 0; i < l; ++i)
            img[static_cast<size_t>(base - 1 + i)] = base + (i + 1) % l;
          base += l;
        }
        const Permutation sigma = Permutation::from_images(img);
        const ExactMatrix rho = rep_matrix(Q, n, sigma);
        ck.check(rho.trace() == chi_closed(Q, parts).coerced(Ring::Q()),
                 "chi closed = trace at " + std::to_string(c) + tag);
        ck.check(rho.equal(rep_matrix_alt_word(Q, n, sigma)),
                 "word independence at " + std::to_string(c) + tag);
        // Kronecker assembly for consecutive cycles.
        ExactMatrix kron = p_matrix(Q, parts[0]);
        for (size_t i = 1; i < parts.size(); ++i)
          kron = kron.kron(p_matrix(Q, parts[i]));
        ck.check(rho.equal(kron), "Kronecker assembly at " + std::to_string(c) + tag);
      }

      // Closed-form exponent vectors against the generic character path.
      for (i64 nn = 1; nn <= 8; ++nn) {
        GroupPtr g = symmetric_group(static_cast<int>(nn));
        std::vector<Scalar> values;
        for (int c = 0; c < g->class_count(); ++c)
          values.push_back(chi_closed(Q, g->partition_of_class(c)));
        const ClassFunction chi = cf_from_values(g, Ring::Z(), values);
        std::vector<int> full(static_cast<size_t>(1), static_cast<int>(nn));
        const int full_class = g->class_of_partition(full);
        const auto generic = cf_necklace_at(chi, full_class, 16);
        ck.check(generic.integer_valued,
                 "generic path is sparse n=" + std::to_string(nn) + tag);
        ck.check(nr_equal(enr_full_cycle(Q, nn), generic.vec),
                 "full-cycle closed form n=" + std::to_string(nn) + tag);
        for (i64 r : divisors(nn)) {
          const NeckVec closed = enr_cycle_power(Q, nn, r);
          const NeckVec via_f = nr_apply(enr_full_cycle(Q, nn), Op{OpKind::F, r});
          ck.check(nr_equal(closed, via_f),
                   "cycle power = F_r of full cycle n=" + std::to_string(nn) +
                       " r=" + std::to_string(r) + tag);
          const int pow_class =
              g->class_of_partition(power_of_cycle_type(full, r));
          const auto generic_pow = cf_necklace_at(chi, pow_class, 16);
          ck.check(nr_equal(closed, generic_pow.vec),
                   "cycle power closed form n=" + std::to_string(nn) +
                       " r=" + std::to_string(r) + tag);
        }
      }

      // Per-permutation series against the determinant oracle on S_4.
      for (int c = 0; c < sym->class_count(); ++c) {
        const auto& parts = sym->partition_of_class(c);
        std::vector<int> img(static_cast<size_t>(n));
        int base = 1;
        for (int l : parts) {
          for (int i = 0; i < l; ++i)
            img[static_cast<size_t>(base - 1 + i)] = base + (i + 1) % l;
          base += l;
        }
        const Permutation sigma = Permutation::from_images(img);
        const auto res = lam_series_sigma(Q, n, sigma, 8);
        const LambdaSeries oracle = det_series(rep_matrix(Q, n, sigma), 8);
        const i64 upto = std::min(res.series.order(), oracle.order());
        bool same = true;
        for (i64 i = 0; i <= upto; ++i)
          same = same && res.series.coeff(i).coerced(Ring::Q()) == oracle.coeff(i);
        ck.check(same, "sigma series = det series at " + std::to_string(c) + tag);
      }
    }
  }
  return ck.res;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"ring", "vft", "enr",
                                              "thm322", "intval", "symrep"};
  return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed,
                             int cases) {
  if (name == "ring") return suite_ring(seed, cases);
  if (name == "vft") return suite_vft(seed, cases);
  if (name == "enr") return suite_enr(seed, cases);
  if (name == "thm322") return suite_thm322(seed, cases);
  if (name == "intval") return suite_intval(seed, cases);
  if (name == "symrep") return suite_symrep(seed, cases);
  raise(Errc::parse_error, "unknown verify suite: " + name);
}

}  // namespace lambdanr
