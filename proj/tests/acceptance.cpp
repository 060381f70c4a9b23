// Acceptance suite: ten criteria, one pass/fail line each, every check
// exact. The binary exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include <lambdanr/characters.hpp>
#include <lambdanr/json_io.hpp>
#include <lambdanr/lambda_series.hpp>
#include <lambdanr/necklace.hpp>
#include <lambdanr/symrep.hpp>
#include <lambdanr/verify.hpp>

using namespace lambdanr;

namespace {

struct Check {
  int checks = 0;
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 10) failures.push_back(what);
    if (!ok && failures.size() >= 10) failures.resize(10);
  }
  bool ok() const { return failures.empty(); }
};

// A representative permutation with consecutive cycles for a cycle type.
Permutation representative(int n, const std::vector<int>& parts) {
  std::vector<int> img(static_cast<size_t>(n));
  int base = 1;
  for (int l : parts) {
    for (int i = 0; i < l; ++i)
      img[static_cast<size_t>(base - 1 + i)] = base + (i + 1) % l;
    base += l;
  }
  return Permutation::from_images(img);
}

ExactMatrix permutation_matrix(const Permutation& sigma) {
  ExactMatrix p(Ring::Q(), sigma.n());
  for (int i = 1; i <= sigma.n(); ++i)
    p.set(i - 1, sigma.apply(i) - 1, Scalar(1));
  return p;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------- C1 --

void criterion1(Check& ck) {
  Rng rng(1001);
  for (int it = 0; it < 200; ++it) {
    const NeckVec x = random_sparse_z(rng, 12, 4, 9);
    const NeckVec y = random_sparse_z(rng, 12, 4, 9);
    const NeckVec z = random_sparse_z(rng, 12, 4, 9);
    const std::string tag = " #" + std::to_string(it);
    ck(nr_equal(nr_add(x, y), nr_add(y, x)), "add commutes" + tag);
    ck(nr_equal(nr_add(nr_add(x, y), z), nr_add(x, nr_add(y, z))),
       "add associates" + tag);
    ck(nr_equal(nr_mul(x, y), nr_mul(y, x)), "mul commutes" + tag);
    ck(nr_equal(nr_mul(nr_mul(x, y), z), nr_mul(x, nr_mul(y, z))),
       "mul associates" + tag);
    ck(nr_equal(nr_mul(x, nr_add(y, z)), nr_add(nr_mul(x, y), nr_mul(x, z))),
       "distributes" + tag);
    ck(nr_equal(nr_mul(NeckVec::delta(Scalar(1), 1), x), x), "unit" + tag);
    ck(nr_equal(nr_add(x, nr_scale(x, Scalar(-1))), NeckVec::zero(Ring::Z())),
       "inverse" + tag);
    ck(gh_same(nr_phi(nr_add(x, y)), gh_add(nr_phi(x), nr_phi(y))),
       "phi additive" + tag);
    ck(gh_same(nr_phi(nr_mul(x, y)), gh_mul(nr_phi(x), nr_phi(y))),
       "phi multiplicative" + tag);
  }
}

// ---------------------------------------------------------------- C2 --

template <typename Vec, typename ApplyFn, typename EqFn, typename ScaleFn>
void identity_block(Check& ck, const Vec& x, i64 r, i64 s, ApplyFn apply,
                    EqFn eq, ScaleFn scale, const Vec& zero,
                    const std::string& side) {
  const i64 g = gcd_i64(r, s);
  const std::string tag =
      " [" + side + " r=" + std::to_string(r) + " s=" + std::to_string(s) + "]";
  auto V = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::V, k}); };
  auto Vd = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::Vdiv, k}); };
  auto F = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::F, k}); };
  auto T = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::T, k}); };
  auto W = [&](i64 k, const Vec& v) { return apply(v, Op{OpKind::W, k}); };

  ck(eq(V(r, V(s, x)), V(r * s, x)), "V V" + tag);
  ck(eq(F(r, F(s, x)), F(r * s, x)), "F F" + tag);
  ck(eq(F(r, V(r, x)), scale(x, r)), "F_r V_r" + tag);
  if (g == 1) ck(eq(F(r, V(s, x)), V(s, F(r, x))), "F V coprime" + tag);
  ck(eq(F(r, V(s, x)), scale(F(r / g, V(s / g, x)), g)), "F V gcd" + tag);
  ck(eq(Vd(r, Vd(s, x)), Vd(r * s, x)), "V' V'" + tag);
  ck(eq(F(r, Vd(r, x)), x), "F V'" + tag);
  ck(eq(T(r, T(s, x)), T(g, x)), "T T" + tag);
  ck(eq(F(r, T(s, x)), T(s / g, F(g, x))), "F T" + tag);
  if (r % s == 0)
    ck(eq(T(r, V(s, x)), V(s, T(r / s, x))), "T V divides" + tag);
  else
    ck(eq(T(r, V(s, x)), zero), "T V zero" + tag);
  ck(eq(F(r, W(s, x)), W(s / g, F(r, x))), "F W" + tag);
  if (r % s != 0) ck(eq(T(r, W(s, x)), zero), "T W zero" + tag);
  ck(eq(W(r, W(r, x)), W(r, x)), "W idempotent" + tag);
}

void criterion2(Check& ck) {
  Rng rng(1002);
  auto nr_eq = [](const NeckVec& a, const NeckVec& b) { return nr_equal(a, b); };
  auto nr_ap = [](const NeckVec& v, Op op) { return nr_apply(v, op); };
  auto nr_sc = [](const NeckVec& v, i64 k) {
    return nr_scale(v, Scalar(static_cast<long>(k)));
  };
  auto gh_ap = [](const GhostVec& v, Op op) { return gh_apply(v, op); };
  auto gh_sc = [](const GhostVec& v, i64 k) {
    return gh_scale(v, Scalar(static_cast<long>(k)));
  };
  const NeckVec nzero = NeckVec::zero(Ring::Q());
  const GhostVec gzero = GhostVec::zero(Ring::Q());
  for (int it = 0; it < 50; ++it) {
    const NeckVec x = random_sparse_q(rng, 12, 3, 5);
    const GhostVec a = random_periodic_q(rng, 6, 5);
    for (i64 r = 1; r <= 12; ++r)
      for (i64 s = 1; s <= 12; ++s) {
        identity_block(ck, x, r, s, nr_ap, nr_eq, nr_sc, nzero, "Nr");
        identity_block(ck, a, r, s, gh_ap, gh_same, gh_sc, gzero, "Gh");
      }
  }
}

// ---------------------------------------------------------------- C3 --

void criterion3(Check& ck) {
  Rng rng(1003);
  for (int it = 0; it < 200; ++it) {
    const std::string tag = " #" + std::to_string(it);
    const LambdaSeries f = random_integer_series(rng, 40);
    const NeckVec e = lam_enr(f);
    ck(gh_same(nr_phi(e), lam_z(f)), "phi o E_Nr = z" + tag);
    ck(lam_equal(lam_enr_inv(e, 40), f), "E_Nr_inv o E_Nr = id" + tag);
    const NeckVec x = random_sparse_z(rng, 12, 4, 4);
    const NeckVec back = lam_enr(lam_enr_inv(x, 40));
    bool same = true;
    for (i64 n = 1; n <= 40; ++n) same = same && back.at(n) == x.at(n);
    ck(same, "E_Nr o E_Nr_inv = id" + tag);
  }
}

// ---------------------------------------------------------------- C4 --

void criterion4(Check& ck) {
  Rng rng(1004);
  for (i64 r = 1; r <= 60; ++r)
    for (i64 s = 1; s <= 60; ++s) {
      const NeckVec x = random_sparse_q(rng, 2 * r, 4, 9);
      const NeckVec y = random_sparse_q(rng, 2 * s, 4, 9);
      ck(truncated_product_entry(x, y, r, s) ==
             truncated_product_entry_direct(x, y, r, s),
         "factorized = direct r=" + std::to_string(r) +
             " s=" + std::to_string(s));
    }
  // Worked r=12, s=18 factorization with its four-term expansion.
  const Scalar x4(3), x12(-5), y9(7), y18(2);
  const NeckVec x =
      nr_add(NeckVec::delta(x4, 4), NeckVec::delta(x12, 12));
  const NeckVec y =
      nr_add(NeckVec::delta(y9, 9), NeckVec::delta(y18, 18));
  const Scalar four = x4 * y9 + Scalar(3) * x12 * y9 + Scalar(2) * x4 * y18 +
                      Scalar(6) * x12 * y18;
  ck(truncated_product_entry(x, y, 12, 18) == four, "four-term expansion");
  ck(nr_apply(x, Op{OpKind::F, 3}).at(4) * nr_apply(y, Op{OpKind::F, 2}).at(9) ==
         four,
     "(F_3 x)_4 (F_2 y)_9 factorization");
}

// ---------------------------------------------------------------- C5 --

void criterion5(Check& ck) {
  std::vector<std::pair<std::string, ClassFunction>> corpus;
  std::vector<bool> expected;

  for (int n : {3, 4}) {
    const ClassFunction perm = cf_perm_character_sn(n);
    const i64 e = perm.group()->exponent();
    const auto powers = cf_lambda_powers(perm, 2 * e);
    for (size_t i = 0; i < powers.size(); ++i) {
      corpus.emplace_back("lambda^" + std::to_string(i) + "(S" +
                              std::to_string(n) + " perm)",
                          powers[i]);
      expected.push_back(true);
    }
  }
  for (int n : {2, 3, 4}) {
    corpus.emplace_back("sign S" + std::to_string(n), sign_character_sn(n));
    expected.push_back(true);
  }
  corpus.emplace_back("regular Z2", cf_from_values(cyclic_group(2), Ring::Z(),
                                                   {Scalar(2), Scalar(0)}));
  expected.push_back(true);
  for (int k = 0; k < 6; ++k) {
    corpus.emplace_back("Z6 linear k=" + std::to_string(k),
                        cyclic_linear_character(6, k));
    expected.push_back(k == 0 || k == 3);
  }

  for (size_t i = 0; i < corpus.size(); ++i) {
    try {
      const auto v = cf_is_integer_valued(corpus[i].second);
      ck(v.agree && v.integer_valued == expected[i],
         corpus[i].first + " unanimous verdict");
    } catch (const Error& e) {
      ck(false, corpus[i].first + " raised " + e.what());
    }
  }

  // The rejected zeta_6-valued character: truncated exponent vector to 40.
  // Among indices n with n not dividing 6, the nonzero set (computed with an
  // independent symbolic oracle over Q(zeta_6)) is exactly:
  const std::vector<i64> nonzero{4,  5,  8,  11, 12, 15, 16, 17,
                                 20, 23, 24, 25, 29, 32, 33, 40};
  const auto res = cf_necklace_at(cyclic_linear_character(6, 1), 1, 40);
  ck(!res.integer_valued, "Z6 zeta character rejected per element");
  bool pattern = true;
  for (i64 n = 1; n <= 40; ++n) {
    if (6 % n == 0) continue;
    const bool expect_nonzero =
        std::find(nonzero.begin(), nonzero.end(), n) != nonzero.end();
    if (res.vec.at(n).is_zero() == expect_nonzero) {
      pattern = false;
      ck(false, "entry " + std::to_string(n) + " zero-pattern mismatch");
    }
  }
  ck(pattern, "off-divisor support pattern to n = 40");
  bool any_off_divisor = false;
  for (i64 n = 1; n <= 40; ++n)
    if (6 % n != 0 && !res.vec.at(n).is_zero()) any_off_divisor = true;
  ck(any_off_divisor, "support escapes the divisors of 6");
}

// ---------------------------------------------------------------- C6 --

void criterion6(Check& ck) {
  const ClassFunction perm3 = cf_perm_character_sn(3);
  const auto p3 = cf_lambda_powers(perm3, 3);
  ck(cf_equal(p3[2], cf_from_values(symmetric_group(3), Ring::Z(),
                                    {Scalar(3), Scalar(-1), Scalar(0)})),
     "S3 lambda^2 = (3,-1,0)");
  ck(cf_equal(p3[3], cf_from_values(symmetric_group(3), Ring::Z(),
                                    {Scalar(1), Scalar(-1), Scalar(1)})),
     "S3 lambda^3 = (1,-1,1)");

  const ClassFunction perm4 = cf_perm_character_sn(4);
  const auto p4 = cf_lambda_powers(perm4, 4);
  ck(cf_equal(p4[4], sign_character_sn(4)), "S4 lambda^4 = sign");

  // lambda^i at the identity is binomial(n, i), and every row matches
  // det(I + P t) for explicit permutation matrices, for n <= 6.
  for (int n = 3; n <= 6; ++n) {
    const ClassFunction perm = cf_perm_character_sn(n);
    const auto powers = cf_lambda_powers(perm, n);
    for (int i = 0; i <= n; ++i)
      ck(powers[static_cast<size_t>(i)].value(0) == Scalar(binomial(n, i)),
         "binomial at identity n=" + std::to_string(n) +
             " i=" + std::to_string(i));
    const auto& g = perm.group();
    for (int c = 0; c < g->class_count(); ++c) {
      const Permutation sigma = representative(n, g->partition_of_class(c));
      const LambdaSeries det = det_series(permutation_matrix(sigma), n);
      for (int i = 0; i <= n; ++i)
        ck(det.coeff(i) ==
               powers[static_cast<size_t>(i)].value(c).coerced(Ring::Q()),
           "det(I+Pt) coefficient n=" + std::to_string(n) + " class " +
               std::to_string(c) + " i=" + std::to_string(i));
    }
    ck(cf_equal(powers[static_cast<size_t>(n)], sign_character_sn(n)),
       "top power is the sign character n=" + std::to_string(n));
  }
}

// ---------------------------------------------------------------- C7 --

void criterion7(Check& ck) {
  for (int n : {3, 4}) {
    const ClassFunction perm = cf_perm_character_sn(n);
    const auto& g = perm.group();
    for (int c = 0; c < g->class_count(); ++c) {
      const std::string tag =
          " S" + std::to_string(n) + " class " + std::to_string(c);
      const auto res = cf_necklace_at(perm, c);
      ck(res.integer_valued, "sparse exact" + tag);
      if (!res.integer_valued) continue;
      const i64 o = g->cls(c).order;
      for (i64 idx : res.vec.support())
        ck(o % idx == 0, "support divides the order" + tag);
      for (const auto& [idx, v] : res.vec.entries()) {
        (void)idx;
        ck(v.is_integer_value(), "integer entries" + tag);
      }
      ck(lam_equal(lam_enr_inv(res.vec, 12).coerced(Ring::Q()),
                   cf_lambda_series_at(perm, c, 12).coerced(Ring::Q())),
         "re-expansion to order 12" + tag);
      for (i64 k = 1; k <= 12; ++k)
        ck(nr_equal(cf_necklace_at(perm, g->power_class(c, k)).vec,
                    nr_apply(res.vec, {OpKind::F, k})),
           "Frobenius shift k=" + std::to_string(k) + tag);
    }
  }
}

// ---------------------------------------------------------------- C8 --

void criterion8(Check& ck) {
  Rng rng(1008);
  for (i64 k = 1; k <= 3; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      const MASMatrix Q = random_mas(rng, k);
      const std::string tag =
          " [k=" + std::to_string(k) + " Q#" + std::to_string(rep) + "]";

      // Closed character equals the Kronecker trace for every sigma in S_n,
      // n <= 5.
      for (int n = 1; n <= 5; ++n) {
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        do {
          const Permutation sigma = Permutation::from_images(img);
          if (!(rep_matrix(Q, n, sigma).trace() ==
                chi_closed(Q, sigma.cycle_type()).coerced(Ring::Q()))) {
            ck(false, "chi = trace at n=" + std::to_string(n) + tag);
          }
        } while (std::next_permutation(img.begin(), img.end()));
        ck(true, "chi = trace sweep n=" + std::to_string(n) + tag);
      }

      // det series of the representation matrix equals the generic path.
      for (int n = 1; n <= 5; ++n) {
        GroupPtr g = symmetric_group(n);
        std::vector<Scalar> values;
        for (int c = 0; c < g->class_count(); ++c)
          values.push_back(chi_closed(Q, g->partition_of_class(c)));
        const ClassFunction chi = cf_from_values(g, Ring::Z(), values);
        for (int c = 0; c < g->class_count(); ++c) {
          const Permutation sigma = representative(n, g->partition_of_class(c));
          const LambdaSeries det = det_series(rep_matrix(Q, n, sigma), 8);
          const LambdaSeries generic =
              cf_lambda_series_at(chi, c, std::min<i64>(8, det.order()));
          ck(lam_agree_upto(det, generic.coerced(Ring::Q()), generic.order()),
             "det series = generic n=" + std::to_string(n) + " class " +
                 std::to_string(c) + tag);
        }
      }

      // Closed-form exponent vectors against the generic path for n <= 8.
      for (i64 n = 1; n <= 8; ++n) {
        GroupPtr g = symmetric_group(static_cast<int>(n));
        std::vector<Scalar> values;
        for (int c = 0; c < g->class_count(); ++c)
          values.push_back(chi_closed(Q, g->partition_of_class(c)));
        const ClassFunction chi = cf_from_values(g, Ring::Z(), values);
        const int full = g->class_of_partition({static_cast<int>(n)});
        ck(nr_equal(enr_full_cycle(Q, n), cf_necklace_at(chi, full).vec),
           "full cycle n=" + std::to_string(n) + tag);
        for (i64 r : divisors(n)) {
          const NeckVec closed = enr_cycle_power(Q, n, r);
          ck(nr_equal(closed,
                      nr_apply(enr_full_cycle(Q, n), {OpKind::F, r})),
             "cycle power = F_r n=" + std::to_string(n) +
                 " r=" + std::to_string(r) + tag);
          const int pc = g->class_of_partition(
              power_of_cycle_type({static_cast<int>(n)}, r));
          ck(nr_equal(closed, cf_necklace_at(chi, pc).vec),
             "cycle power generic n=" + std::to_string(n) +
                 " r=" + std::to_string(r) + tag);
        }
        // Arbitrary permutations through the per-cycle product.
        for (int c = 0; c < g->class_count(); ++c) {
          const auto res = lam_series_sigma(
              Q, static_cast<int>(n), representative(static_cast<int>(n),
                                                     g->partition_of_class(c)),
              10);
          ck(lam_equal(res.series.coerced(Ring::Q()),
                       cf_lambda_series_at(chi, c, 10).coerced(Ring::Q())),
             "sigma series generic n=" + std::to_string(n) + " class " +
                 std::to_string(c) + tag);
        }
      }

      ck(relations_check(Q, 4).all_ok, "relations" + tag);
    }
  }
}

// ---------------------------------------------------------------- C9 --

void criterion9(Check& ck) {
  Rng rng(1009);
  for (int it = 0; it < 500; ++it) {
    const NeckVec x = random_sparse_z(rng, 12, 4, 9);
    try {
      const i64 c = finite_support_certificate(x);
      bool divides = true;
      for (i64 idx : x.support()) divides = divides && c % idx == 0;
      ck(divides, "support within divisors #" + std::to_string(it));
    } catch (const Error& e) {
      ck(false, std::string("certificate raised ") + e.what());
    }
  }
}

// --------------------------------------------------------------- C10 --

void criterion10(Check& ck) {
  Rng rng(1010);
  const i64 size = 2000;
  auto random_truncated = [&] {
    std::vector<Scalar> vals;
    vals.reserve(static_cast<size_t>(size));
    for (i64 i = 0; i < size; ++i)
      vals.push_back(Scalar::rational(
          mpz_class(static_cast<long>(rng.uniform(-9, 9))),
          mpz_class(static_cast<long>(rng.uniform(1, 6)))));
    return NeckVec::truncated(Ring::Q(), std::move(vals));
  };
  const NeckVec x = random_truncated();
  const NeckVec y = random_truncated();

  const auto t0 = std::chrono::steady_clock::now();
  const NeckVec direct = nr_mul(x, y);
  const auto t1 = std::chrono::steady_clock::now();
  const NeckVec ghost = nr_mul_ghost_route(x, y);
  const auto t2 = std::chrono::steady_clock::now();

  bool agree = true;
  for (i64 n = 1; n <= 64; ++n) agree = agree && direct.at(n) == ghost.at(n);
  for (int i = 0; i < 64; ++i) {
    const i64 n = rng.uniform(1, size);
    agree = agree && direct.at(n) == ghost.at(n);
  }
  ck(agree, "strategies agree on sampled entries");
  std::cout << "       info: direct_ms="
            << std::chrono::duration<double, std::milli>(t1 - t0).count()
            << " ghost_ms="
            << std::chrono::duration<double, std::milli>(t2 - t1).count()
            << " (informational)\n";
}

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "necklace ring axioms + ghost transport (200 triples)", 5.0, criterion1},
      {2, "operator identity suite on Nr and Gh, r,s <= 12", 30.0, criterion2},
      {3, "E_Nr coherence: phi o E_Nr = z and roundtrips, order 40", 10.0, criterion3},
      {4, "factorized truncated product = direct convolution, r,s <= 60", 60.0, criterion4},
      {5, "integer-valued detector equivalence on the corpus", 10.0, criterion5},
      {6, "exterior-power tables vs det(I+Pt)", 5.0, criterion6},
      {7, "per-element factorization + Frobenius shift on S3/S4", 10.0, criterion7},
      {8, "closed forms vs matrix oracles (n <= 5 sweep, n <= 8 forms)", 120.0, criterion8},
      {9, "finite-support certificate on 500 sparse vectors", 10.0, criterion9},
      {10, "multiplication strategies agree at size 2000", 600.0, criterion10},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check ck;
    const auto start = std::chrono::steady_clock::now();
    std::string exception_line;
    try {
      crit.run(ck);
    } catch (const std::exception& e) {
      exception_line = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = secs < crit.budget_seconds;
    const bool pass = ck.ok() && exception_line.empty() && in_budget;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " C" << crit.id << " "
         << crit.label << " (" << ck.checks << " checks, " << secs << "s)";
    std::cout << line.str() << "\n";
    if (!pass) {
      ++failed;
      if (!exception_line.empty())
        std::cout << "       raised: " << exception_line << "\n";
      if (!in_budget)
        std::cout << "       over budget of " << crit.budget_seconds << "s\n";
      for (const auto& f : ck.failures) std::cout << "       failed: " << f << "\n";
    }
  }
  if (failed != 0) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
