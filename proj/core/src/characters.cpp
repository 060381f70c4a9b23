#include "lambdanr/characters.hpp"

#include <algorithm>
#include <sstream>

namespace lambdanr {

namespace {

std::string partition_label(const std::vector<int>& parts) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

int PowerGroup::class_of_partition(const std::vector<int>& parts) const {
  for (size_t i = 0; i < partitions_.size(); ++i)
    if (partitions_[i] == parts) return static_cast<int>(i);
  raise(Errc::invalid_argument,
        "no class with cycle type " + partition_label(parts));
}

const std::vector<int>& PowerGroup::partition_of_class(int c) const {
  if (partitions_.empty())
    raise(Errc::invalid_argument, "not a symmetric group");
  return partitions_.at(static_cast<size_t>(c));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) raise(Errc::invalid_argument, "cyclic group order must be >= 1");
  auto g = std::make_shared<PowerGroup>();
  g->spec_ = {GroupSpec::Kind::cyclic, n, {}};
  g->exponent_ = n;
  g->classes_.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& ci = g->classes_[static_cast<size_t>(j)];
    ci.order = n / gcd_i64(n, j);
    ci.power_map.resize(static_cast<size_t>(ci.order));
    for (i64 k = 0; k < ci.order; ++k)
      ci.power_map[static_cast<size_t>(k)] =
          static_cast<int>((static_cast<i64>(j) * k) % n);
    ci.label = "g^" + std::to_string(j);
  }
  return g;
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 12)
    raise(Errc::invalid_argument, "symmetric group size must be in 1..12");
  auto g = std::make_shared<PowerGroup>();
  g->spec_ = {GroupSpec::Kind::symmetric, n, {}};
  g->partitions_ = partitions_of(n);

  // Power of a cycle type: a part of length l splits into gcd(l,k) parts of
  // length l/gcd(l,k).
  auto power_type = [](const std::vector<int>& parts, i64 k) {
    std::vector<int> out;
    for (int l : parts) {
      const i64 gg = gcd_i64(l, k);
      for (i64 i = 0; i < gg; ++i) out.push_back(static_cast<int>(l / gg));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  };

  g->classes_.resize(g->partitions_.size());
  i64 exponent = 1;
  for (size_t c = 0; c < g->partitions_.size(); ++c) {
    const auto& parts = g->partitions_[c];
    auto& ci = g->classes_[c];
    ci.order = 1;
    for (int l : parts) ci.order = lcm_i64(ci.order, l);
    exponent = lcm_i64(exponent, ci.order);
    ci.label = partition_label(parts);
    ci.power_map.resize(static_cast<size_t>(ci.order));
    for (i64 k = 0; k < ci.order; ++k) {
      std::vector<int> target = power_type(parts, k == 0 ? ci.order : k);
      bool found = false;
      for (size_t t = 0; t < g->partitions_.size(); ++t) {
        if (g->partitions_[t] == target) {
          ci.power_map[static_cast<size_t>(k)] = static_cast<int>(t);
          found = true;
          break;
        }
      }
      if (!found)
        raise(Errc::internal_disagreement, "power of a class left the table");
    }
  }
  g->exponent_ = exponent;
  return g;
}

GroupPtr product_group(GroupPtr a, GroupPtr b) {
  auto g = std::make_shared<PowerGroup>();
  g->spec_ = {GroupSpec::Kind::product, 0, {a->spec(), b->spec()}};
  g->exponent_ = lcm_i64(a->exponent(), b->exponent());
  const int mb = b->class_count();
  g->classes_.resize(static_cast<size_t>(a->class_count()) *
                     static_cast<size_t>(mb));
  for (int c1 = 0; c1 < a->class_count(); ++c1) {
    for (int c2 = 0; c2 < mb; ++c2) {
      auto& ci = g->classes_[static_cast<size_t>(c1) * mb + c2];
      ci.order = lcm_i64(a->cls(c1).order, b->cls(c2).order);
      ci.label = "(" + a->cls(c1).label + "," + b->cls(c2).label + ")";
      ci.power_map.resize(static_cast<size_t>(ci.order));
      for (i64 k = 0; k < ci.order; ++k)
        ci.power_map[static_cast<size_t>(k)] =
            a->power_class(c1, k) * mb + b->power_class(c2, k);
    }
  }
  return g;
}

ClassFunction::ClassFunction(GroupPtr group, Ring ring,
                             std::vector<Scalar> values)
    : group_(std::move(group)), ring_(ring), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->class_count())
    raise(Errc::length_mismatch,
          "value count " + std::to_string(values_.size()) +
              " does not match class count " +
              std::to_string(group_->class_count()));
  for (auto& v : values_) v = v.coerced(ring_);
}

ClassFunction cf_from_values(GroupPtr group, Ring ring,
                             std::vector<Scalar> values) {
  return ClassFunction(std::move(group), ring, std::move(values));
}

ClassFunction cf_adams(const ClassFunction& chi, i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "Adams index must be >= 1");
  const auto& g = chi.group();
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(g->class_count()));
  for (int c = 0; c < g->class_count(); ++c)
    out.push_back(chi.value(g->power_class(c, n)));
  return ClassFunction(g, chi.ring(), std::move(out));
}

namespace {

// Ghost vector of psi-values at a class, Periodic(O(g)).
GhostVec adams_ghost_at(const ClassFunction& chi, int c) {
  const auto& g = chi.group();
  const i64 o = g->cls(c).order;
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(o));
  for (i64 k = 1; k <= o; ++k) vals.push_back(chi.value(g->power_class(c, k)));
  return GhostVec::periodic(ring_join(chi.ring(), chi.ring()), std::move(vals));
}

}  // namespace

LambdaSeries cf_lambda_series_at(const ClassFunction& chi, int c, i64 order) {
  const GhostVec a = adams_ghost_at(chi, c);
  return lam_z_inv(a, order);
}

std::vector<ClassFunction> cf_lambda_powers(const ClassFunction& chi,
                                            i64 max_i) {
  if (max_i < 0) raise(Errc::invalid_argument, "max exterior power >= 0");
  const auto& g = chi.group();
  std::vector<std::vector<Scalar>> rows(
      static_cast<size_t>(max_i) + 1,
      std::vector<Scalar>(static_cast<size_t>(g->class_count())));
  Ring out_ring = Ring::Z();
  std::vector<LambdaSeries> per_class;
  per_class.reserve(static_cast<size_t>(g->class_count()));
  for (int c = 0; c < g->class_count(); ++c) {
    per_class.push_back(cf_lambda_series_at(chi, c, max_i));
    out_ring = ring_join(out_ring, per_class.back().ring());
  }
  for (i64 i = 0; i <= max_i; ++i)
    for (int c = 0; c < g->class_count(); ++c)
      rows[static_cast<size_t>(i)][static_cast<size_t>(c)] =
          per_class[static_cast<size_t>(c)].coeff(i);
  std::vector<ClassFunction> out;
  out.reserve(rows.size());
  for (auto& row : rows)
    out.emplace_back(g, out_ring, std::move(row));
  return out;
}

NecklaceAtResult cf_necklace_at(const ClassFunction& chi, int c,
                                i64 fallback_order) {
  const auto& g = chi.group();
  const i64 o = g->cls(c).order;
  GhostVec a = adams_ghost_at(chi, c);
  const Ring work = ring_join(chi.ring(), Ring::Q());
  a = gh_map(a, RingHom::embed(a.ring(), work));
  if (gh_is_truncation_image(a, o).holds) {
    NeckVec sparse = nr_phi_inv_exact(a);
    bool integral = true;
    for (const auto& [n, v] : sparse.entries()) {
      (void)n;
      if (!v.is_integer_value()) {
        integral = false;
        break;
      }
    }
    if (integral) {
      // Integer restriction values give integer exponents; re-tag over Z.
      std::map<i64, Scalar> entries;
      for (const auto& [n, v] : sparse.entries())
        entries.emplace(n, v.demoted(Ring::Z()));
      return {NeckVec::sparse(Ring::Z(), std::move(entries)), true};
    }
    return {std::move(sparse), true};
  }
  return {nr_phi_inv_truncated(a, fallback_order), false};
}

std::map<i64, ClassFunction> cf_necklace_global(const ClassFunction& chi) {
  for (const auto& v : chi.values())
    if (!v.is_integer_value())
      raise(Errc::not_integer_valued,
            "character value " + v.text() + " is not a rational integer");
  const auto& g = chi.group();
  const i64 e = g->exponent();
  std::map<i64, ClassFunction> out;
  for (i64 d : divisors(e)) {
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(g->class_count()));
    for (int c = 0; c < g->class_count(); ++c) {
      // alpha_d(c) = (1/d) sum_{d'|d} mu(d/d') chi(g^{d'}).
      Scalar acc(0);
      for (i64 dd : divisors(d)) {
        const int mu = mobius(d / dd);
        if (mu == 0) continue;
        const Scalar v = chi.value(g->power_class(c, dd));
        acc = mu > 0 ? acc + v : acc - v;
      }
      row.push_back(acc.coerced(Ring::Q()).div_by_integer(d).demoted(Ring::Z()));
    }
    out.emplace(d, ClassFunction(g, Ring::Z(), std::move(row)));
  }
  return out;
}

IntegerValuedVerdict cf_is_integer_valued(const ClassFunction& chi) {
  IntegerValuedVerdict v;
  const auto& g = chi.group();
  const i64 e = g->exponent();

  v.values_integral = std::all_of(
      chi.values().begin(), chi.values().end(),
      [](const Scalar& s) { return s.is_integer_value(); });

  // psi^n = psi^{gcd(n,e)} for n = 1..e, plus a sweep over n in (e, 2e]
  // coprime to e (these must reduce all the way to psi^1).
  v.adams_stable = true;
  for (i64 n = 1; n <= 2 * e && v.adams_stable; ++n) {
    if (n > e && gcd_i64(n, e) != 1) continue;
    v.adams_stable =
        cf_equal(cf_adams(chi, n), cf_adams(chi, gcd_i64(n, e)));
  }

  v.necklace_sparse = true;
  for (int c = 0; c < g->class_count() && v.necklace_sparse; ++c)
    v.necklace_sparse = cf_necklace_at(chi, c, 4).integer_valued;

  v.agree = v.values_integral == v.adams_stable &&
            v.adams_stable == v.necklace_sparse;
  if (!v.agree)
    raise(Errc::internal_disagreement,
          "integer-valuedness detectors disagree (input is not a virtual "
          "character)");
  v.integer_valued = v.values_integral;
  return v;
}

ClassFunction cf_product(const ClassFunction& chi1, const ClassFunction& chi2) {
  GroupPtr g = product_group(chi1.group(), chi2.group());
  const int mb = chi2.group()->class_count();
  const Ring ring = ring_join(chi1.ring(), chi2.ring());
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(g->class_count()));
  for (int c1 = 0; c1 < chi1.group()->class_count(); ++c1)
    for (int c2 = 0; c2 < mb; ++c2) vals.push_back(chi1.value(c1) * chi2.value(c2));
  return ClassFunction(std::move(g), ring, std::move(vals));
}

ClassFunction cf_restrict_cyclic(const ClassFunction& chi, int c) {
  const auto& g = chi.group();
  const i64 o = g->cls(c).order;
  GroupPtr h = cyclic_group(static_cast<int>(o));
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(o));
  for (i64 j = 0; j < o; ++j) vals.push_back(chi.value(g->power_class(c, j)));
  return ClassFunction(std::move(h), chi.ring(), std::move(vals));
}

ClassFunction cf_perm_character_sn(int n) {
  GroupPtr g = symmetric_group(n);
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(g->class_count()));
  for (int c = 0; c < g->class_count(); ++c) {
    const auto& parts = g->partition_of_class(c);
    long fixed = 0;
    for (int l : parts)
      if (l == 1) ++fixed;
    vals.push_back(Scalar(fixed));
  }
  return ClassFunction(std::move(g), Ring::Z(), std::move(vals));
}

bool cf_equal(const ClassFunction& a, const ClassFunction& b) {
  if (a.group()->class_count() != b.group()->class_count()) return false;
  for (int c = 0; c < a.group()->class_count(); ++c)
    if (!(a.value(c) == b.value(c))) return false;
  return true;
}

}  // namespace lambdanr
