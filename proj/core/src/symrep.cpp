#include "lambdanr/symrep.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lambdanr {

ExactMatrix::ExactMatrix(Ring ring, i64 dim)
    : ring_(ring), dim_(dim), rows_(static_cast<size_t>(dim)) {
  if (dim < 1) raise(Errc::invalid_argument, "matrix dimension must be >= 1");
}

ExactMatrix ExactMatrix::identity(Ring ring, i64 dim) {
  ExactMatrix m(ring, dim);
  for (i64 i = 0; i < dim; ++i) m.set(i, i, Scalar(1).coerced(ring));
  return m;
}

void ExactMatrix::set(i64 i, i64 j, Scalar v) {
  auto& row = rows_[static_cast<size_t>(i)];
  if (v.is_zero())
    row.erase(j);
  else
    row[j] = v.coerced(ring_);
}

Scalar ExactMatrix::get(i64 i, i64 j) const {
  const auto& row = rows_[static_cast<size_t>(i)];
  auto it = row.find(j);
  return it == row.end() ? Scalar(0).coerced(ring_) : it->second;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& other) const {
  if (dim_ != other.dim_)
    raise(Errc::invalid_argument, "matrix dimension mismatch");
  const Ring ring = ring_join(ring_, other.ring_);
  ExactMatrix out(ring, dim_);
  for (i64 i = 0; i < dim_; ++i) {
    std::map<i64, Scalar> acc;
    for (const auto& [k, a] : rows_[static_cast<size_t>(i)]) {
      for (const auto& [j, b] : other.rows_[static_cast<size_t>(k)]) {
        Scalar term = a * b;
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, std::move(term));
        else
          it->second = it->second + term;
      }
    }
    for (auto& [j, v] : acc)
      if (!v.is_zero()) out.set(i, j, std::move(v));
  }
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& other) const {
  const i64 da = dim_, db = other.dim_;
  if (da * db > kMatrixSizeCap)
    raise(Errc::size_limit, "Kronecker product exceeds the matrix size cap");
  ExactMatrix out(ring_join(ring_, other.ring_), da * db);
  for (i64 ia = 0; ia < da; ++ia)
    for (const auto& [ja, a] : rows_[static_cast<size_t>(ia)])
      for (i64 ib = 0; ib < db; ++ib)
        for (const auto& [jb, b] : other.rows_[static_cast<size_t>(ib)])
          out.set(ia * db + ib, ja * db + jb, a * b);
  return out;
}

Scalar ExactMatrix::trace() const {
  Scalar acc = Scalar(0).coerced(ring_);
  for (i64 i = 0; i < dim_; ++i) acc = acc + get(i, i);
  return acc;
}

bool ExactMatrix::equal(const ExactMatrix& other) const {
  if (dim_ != other.dim_) return false;
  for (i64 i = 0; i < dim_; ++i) {
    const auto& ra = rows_[static_cast<size_t>(i)];
    const auto& rb = other.rows_[static_cast<size_t>(i)];
    // Entry sets may differ only through explicit zeros, which set() drops.
    if (ra.size() != rb.size()) return false;
    auto it = rb.begin();
    for (const auto& [j, v] : ra) {
      if (it->first != j || !(it->second == v)) return false;
      ++it;
    }
  }
  return true;
}

MASMatrix MASMatrix::validate(i64 k, std::vector<std::vector<Scalar>> entries) {
  if (k < 1) raise(Errc::invalid_argument, "MAS dimension must be >= 1");
  if (static_cast<i64>(entries.size()) != k)
    raise(Errc::length_mismatch, "MAS row count does not match k");
  for (const auto& row : entries)
    if (static_cast<i64>(row.size()) != k)
      raise(Errc::length_mismatch, "MAS column count does not match k");
  Ring ring = Ring::Q();
  for (const auto& row : entries)
    for (const auto& v : row) ring = ring_join(ring, v.ring());
  for (i64 i = 0; i < k; ++i)
    for (i64 j = 0; j < k; ++j) {
      const Scalar prod = entries[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                          entries[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (!prod.is_one())
        raise(Errc::not_mas, "q_" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + " * q_" +
                                 std::to_string(j + 1) + "," +
                                 std::to_string(i + 1) + " != 1");
    }
  MASMatrix m;
  m.k_ = k;
  m.ring_ = ring;
  m.entries_ = std::move(entries);
  Scalar tr = Scalar(0);
  for (i64 i = 0; i < k; ++i)
    tr = tr + m.entries_[static_cast<size_t>(i)][static_cast<size_t>(i)];
  m.trace_ = tr.demoted(Ring::Z());  // q_ii = +-1 forces an integer trace
  return m;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      raise(Errc::parse_error, "permutation images are not a bijection");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  return from_images(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[static_cast<size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[static_cast<size_t>(x - 1)] = true;
      cyc.push_back(x);
      x = apply(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

i64 Permutation::order() const {
  i64 o = 1;
  for (int l : cycle_type()) o = lcm_i64(o, l);
  return o;
}

Permutation parse_permutation(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  int max_point = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      raise(Errc::parse_error, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        raise(Errc::parse_error, "expected a point in cycle notation");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      cyc.push_back(v);
      max_point = std::max(max_point, v);
      skip_ws();
      if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) raise(Errc::parse_error, "unterminated cycle");
    ++pos;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (n == 0) n = max_point;
  if (n < 1)
    raise(Errc::parse_error,
          "cannot infer the degree of the identity permutation");
  if (max_point > n)
    raise(Errc::parse_error, "cycle mentions a point beyond n");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (used[static_cast<size_t>(v - 1)])
        raise(Errc::parse_error, "point repeated across cycles");
      used[static_cast<size_t>(v - 1)] = true;
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      img[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation::from_images(std::move(img));
}

std::vector<int> power_of_cycle_type(const std::vector<int>& type, i64 k) {
  std::vector<int> out;
  for (int l : type) {
    const i64 g = gcd_i64(l, k == 0 ? l : k);
    for (i64 i = 0; i < g; ++i) out.push_back(static_cast<int>(l / g));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

i64 checked_power_dim(i64 k, i64 l) {
  i64 dim = 1;
  for (i64 i = 0; i < l; ++i) {
    dim *= k;
    if (dim > kMatrixSizeCap)
      raise(Errc::size_limit, "matrix size k^l exceeds the cap");
  }
  return dim;
}

// F_{l,j,i} of the block recursion (k^l x k^l); j, i are 0-based here.
ExactMatrix f_block(const MASMatrix& Q, i64 l, i64 j, i64 i) {
  const i64 k = Q.k();
  if (l == 0) {
    ExactMatrix m(Q.ring(), 1);
    if (i == j) m.set(0, 0, Scalar(1));
    return m;
  }
  const i64 sub = checked_power_dim(k, l - 1);
  ExactMatrix m(Q.ring(), checked_power_dim(k, l));
  const Scalar& q = Q.entry(j, i);
  for (i64 c = 0; c < k; ++c) {
    const ExactMatrix blk = f_block(Q, l - 1, c, i);
    for (i64 r = 0; r < sub; ++r)
      for (const auto& [cc, v] : blk.row(r))
        m.set(j * sub + r, c * sub + cc, q * v);
  }
  return m;
}

}  // namespace

ExactMatrix p_matrix(const MASMatrix& Q, i64 l) {
  if (l < 1) raise(Errc::invalid_argument, "P(Q,l) needs l >= 1");
  const i64 k = Q.k();
  const i64 dim = checked_power_dim(k, l);
  const i64 sub = dim / k;
  ExactMatrix m(Q.ring(), dim);
  for (i64 i = 0; i < k; ++i)
    for (i64 j = 0; j < k; ++j) {
      const ExactMatrix blk = f_block(Q, l - 1, j, i);
      for (i64 r = 0; r < sub; ++r)
        for (const auto& [c, v] : blk.row(r)) m.set(i * sub + r, j * sub + c, v);
    }
  return m;
}

namespace {

ExactMatrix generator_matrix(const MASMatrix& Q, int n, int i) {
  // id^{(x)(i-1)} (x) P(Q,2) (x) id^{(x)(n-i-1)}, i in 1..n-1.
  const i64 k = Q.k();
  checked_power_dim(k, n);
  ExactMatrix m = i > 1 ? ExactMatrix::identity(Q.ring(), checked_power_dim(k, i - 1))
                        : p_matrix(Q, 2);
  if (i > 1) m = m.kron(p_matrix(Q, 2));
  if (n - i - 1 > 0)
    m = m.kron(ExactMatrix::identity(Q.ring(), checked_power_dim(k, n - i - 1)));
  return m;
}

// Adjacent-transposition word with sigma = prod of generators in order.
std::vector<int> word_bubble(const Permutation& sigma) {
  std::vector<int> line(static_cast<size_t>(sigma.n()));
  for (int i = 1; i <= sigma.n(); ++i)
    line[static_cast<size_t>(i - 1)] = sigma.apply(i);
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < sigma.n(); ++i) {
      if (line[static_cast<size_t>(i)] > line[static_cast<size_t>(i + 1)]) {
        std::swap(line[static_cast<size_t>(i)], line[static_cast<size_t>(i + 1)]);
        swaps.push_back(i + 1);
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

// Alternative strategy: sink the largest misplaced value first.
std::vector<int> word_selection(const Permutation& sigma) {
  std::vector<int> line(static_cast<size_t>(sigma.n()));
  for (int i = 1; i <= sigma.n(); ++i)
    line[static_cast<size_t>(i - 1)] = sigma.apply(i);
  std::vector<int> swaps;
  for (int target = sigma.n(); target >= 1; --target) {
    int pos = 0;
    while (line[static_cast<size_t>(pos)] != target) ++pos;
    for (int i = pos; i + 1 < target; ++i) {
      std::swap(line[static_cast<size_t>(i)], line[static_cast<size_t>(i + 1)]);
      swaps.push_back(i + 1);
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

ExactMatrix rep_from_word(const MASMatrix& Q, int n,
                          const std::vector<int>& word) {
  ExactMatrix acc = ExactMatrix::identity(Q.ring(), checked_power_dim(Q.k(), n));
  for (int i : word) acc = acc.mul(generator_matrix(Q, n, i));
  return acc;
}

}  // namespace

ExactMatrix rep_matrix(const MASMatrix& Q, int n, const Permutation& sigma) {
  if (sigma.n() != n)
    raise(Errc::invalid_argument, "permutation degree does not match n");
  return rep_from_word(Q, n, word_bubble(sigma));
}

ExactMatrix rep_matrix_alt_word(const MASMatrix& Q, int n,
                                const Permutation& sigma) {
  if (sigma.n() != n)
    raise(Errc::invalid_argument, "permutation degree does not match n");
  return rep_from_word(Q, n, word_selection(sigma));
}

Scalar chi_closed(const MASMatrix& Q, const std::vector<int>& cycle_type) {
  i64 s1 = 0, s2 = 0;
  for (int l : cycle_type) (l % 2 != 0 ? s1 : s2) += 1;
  const Scalar k_part = Scalar(static_cast<long>(Q.k())).pow(s1);
  const Scalar tr_part = Q.trace().pow(s2);  // 0^0 = 1
  return k_part * tr_part;
}

LambdaSeries det_series(const ExactMatrix& A, i64 order) {
  if (!A.ring().q_algebra())
    raise(Errc::q_algebra_required,
          "det series needs rational or cyclotomic entries");
  const i64 n = std::min(order, A.dim());
  // Power sums p_j = tr(A^j), then Newton's identities
  // j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i.
  std::vector<Scalar> p(static_cast<size_t>(n) + 1, Scalar(0).coerced(A.ring()));
  ExactMatrix pow = ExactMatrix::identity(A.ring(), A.dim());
  for (i64 j = 1; j <= n; ++j) {
    pow = pow.mul(A);
    p[static_cast<size_t>(j)] = pow.trace();
  }
  std::vector<Scalar> e(static_cast<size_t>(n) + 1, Scalar(0).coerced(A.ring()));
  e[0] = Scalar(1).coerced(A.ring());
  for (i64 j = 1; j <= n; ++j) {
    Scalar acc = Scalar(0).coerced(A.ring());
    for (i64 i = 1; i <= j; ++i) {
      const Scalar term = e[static_cast<size_t>(j - i)] * p[static_cast<size_t>(i)];
      acc = i % 2 == 1 ? acc + term : acc - term;
    }
    e[static_cast<size_t>(j)] = acc.div_by_integer(j);
  }
  return LambdaSeries::from_coeffs(A.ring(), std::move(e));
}

namespace {

// Moebius inversion over the divisors of `modulus` of the ghost values
// k^{d*scale} (when 2^v | d) / Tr(Q)^{d*scale} (otherwise); the result is
// integral because these are values of an integer-valued character.
NeckVec moebius_on_divisors(const MASMatrix& Q, i64 modulus, i64 two_pow,
                            i64 power_scale) {
  std::map<i64, Scalar> out;
  for (i64 m : divisors(modulus)) {
    Scalar acc(0);
    for (i64 d : divisors(m)) {
      const int mu = mobius(m / d);
      if (mu == 0) continue;
      const Scalar v = d % two_pow == 0
                           ? Scalar(static_cast<long>(Q.k())).pow(d * power_scale)
                           : Q.trace().pow(d * power_scale);
      acc = mu > 0 ? acc + v : acc - v;
    }
    Scalar entry = acc.coerced(Ring::Q()).div_by_integer(m).demoted(Ring::Z());
    if (!entry.is_zero()) out.emplace(m, std::move(entry));
  }
  return NeckVec::sparse(Ring::Z(), std::move(out));
}

}  // namespace

NeckVec enr_full_cycle(const MASMatrix& Q, i64 n) {
  if (n < 1) raise(Errc::invalid_argument, "cycle length must be >= 1");
  const int c = valuation2(n);
  const i64 two_pow = i64(1) << c;
  return moebius_on_divisors(Q, n, two_pow, 1);
}

NeckVec enr_cycle_power(const MASMatrix& Q, i64 n, i64 r) {
  if (n < 1 || r < 1) raise(Errc::invalid_argument, "n, r must be >= 1");
  if (n % r != 0)
    raise(Errc::not_divisor, std::to_string(r) + " does not divide " +
                                 std::to_string(n));
  // The d-th ghost value is k^{rd} exactly when the cycle lengths n/(rd)
  // are odd, i.e. v2(d) = v2(n/r); matches F_r of the full-cycle vector.
  const i64 two_pow = i64(1) << valuation2(n / r);
  return moebius_on_divisors(Q, n / r, two_pow, r);
}

SigmaSeriesResult lam_series_sigma(const MASMatrix& Q, int n,
                                   const Permutation& sigma, i64 order) {
  if (sigma.n() != n)
    raise(Errc::invalid_argument, "permutation degree does not match n");
  // E_Nr turns the Lambda-product over disjoint cycles into a necklace
  // product of the sparse per-cycle exponent vectors, so the exponents are
  // exact at every index; the series is its expansion to the order.
  LambdaSeries acc = LambdaSeries::one(Ring::Z(), order);
  NeckVec exps = NeckVec::delta(Scalar(1), 1);
  bool first = true;
  for (int l : sigma.cycle_type()) {
    const NeckVec cycle = enr_full_cycle(Q, l);
    const LambdaSeries factor = lam_enr_inv(cycle, order);
    acc = first ? factor : lam_mul(acc, factor);
    exps = first ? cycle : nr_mul(exps, cycle);
    first = false;
  }
  return {std::move(acc), std::move(exps)};
}

RelationsReport relations_check(const MASMatrix& Q, int n) {
  RelationsReport report;
  auto record = [&](std::string name, bool ok) {
    report.checks.emplace_back(std::move(name), ok);
    report.all_ok = report.all_ok && ok;
  };

  const ExactMatrix p2 = p_matrix(Q, 2);
  const ExactMatrix id1 = ExactMatrix::identity(Q.ring(), Q.k());
  record("F.F = id", p2.mul(p2).equal(ExactMatrix::identity(Q.ring(), Q.k() * Q.k())));

  const ExactMatrix lhs = id1.kron(p2).mul(p2.kron(id1)).mul(id1.kron(p2));
  const ExactMatrix rhs = p2.kron(id1).mul(id1.kron(p2)).mul(p2.kron(id1));
  record("Yang-Baxter", lhs.equal(rhs));

  if (n >= 2) {
    std::vector<ExactMatrix> gen;
    gen.reserve(static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i) gen.push_back(generator_matrix(Q, n, i));
    const ExactMatrix idn =
        ExactMatrix::identity(Q.ring(), checked_power_dim(Q.k(), n));
    for (int i = 0; i < n - 1; ++i)
      record("s" + std::to_string(i + 1) + "^2 = 1",
             gen[static_cast<size_t>(i)].mul(gen[static_cast<size_t>(i)]).equal(idn));
    for (int i = 0; i + 1 < n - 1; ++i) {
      const ExactMatrix prod =
          gen[static_cast<size_t>(i)].mul(gen[static_cast<size_t>(i + 1)]);
      record("(s" + std::to_string(i + 1) + " s" + std::to_string(i + 2) + ")^3 = 1",
             prod.mul(prod).mul(prod).equal(idn));
    }
    for (int i = 0; i < n - 1; ++i)
      for (int j = i + 2; j < n - 1; ++j) {
        const ExactMatrix prod =
            gen[static_cast<size_t>(i)].mul(gen[static_cast<size_t>(j)]);
        record("(s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) + ")^2 = 1",
               prod.mul(prod).equal(idn));
      }
  }
  return report;
}

}  // namespace lambdanr
