#pragma once

// Seeded, deterministic property suites driven by the CLI `verify`
// subcommand and reused by the test binaries: ring (ring axioms + ghost
// transport + finite-support certificates), vft (the operator identity
// calculus), enr (product-basis coherence), thm322 (the factorized
// truncated product against direct convolution), intval (integer-valued
// character detectors), symrep (closed forms against matrix oracles).

#include <random>
#include <string>
#include <vector>

#include "lambdanr/characters.hpp"
#include "lambdanr/ghost.hpp"
#include "lambdanr/lambda_series.hpp"
#include "lambdanr/necklace.hpp"
#include "lambdanr/symrep.hpp"

namespace lambdanr {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  i64 uniform(i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(eng_);
  }
  // Nonzero integer in [-bound, bound].
  i64 nonzero(i64 bound) {
    for (;;) {
      const i64 v = uniform(-bound, bound);
      if (v != 0) return v;
    }
  }

private:
  std::mt19937_64 eng_;
};

// Sparse vector over Z with support in [1, max_index] and coefficients in
// [-coeff_bound, coeff_bound] \ {0}.
NeckVec random_sparse_z(Rng& rng, i64 max_index = 12, int max_support = 4,
                        i64 coeff_bound = 9);
NeckVec random_sparse_q(Rng& rng, i64 max_index = 12, int max_support = 4,
                        i64 coeff_bound = 9);
GhostVec random_periodic_z(Rng& rng, i64 max_period = 6, i64 coeff_bound = 9);
GhostVec random_periodic_q(Rng& rng, i64 max_period = 6, i64 coeff_bound = 9);
LambdaSeries random_integer_series(Rng& rng, i64 order, i64 coeff_bound = 4);
MASMatrix random_mas(Rng& rng, i64 k);

// Semantic ghost comparison: windows of lcm(periods) for periodic pairs,
// common horizon otherwise.
bool gh_same(const GhostVec& a, const GhostVec& b);

// Sign character of S_n as a class function.
ClassFunction sign_character_sn(int n);
// Linear character of Z/n with values zeta_n^{jk}.
ClassFunction cyclic_linear_character(int n, int k);

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> failure_lines;
  bool passed() const { return failures == 0; }
};

const std::vector<std::string>& verify_suite_names();
// Unknown names raise parse_error.
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed,
                             int cases);

}  // namespace lambdanr
