// Command-line driver: exterior-power tables, necklace factorizations,
// braided symmetric-group computations, property-suite verification and a
// multiplication-strategy benchmark. Inputs are inline JSON or @file paths;
// outputs are deterministic for a fixed seed (bench timings excepted).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <lambdanr/characters.hpp>
#include <lambdanr/json_io.hpp>
#include <lambdanr/lambda_series.hpp>
#include <lambdanr/necklace.hpp>
#include <lambdanr/symrep.hpp>
#include <lambdanr/verify.hpp>

namespace {

using namespace lambdanr;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitRing = 3;
constexpr int kExitNotIntegerValued = 4;
constexpr int kExitNotMas = 5;
constexpr int kExitSizeCap = 6;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::length_mismatch:
    case Errc::invalid_argument:
    case Errc::not_divisor:
      return kExitParse;
    case Errc::ring_mismatch:
    case Errc::q_algebra_required:
    case Errc::non_divisible:
    case Errc::integrality_violation:
    case Errc::horizon_exceeded:
    case Errc::not_t_shaped:
    case Errc::unknown_support:
    case Errc::certificate_violation:
    case Errc::internal_disagreement:
      return kExitRing;
    case Errc::not_integer_valued:
      return kExitNotIntegerValued;
    case Errc::not_mas:
      return kExitNotMas;
    case Errc::size_limit:
      return kExitSizeCap;
  }
  return kExitParse;
}

struct Output {
  std::string path;  // empty = stdout
  std::ostringstream buf;
  int flush() {
    if (path.empty()) {
      std::cout << buf.str();
      return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitParse;
    }
    out << buf.str();
    return kExitOk;
  }
};

std::string sparse_text(const NeckVec& x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [n, v] : x.entries()) {
    if (!first) os << ",";
    first = false;
    os << n << ":" << v.text();
  }
  os << "}";
  return os.str();
}

std::string truncated_text(const NeckVec& x) {
  std::ostringstream os;
  os << "[";
  for (i64 n = 1; n <= x.horizon(); ++n) {
    if (n > 1) os << ",";
    os << x.at(n).text();
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------------- exterior --

int cmd_exterior(const std::string& group_arg, const std::string& char_arg,
                 i64 max_i, bool as_json, Output& out) {
  GroupPtr g = group_from_json(load_json_argument(group_arg));
  const ClassFunction chi = character_from_json(load_json_argument(char_arg), g);
  const auto powers = cf_lambda_powers(chi, max_i);

  if (as_json) {
    json rows = json::array();
    for (size_t i = 0; i < powers.size(); ++i)
      rows.push_back(json{{"i", i}, {"character", character_to_json(powers[i])}});
    json labels = json::array();
    for (int c = 0; c < g->class_count(); ++c) labels.push_back(g->cls(c).label);
    out.buf << json{{"group", group_to_json(g->spec())},
                    {"classes", labels},
                    {"rows", rows}}
                   .dump()
            << "\n";
    return kExitOk;
  }
  out.buf << "classes:";
  for (int c = 0; c < g->class_count(); ++c) out.buf << " " << g->cls(c).label;
  out.buf << "\n";
  for (size_t i = 0; i < powers.size(); ++i) {
    out.buf << "lambda^" << i << ":";
    for (const auto& v : powers[i].values()) out.buf << " " << v.text();
    out.buf << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- factor --

int cmd_factor(const std::string& group_arg, const std::string& char_arg,
               int class_idx, i64 order, bool strict, bool as_json,
               Output& out) {
  GroupPtr g = group_from_json(load_json_argument(group_arg));
  const ClassFunction chi = character_from_json(load_json_argument(char_arg), g);

  std::vector<int> classes;
  if (class_idx >= 0) {
    if (class_idx >= g->class_count())
      raise(Errc::parse_error, "class index out of range");
    classes.push_back(class_idx);
  } else {
    for (int c = 0; c < g->class_count(); ++c) classes.push_back(c);
  }

  json jclasses = json::array();
  bool any_non_integer = false;
  for (int c : classes) {
    const auto res = cf_necklace_at(chi, c, order);
    if (!res.integer_valued) any_non_integer = true;
    if (as_json) {
      json entry{{"class", g->cls(c).label},
                 {"integer_valued", res.integer_valued},
                 {"necklace", neck_to_json(res.vec)}};
      if (res.integer_valued) entry["product"] = product_form_text(res.vec);
      jclasses.push_back(std::move(entry));
    } else {
      out.buf << "class " << g->cls(c).label << ": ";
      if (res.integer_valued)
        out.buf << product_form_text(res.vec) << "\n";
      else
        out.buf << "NotIntegerValued; truncated=" << truncated_text(res.vec)
                << "\n";
    }
  }
  if (as_json) out.buf << json{{"classes", jclasses}}.dump() << "\n";
  if (strict && any_non_integer) {
    out.flush();
    std::cerr << "error: character is not integer-valued (strict mode)\n";
    return kExitNotIntegerValued;
  }
  return kExitOk;
}

// --------------------------------------------------------------- symrep --

int cmd_symrep(const std::string& matrix_arg, const std::string& sigma_text,
               int n_flag, i64 order, bool oracle, bool as_json, Output& out) {
  const MASMatrix Q = mas_from_json(load_json_argument(matrix_arg));
  const Permutation sigma = parse_permutation(sigma_text, n_flag);
  const int n = sigma.n();

  const Scalar chi = chi_closed(Q, sigma.cycle_type());
  const auto res = lam_series_sigma(Q, n, sigma, order);

  std::string oracle_line;
  if (oracle) {
    const ExactMatrix rho = rep_matrix(Q, n, sigma);  // size_limit above cap
    const LambdaSeries det = det_series(rho, order);
    const bool match =
        lam_agree_upto(res.series.coerced(det.ring()), det,
                       std::min(res.series.order(), det.order())) &&
        rho.trace() == chi.coerced(det.ring());
    oracle_line = match ? "MATCH" : "MISMATCH";
    if (!match) {
      out.buf << "oracle=MISMATCH\n";
      out.flush();
      return kExitPropertyFailure;
    }
  }

  const NeckVec& exact = res.exponents;  // sparse, exact at every index

  if (as_json) {
    json j{{"n", n},
           {"sigma_cycle_type", sigma.cycle_type()},
           {"chi", scalar_to_json(chi)},
           {"necklace", neck_to_json(exact)},
           {"lambda", product_form_text(exact)},
           {"series", series_text(res.series)}};
    if (oracle) j["oracle"] = oracle_line;
    out.buf << j.dump() << "\n";
  } else {
    out.buf << "chi=" << chi.text() << "; necklace=" << sparse_text(exact)
            << "; lambda=" << product_form_text(exact) << "\n";
    if (oracle) out.buf << "oracle=" << oracle_line << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases,
               bool as_json, Output& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify_suite_names();
  else
    names.push_back(suite);

  bool all_ok = true;
  json jsuites = json::array();
  for (const auto& name : names) {
    const SuiteResult res = run_verify_suite(name, seed, cases);
    all_ok = all_ok && res.passed();
    if (as_json) {
      jsuites.push_back(json{{"suite", res.name},
                             {"checks", res.checks},
                             {"failures", res.failures},
                             {"failure_lines", res.failure_lines}});
    } else {
      out.buf << "suite=" << res.name << " checks=" << res.checks
              << " failures=" << res.failures << " "
              << (res.passed() ? "PASS" : "FAIL") << "\n";
      for (const auto& line : res.failure_lines)
        out.buf << "  failed: " << line << "\n";
    }
  }
  if (as_json)
    out.buf << json{{"suites", jsuites}, {"passed", all_ok}}.dump() << "\n";
  out.flush();
  return all_ok ? kExitOk : kExitPropertyFailure;
}

// ---------------------------------------------------------------- bench --

int cmd_bench(const std::string& impl, i64 size, std::uint64_t seed,
              Output& out) {
  if (size > 100000) {
    std::cerr << "error: size exceeds the 1e5 cap\n";
    return kExitSizeCap;
  }
  if (impl != "direct" && impl != "ghost" && impl != "both")
    raise(Errc::parse_error, "unknown --impl: " + impl);

  Rng rng(seed);
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

  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    NeckVec result = fn();
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return std::make_pair(std::move(result), ms);
  };

  std::optional<NeckVec> direct, ghost;
  if (impl == "direct" || impl == "both") {
    auto [res, ms] = timed([&] { return nr_mul(x, y); });
    direct = std::move(res);
    out.buf << "direct_ms=" << ms << "\n";
  }
  if (impl == "ghost" || impl == "both") {
    auto [res, ms] = timed([&] { return nr_mul_ghost_route(x, y); });
    ghost = std::move(res);
    out.buf << "ghost_ms=" << ms << "\n";
  }
  if (direct && ghost) {
    // Sampled prefix plus a deterministic spread of interior entries.
    bool agree = true;
    for (i64 n = 1; n <= std::min<i64>(size, 64); ++n)
      agree = agree && direct->at(n) == ghost->at(n);
    for (int i = 0; i < 64; ++i) {
      const i64 n = rng.uniform(1, size);
      agree = agree && direct->at(n) == ghost->at(n);
    }
    out.buf << (agree ? "AGREE" : "DISAGREE") << "\n";
    if (!agree) {
      out.flush();
      return kExitPropertyFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exterior-power characters through necklace-ring arithmetic"};
  app.require_subcommand(1);

  std::string group_arg, char_arg, matrix_arg, sigma_arg, suite, impl = "both";
  std::string out_path;
  int class_idx = -1, n_flag = 0, cases = 200;
  i64 max_i = 3, order = 16, size = 2000;
  std::uint64_t seed = 0;
  bool strict = false, as_json = false, oracle = false;

  auto* exterior = app.add_subcommand("exterior", "Exterior-power table");
  exterior->add_option("--group", group_arg, "Group JSON or @file")->required();
  exterior->add_option("--char", char_arg, "Character JSON or @file")->required();
  exterior->add_option("--max", max_i, "Largest exterior power");
  exterior->add_option("--out", out_path, "Output path");
  exterior->add_flag("--json", as_json, "JSON output");

  auto* factor = app.add_subcommand("factor", "Necklace product form");
  factor->add_option("--group", group_arg, "Group JSON or @file")->required();
  factor->add_option("--char", char_arg, "Character JSON or @file")->required();
  factor->add_option("--class", class_idx, "Restrict to one class index");
  factor->add_option("--order", order, "Horizon for non-integer-valued output");
  factor->add_flag("--strict", strict, "Exit 4 when not integer-valued");
  factor->add_option("--out", out_path, "Output path");
  factor->add_flag("--json", as_json, "JSON output");

  auto* symrep = app.add_subcommand("symrep", "Braided S_n representation");
  symrep->add_option("--matrix", matrix_arg, "MAS matrix JSON or @file")->required();
  symrep->add_option("--sigma", sigma_arg, "Permutation in cycle text")->required();
  symrep->add_option("--n", n_flag, "Degree (default: largest point in sigma)");
  symrep->add_option("--order", order, "Series order");
  symrep->add_flag("--oracle", oracle, "Cross-check against the matrix path");
  symrep->add_option("--out", out_path, "Output path");
  symrep->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "ring|vft|enr|thm322|intval|symrep|all")
      ->required();
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--cases", cases, "Case count");
  verify->add_option("--out", out_path, "Output path");
  verify->add_flag("--json", as_json, "JSON output");

  auto* bench = app.add_subcommand("bench", "Multiplication strategy timings");
  bench->add_option("--impl", impl, "direct|ghost|both");
  bench->add_option("--size", size, "Truncated vector length (<= 1e5)");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--out", out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help path
    app.exit(e);
    return kExitParse;
  }

  if (order < 1 || cases < 1 || max_i < 0) {
    std::cerr << "error: order and cases must be >= 1\n";
    return kExitParse;
  }

  Output out;
  out.path = out_path;
  try {
    int rc = kExitOk;
    if (exterior->parsed())
      rc = cmd_exterior(group_arg, char_arg, max_i, as_json, out);
    else if (factor->parsed())
      rc = cmd_factor(group_arg, char_arg, class_idx, order, strict, as_json, out);
    else if (symrep->parsed())
      rc = cmd_symrep(matrix_arg, sigma_arg, n_flag, order, oracle, as_json, out);
    else if (verify->parsed())
      return cmd_verify(suite, seed, cases, as_json, out);
    else if (bench->parsed())
      rc = cmd_bench(impl, size, seed, out);
    if (rc != kExitOk) return rc;
    return out.flush();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
