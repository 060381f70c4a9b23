#include "lambdanr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lambdanr {

namespace {

mpq_class parse_rational_text(const std::string& text) {
  if (text.empty()) raise(Errc::parse_error, "empty scalar text");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/'))
      raise(Errc::parse_error, "bad scalar text: " + text);
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    raise(Errc::parse_error, "bad scalar text: " + text);
  if (q.get_den() == 0) raise(Errc::parse_error, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

Scalar scalar_from_rational(const mpq_class& q) {
  if (q.get_den() == 1) return Scalar(mpz_class(q.get_num()));
  return Scalar::rational(q);
}

}  // namespace

Scalar scalar_from_text(const std::string& text) {
  return scalar_from_rational(parse_rational_text(text));
}

json scalar_to_json(const Scalar& s) {
  switch (s.ring().tag) {
    case Ring::Tag::integers:
    case Ring::Tag::rationals:
      return s.text();
    case Ring::Tag::cyclotomic: {
      json coords = json::array();
      for (const auto& q : s.cyclotomic_coords()) {
        if (q.get_den() == 1)
          coords.push_back(q.get_num().get_str());
        else
          coords.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
      }
      return json{{"m", s.cyclotomic_order()}, {"coords", coords}};
    }
  }
  raise(Errc::internal_disagreement, "unreachable");
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer())
    return Scalar(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return scalar_from_text(j.get<std::string>());
  if (j.is_object()) {
    if (!j.contains("m") || !j.contains("coords"))
      raise(Errc::parse_error, "cyclotomic scalar needs m and coords");
    const i64 m = j.at("m").get<i64>();
    if (m < 1) raise(Errc::parse_error, "cyclotomic order must be >= 1");
    std::vector<mpq_class> coords;
    for (const auto& c : j.at("coords")) {
      if (c.is_number_integer())
        coords.emplace_back(mpz_class(std::to_string(c.get<long long>())));
      else if (c.is_string())
        coords.push_back(parse_rational_text(c.get<std::string>()));
      else
        raise(Errc::parse_error, "cyclotomic coordinate must be a string");
    }
    if (static_cast<i64>(coords.size()) != euler_phi(m))
      raise(Errc::parse_error, "cyclotomic coords length must be phi(m)");
    return Scalar::cyclotomic(m, std::move(coords));
  }
  raise(Errc::parse_error, "unrecognized scalar JSON");
}

json ring_to_json(const Ring& r) {
  switch (r.tag) {
    case Ring::Tag::integers: return "Z";
    case Ring::Tag::rationals: return "Q";
    case Ring::Tag::cyclotomic: return json{{"cyclotomic", r.order}};
  }
  raise(Errc::internal_disagreement, "unreachable");
}

Ring ring_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Z") return Ring::Z();
    if (s == "Q") return Ring::Q();
    raise(Errc::parse_error, "unknown ring: " + s);
  }
  if (j.is_object() && j.contains("cyclotomic"))
    return Ring::Qzeta(j.at("cyclotomic").get<i64>());
  raise(Errc::parse_error, "unrecognized ring JSON");
}

json ghost_to_json(const GhostVec& a) {
  json values = json::array();
  for (const auto& v : a.values()) values.push_back(scalar_to_json(v));
  if (a.is_periodic())
    return json{{"repr", "periodic"}, {"period", a.period()}, {"values", values}};
  return json{{"repr", "truncated"}, {"horizon", a.horizon()}, {"values", values}};
}

namespace {

Ring ring_of_values(const std::vector<Scalar>& vals) {
  Ring r = Ring::Z();
  for (const auto& v : vals) r = ring_join(r, v.ring());
  return r;
}

std::vector<Scalar> values_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::parse_error, "values must be an array");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

}  // namespace

GhostVec ghost_from_json(const json& j) {
  if (!j.is_object() || !j.contains("repr"))
    raise(Errc::parse_error, "ghost vector needs a repr field");
  const auto repr = j.at("repr").get<std::string>();
  auto vals = values_from_json(j.at("values"));
  const Ring ring = ring_of_values(vals);
  if (repr == "periodic") {
    if (j.at("period").get<i64>() != static_cast<i64>(vals.size()))
      raise(Errc::parse_error, "period does not match the value count");
    return GhostVec::periodic(ring, std::move(vals));
  }
  if (repr == "truncated") {
    if (j.at("horizon").get<i64>() != static_cast<i64>(vals.size()) ||
        vals.empty())
      raise(Errc::parse_error, "horizon does not match the value count");
    return GhostVec::truncated(ring, std::move(vals));
  }
  raise(Errc::parse_error, "unknown ghost repr: " + repr);
}

json neck_to_json(const NeckVec& x) {
  if (x.is_sparse()) {
    json entries = json::object();
    for (const auto& [n, v] : x.entries())
      entries[std::to_string(n)] = scalar_to_json(v);
    return json{{"repr", "sparse"}, {"entries", entries}};
  }
  json values = json::array();
  for (const auto& v : x.values()) values.push_back(scalar_to_json(v));
  return json{{"repr", "truncated"}, {"horizon", x.horizon()}, {"values", values}};
}

NeckVec neck_from_json(const json& j) {
  if (!j.is_object() || !j.contains("repr"))
    raise(Errc::parse_error, "necklace vector needs a repr field");
  const auto repr = j.at("repr").get<std::string>();
  if (repr == "sparse") {
    std::map<i64, Scalar> entries;
    Ring ring = Ring::Z();
    for (const auto& [key, value] : j.at("entries").items()) {
      i64 n = 0;
      try {
        n = std::stoll(key);
      } catch (const std::exception&) {
        raise(Errc::parse_error, "bad sparse index: " + key);
      }
      if (n < 1) raise(Errc::parse_error, "sparse index must be >= 1");
      Scalar s = scalar_from_json(value);
      ring = ring_join(ring, s.ring());
      entries.emplace(n, std::move(s));
    }
    return NeckVec::sparse(ring, std::move(entries));
  }
  if (repr == "truncated") {
    auto vals = values_from_json(j.at("values"));
    if (j.at("horizon").get<i64>() != static_cast<i64>(vals.size()) ||
        vals.empty())
      raise(Errc::parse_error, "horizon does not match the value count");
    const Ring ring = ring_of_values(vals);
    return NeckVec::truncated(ring, std::move(vals));
  }
  raise(Errc::parse_error, "unknown necklace repr: " + repr);
}

json group_to_json(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return json{{"kind", "cyclic"}, {"n", spec.n}};
    case GroupSpec::Kind::symmetric:
      return json{{"kind", "symmetric"}, {"n", spec.n}};
    case GroupSpec::Kind::product: {
      json factors = json::array();
      for (const auto& f : spec.factors) factors.push_back(group_to_json(f));
      return json{{"kind", "product"}, {"factors", factors}};
    }
  }
  raise(Errc::internal_disagreement, "unreachable");
}

GroupPtr group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    raise(Errc::parse_error, "group needs a kind field");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return cyclic_group(j.at("n").get<int>());
  if (kind == "symmetric") return symmetric_group(j.at("n").get<int>());
  if (kind == "product") {
    const auto& factors = j.at("factors");
    if (!factors.is_array() || factors.size() < 2)
      raise(Errc::parse_error, "product group needs at least two factors");
    GroupPtr acc = group_from_json(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
      acc = product_group(acc, group_from_json(factors[i]));
    return acc;
  }
  raise(Errc::parse_error, "unknown group kind: " + kind);
}

json character_to_json(const ClassFunction& chi) {
  json values = json::array();
  for (const auto& v : chi.values()) values.push_back(scalar_to_json(v));
  return json{{"ring", ring_to_json(chi.ring())}, {"values", values}};
}

ClassFunction character_from_json(const json& j, GroupPtr group) {
  if (!j.is_object() || !j.contains("values"))
    raise(Errc::parse_error, "character needs a values field");
  auto vals = values_from_json(j.at("values"));
  Ring ring = j.contains("ring") ? ring_from_json(j.at("ring"))
                                 : ring_of_values(vals);
  ring = ring_join(ring, ring_of_values(vals));
  if (static_cast<int>(vals.size()) != group->class_count())
    raise(Errc::length_mismatch,
          "character has " + std::to_string(vals.size()) + " values for " +
              std::to_string(group->class_count()) + " classes");
  return cf_from_values(std::move(group), ring, std::move(vals));
}

json mas_to_json(const MASMatrix& m) {
  json rows = json::array();
  for (i64 i = 0; i < m.k(); ++i) {
    json row = json::array();
    for (i64 j = 0; j < m.k(); ++j) row.push_back(scalar_to_json(m.entry(i, j)));
    rows.push_back(row);
  }
  return json{{"k", m.k()}, {"entries", rows}};
}

MASMatrix mas_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("entries"))
    raise(Errc::parse_error, "MAS matrix needs k and entries");
  const i64 k = j.at("k").get<i64>();
  std::vector<std::vector<Scalar>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<Scalar> r;
    for (const auto& v : row) {
      Scalar s = scalar_from_json(v);
      r.push_back(s.coerced(ring_join(s.ring(), Ring::Q())));
    }
    entries.push_back(std::move(r));
  }
  return MASMatrix::validate(k, std::move(entries));
}

json load_json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) raise(Errc::parse_error, "cannot open file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse_error, "malformed JSON input");
  return j;
}

}  // namespace lambdanr
