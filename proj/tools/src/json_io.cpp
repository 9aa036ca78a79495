#include "plucker_cli/json_io.hpp"

#include <utility>
#include <vector>

namespace plucker::cli {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw DocumentError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw DocumentError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw DocumentError(std::string("field \"") + name + "\" must be an array");
  return v;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DocumentError("coefficients must be rational strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

Json to_json(const MultiIndex& alpha) { return alpha.entries(); }

MultiIndex index_from_json(const Json& j) {
  if (!j.is_array()) throw DocumentError("an index must be an array of integers");
  std::vector<int> entries;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DocumentError("an index must be an array of integers");
    entries.push_back(x.get<int>());
  }
  try {
    return MultiIndex(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

Json to_json(const ExtVector& v) {
  Json terms = Json::array();
  for (const auto& [alpha, q] : v.terms()) terms.push_back({{"coeff", to_json(q)}, {"index", to_json(alpha)}});
  return {{"k", v.k()}, {"n", v.n()}, {"terms", std::move(terms)}};
}

ExtVector ext_from_json(const Json& j) {
  const int n = int_field(j, "n"), k = int_field(j, "k");
  if (k < 1 || k > n) throw DocumentError("need 1 <= k <= n");
  ExtVector v(n, k);
  for (const auto& term : array_field(j, "terms")) {
    const MultiIndex alpha = index_from_json(field(term, "index"));
    if (static_cast<int>(alpha.size()) != k || alpha.entries().back() > n)
      throw DocumentError("index " + alpha.label() + " does not fit n and k");
    v.add(alpha, rational_from_json(field(term, "coeff")));
  }
  return v;
}

Json to_json(const SymTensor& u) {
  Json terms = Json::array();
  for (const auto& [v, q] : u.terms()) {
    Json indices = Json::array();
    for (const auto& alpha : v.components()) indices.push_back(to_json(alpha));
    terms.push_back({{"coeff", to_json(q)}, {"indices", std::move(indices)}});
  }
  return {{"k", u.k()}, {"m", u.m()}, {"n", u.n()}, {"terms", std::move(terms)}};
}

SymTensor sym_from_json(const Json& j) {
  const int m = int_field(j, "m"), n = int_field(j, "n"), k = int_field(j, "k");
  if (m < 1 || k < 1 || k > n) throw DocumentError("need m >= 1 and 1 <= k <= n");
  SymTensor u(m, n, k);
  for (const auto& term : array_field(j, "terms")) {
    std::vector<MultiIndex> components;
    for (const auto& x : array_field(term, "indices")) {
      MultiIndex alpha = index_from_json(x);
      if (static_cast<int>(alpha.size()) != k || alpha.entries().back() > n)
        throw DocumentError("index " + alpha.label() + " does not fit n and k");
      components.push_back(std::move(alpha));
    }
    if (static_cast<int>(components.size()) != m) throw DocumentError("every term needs exactly m indices");
    u.add(SymBasisVector(std::move(components)), rational_from_json(field(term, "coeff")));
  }
  return u;
}

Json to_json(const RectTableau& t) {
  Json out = Json::array();
  for (const auto& col : t.columns()) out.push_back(to_json(col));
  return out;
}

Json to_json(const TableauCombo& c) {
  Json out = Json::object();
  for (const auto& [t, q] : c.terms()) out[t.label()] = to_json(q);
  return out;
}

Json to_json(const PluckerRelation& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"first", to_json(t.first)}, {"second", to_json(t.second)}});
  return {{"lower", r.lower}, {"relation", r.to_string()}, {"terms", std::move(terms)}, {"upper", r.upper}};
}

Json to_json(const LinearRelation& r) {
  Json terms = Json::array();
  for (const auto& [v, q] : r.coefficients) {
    Json indices = Json::array();
    for (const auto& alpha : v.components()) indices.push_back(to_json(alpha));
    terms.push_back({{"coeff", to_json(q)}, {"indices", std::move(indices)}});
  }
  return {{"relation", r.to_string()}, {"terms", std::move(terms)}};
}

Json to_json(const Violation& v) {
  Json indices = Json::array();
  for (const auto& alpha : v.indices) indices.push_back(to_json(alpha));
  return {{"indices", std::move(indices)},
          {"kind", to_string(v.kind)},
          {"relation", v.description},
          {"residual", to_json(v.residual)}};
}

Json to_json(const RelationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"pass", r.pass}, {"violation_count", r.violation_count}, {"violations", std::move(violations)}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(e.what());
  }
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace plucker::cli
