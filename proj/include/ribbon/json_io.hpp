#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ribbon/map.hpp"
#include "ribbon/mon.hpp"
#include "ribbon/oriented.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/rational.hpp"

namespace ribbon::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}}; }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  auto part = [&](const char* key) {
    const json& v = j.at(key);
    return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
  };
  return Rational(part("num"), part("den"));
}

inline json pairs_json(const Pairing& p) {
  json out = json::array();
  for (auto [a, b] : p.pairs()) out.push_back({a, b});
  return out;
}

inline Pairing pairing_from_json(const json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : j) {
    if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("pairing: each entry must be [a, b]");
    pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
  }
  return Pairing(pairs);
}

inline json to_json(const NonOrientedMap& m) {
  json j;
  j["labels"] = m.labels();
  j["B"] = pairs_json(m.beta());
  j["W"] = pairs_json(m.omega());
  j["E"] = pairs_json(m.eps());
  if (m.root()) j["root"] = *m.root();
  return j;
}

inline NonOrientedMap map_from_json(const json& j) {
  std::optional<int> root;
  if (j.contains("root") && !j.at("root").is_null()) root = j.at("root").get<int>();
  NonOrientedMap m(pairing_from_json(j.at("B")), pairing_from_json(j.at("W")), pairing_from_json(j.at("E")), root);
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<int>>();
    std::sort(labels.begin(), labels.end());
    if (labels != m.labels()) throw std::invalid_argument("map: \"labels\" does not match the pairings");
  }
  return m;
}

inline json to_json(const Permutation& p) {
  json out = json::array();
  for (const auto& c : p.cycles()) out.push_back(c);
  return out;
}

inline json to_json(const OrientedMap& m) {
  json j;
  j["n"] = m.n();
  j["sigma1"] = to_json(m.sigma1);
  j["sigma2"] = to_json(m.sigma2);
  if (m.root) j["root"] = *m.root;
  return j;
}

inline OrientedMap oriented_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  auto perm = [&](const char* key) {
    return Permutation::from_cycles(n, j.at(key).get<std::vector<std::vector<int>>>());
  };
  std::optional<int> root;
  if (j.contains("root") && !j.at("root").is_null()) root = j.at("root").get<int>();
  return OrientedMap(perm("sigma1"), perm("sigma2"), root);
}

inline json to_json(const History& h) {
  json out = json::array();
  for (const Edge& e : h) out.push_back({e.a, e.b});
  return out;
}

inline History history_from_json(const json& j) {
  History h;
  for (const auto& pr : j) h.emplace_back(pr[0].get<int>(), pr[1].get<int>());
  return h;
}

inline json to_json(const GammaPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

inline json to_json(const StanleyPolynomial& p) {
  json terms = json::array();
  for (const auto& [exp, c] : p.terms()) {
    json e = json::object();
    for (size_t v = 0; v < exp.size(); ++v)
      if (exp[v] != 0) e[StanleyPolynomial::variable_name(v)] = exp[v];
    terms.push_back({{"exp", e}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
  }
  return {{"terms", terms}};
}

inline StanleyPolynomial stanley_from_json(const json& j) {
  StanleyPolynomial p;
  for (const auto& t : j.at("terms")) {
    StanleyPolynomial::Exponent e;
    for (const auto& [name, power] : t.at("exp").items()) {
      const size_t v = StanleyPolynomial::variable_index(name);
      if (e.size() <= v) e.resize(v + 1, 0);
      e[v] = power.get<int>();
    }
    p.add_term(e, rational_from_json(t));
  }
  return p;
}

/// {"mon": [coefficients], "mon_top": {num, den}}
inline json mon_json(const NonOrientedMap& m, MonCalculator& calc) {
  return {{"mon", to_json(calc.mon(m))}, {"mon_top", to_json(mon_top(m, calc))}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

}  // namespace ribbon::io
