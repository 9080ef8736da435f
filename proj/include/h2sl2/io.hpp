#pragma once

#include "h2sl2/structure.hpp"

// Single include point for the JSON layer; keeps the vendored header out of
// the core translation units. The vendor directory is on the include path.
#include "json.hpp"

#include <algorithm>

namespace h2sl2 {

using nlohmann::json;

// Matrix: [["num/den","num/den"],["num/den","num/den"]], bit-exact.
inline json to_json(const Mat2& m) {
  return json::array({json::array({rat_to_string(m.a), rat_to_string(m.b)}),
                      json::array({rat_to_string(m.c), rat_to_string(m.d)})});
}

inline Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("matrix JSON must be a 2x2 array of strings");
  return Mat2(rat_from_string(j[0][0].get<std::string>()),
              rat_from_string(j[0][1].get<std::string>()),
              rat_from_string(j[1][0].get<std::string>()),
              rat_from_string(j[1][1].get<std::string>()));
}

// Chain: {"degree": n, "terms": [{"coeff": int, "tuple": [Mat2,...]}]},
// terms ordered lexicographically on the serialized tuple.
inline json to_json(const MatChain& z) {
  std::vector<std::pair<std::string, json>> rows;
  for (const auto& [t, c] : z.terms) {
    json tuple = json::array();
    for (const Mat2& g : t) tuple.push_back(to_json(g));
    json term = {{"coeff", c}, {"tuple", tuple}};
    rows.emplace_back(tuple.dump(), std::move(term));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json terms = json::array();
  for (auto& [key, term] : rows) terms.push_back(std::move(term));
  return {{"degree", z.degree}, {"terms", terms}};
}

inline MatChain chain_from_json(const json& j) {
  MatChain z(j.at("degree").get<int>());
  for (const json& term : j.at("terms")) {
    std::vector<Mat2> tuple;
    for (const json& g : term.at("tuple")) tuple.push_back(mat2_from_json(g));
    z.add_term(tuple, term.at("coeff").get<long long>());
  }
  return z;
}

// Invariant: {"sigma": int, "tame": {"p": "value", ...}}.
inline json to_json(const SymbolInvariant& inv) {
  json tame = json::object();
  for (const auto& [p, v] : inv.tame) tame[p.get_str()] = v.get_str();
  return {{"sigma", inv.sigma.get_si()}, {"tame", tame}};
}

inline json to_json(const GeneratorCertificate& cert, bool certified) {
  json tame = json::object();
  for (const auto& [p, v] : cert.tame_values) tame[p.get_str()] = v.get_str();
  return {{"name", cert.name},
          {"symbol", json::array({rat_to_string(cert.symbol_a),
                                  rat_to_string(cert.symbol_b)})},
          {"lambda", rat_to_string(cert.lambda)},
          {"cycle", to_json(cert.cycle)},
          {"sigma", cert.sigma.get_si()},
          {"tame", tame},
          {"order", cert.certified_order
                        ? json(cert.certified_order->get_str())
                        : json("inf")},
          {"certified", certified}};
}

inline json to_json(const StructureDescriptor& d) {
  json factors = json::array();
  for (const auto& f : d.factors)
    factors.push_back(
        {{"label", f.label},
         {"order", f.order ? json(f.order->get_str()) : json("inf")}});
  return {{"m", d.m.get_str()}, {"factors", factors}};
}

}  // namespace h2sl2
