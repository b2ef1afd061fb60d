#include "hodge/polycore/json_io.hpp"

#include "hodge/error.hpp"

namespace hodge {

using nlohmann::json;

json genus_to_json(const GenusPolynomial& p, std::string_view var) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c.get_str()}});
  return {{"var", std::string(var)}, {"terms", terms}};
}

GenusPolynomial genus_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ValidationError("polynomial JSON must be an object with a 'terms' array");
  }
  GenusPolynomial out;
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp") || !t.contains("coef") || !t["coef"].is_string()) {
      throw ValidationError("polynomial term needs 'exp' and a string 'coef'");
    }
    out += GenusPolynomial::monomial(parse_integer(t["coef"].get<std::string>()), t["exp"].get<int>());
  }
  return out;
}

json epoly_to_json(const EPolynomial& e) {
  json terms = json::array();
  for (const auto& [exp, c] : e.terms()) {
    terms.push_back({{"u", exp.first}, {"v", exp.second}, {"coef", c.get_str()}});
  }
  return {{"vars", {"u", "v"}}, {"terms", terms}};
}

EPolynomial epoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ValidationError("E-polynomial JSON must be an object with a 'terms' array");
  }
  EPolynomial out;
  for (const auto& t : j["terms"]) {
    out += EPolynomial::monomial(parse_integer(t.at("coef").get<std::string>()), t.at("u").get<int>(),
                                 t.at("v").get<int>());
  }
  return out;
}

json yrational_to_json(const YRational& r) {
  json num = json::array();
  for (const auto& c : r.numerator().coefficients()) num.push_back(c.get_str());
  return {{"num", num}, {"den_pow", r.denominator_power()}};
}

}  // namespace hodge
