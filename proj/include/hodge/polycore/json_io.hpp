#pragma once

#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/polycore/y_rational.hpp"

#include <json.hpp>

#include <string_view>

namespace hodge {

// {"var":"y","terms":[{"exp":e,"coef":"decimal-string"}]}
nlohmann::json genus_to_json(const GenusPolynomial& p, std::string_view var = "y");
GenusPolynomial genus_from_json(const nlohmann::json& j);

// {"vars":["u","v"],"terms":[{"u":k,"v":l,"coef":"decimal-string"}]}
nlohmann::json epoly_to_json(const EPolynomial& e);
EPolynomial epoly_from_json(const nlohmann::json& j);

// {"num":[coef strings, ascending in y],"den_pow":k}
nlohmann::json yrational_to_json(const YRational& r);

}  // namespace hodge
