#pragma once

#include "hodge/dsl/ast.hpp"
#include "hodge/dsl/lexer.hpp"

#include <string_view>
#include <vector>

namespace hodge::dsl {

struct ParseResult {
  Script script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Parses a whole script. Besides syntax, checks that every referenced name
/// is bound earlier in the file, that no name is bound twice, and that
/// references have the expected kind.
ParseResult parse(std::string_view source);

/// Parses a polynomial in y such as "1 - 2*y + y^2" or "(1 - y)^2 + 3*y^-1".
GenusPolynomial parse_y_polynomial(std::string_view text);

}  // namespace hodge::dsl
