#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hodge::dsl {

struct Loc {
  int line = 1;
  int col = 1;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  Loc loc;
  std::string code;
  std::string message;
};

std::string to_string(const Diagnostic& d);

enum class Tok {
  ident,
  integer,
  string,
  newline,
  lbrace,
  rbrace,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  semicolon,
  colon,
  assign,
  eq,
  neq,
  plus,
  minus,
  star,
  caret,
  slash,
  underscore,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Loc loc;
};

std::string describe(Tok kind);

/// Splits source text into tokens. Newlines are significant at the top
/// level and ignored inside any bracket pair. The few hyphenated keywords
/// (trivial-monodromy, paper-examples, ...) lex as single identifiers; any
/// other hyphen is a minus sign. On error the diagnostics vector is
/// non-empty and the token list is unusable.
std::vector<Token> lex(std::string_view source, std::vector<Diagnostic>& diagnostics);

}  // namespace hodge::dsl
