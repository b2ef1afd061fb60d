#include "hodge/dsl/lexer.hpp"

#include <cctype>

namespace hodge::dsl {

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.loc.line) + ":" + std::to_string(d.loc.col) + ": " +
         (d.severity == Diagnostic::Severity::error ? "error" : "warning") + " [" + d.code + "] " + d.message;
}

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::string: return "string";
    case Tok::newline: return "end of line";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::colon: return "':'";
    case Tok::assign: return "'='";
    case Tok::eq: return "'=='";
    case Tok::neq: return "'!='";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::slash: return "'/'";
    case Tok::underscore: return "'_'";
    case Tok::end: return "end of input";
  }
  return "token";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_hyphenated_keyword(std::string_view w) {
  for (std::string_view k : {"trivial-monodromy", "paper-examples", "cross-checks", "by-filtration", "by-type"}) {
    if (w == k) return true;
  }
  return false;
}

struct Open {
  char ch;
  Loc loc;
};

}  // namespace

std::vector<Token> lex(std::string_view src, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  std::vector<Open> stack;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](Tok kind, std::string text, Loc loc) { out.push_back({kind, std::move(text), loc}); };
  auto error = [&](Loc loc, std::string code, std::string msg) {
    diags.push_back({Diagnostic::Severity::error, loc, std::move(code), std::move(msg)});
  };

  while (i < src.size()) {
    const char c = src[i];
    const Loc here{line, col};
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (c == '\n') {
      if (stack.empty() && (out.empty() || out.back().kind != Tok::newline)) push(Tok::newline, "\\n", here);
      advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '_' && (i + 1 >= src.size() || !ident_char(src[i + 1]))) {
      push(Tok::underscore, "_", here);
      advance();
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      while (j + 1 < src.size() && src[j] == '-' && std::isalpha(static_cast<unsigned char>(src[j + 1]))) {
        std::size_t k = j + 1;
        while (k < src.size() && ident_char(src[k])) ++k;
        if (!is_hyphenated_keyword(src.substr(i, k - i))) break;
        j = k;
      }
      push(Tok::ident, std::string(src.substr(i, j - i)), here);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::integer, std::string(src.substr(i, j - i)), here);
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') {
        error(here, "E-lex-string", "unterminated string literal");
        return out;
      }
      push(Tok::string, std::string(src.substr(i + 1, j - i - 1)), here);
      advance(j - i + 1);
      continue;
    }
    if ((c == '=' || c == '!') && i + 1 < src.size() && src[i + 1] == '=') {
      push(c == '=' ? Tok::eq : Tok::neq, c == '=' ? "==" : "!=", here);
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      case ';': kind = Tok::semicolon; break;
      case ':': kind = Tok::colon; break;
      case '=': kind = Tok::assign; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      default:
        error(here, "E-lex-char", std::string("unexpected character '") + c + "'");
        return out;
    }
    if (kind == Tok::lbrace || kind == Tok::lparen || kind == Tok::lbracket) {
      stack.push_back({c, here});
    } else if (kind == Tok::rbrace || kind == Tok::rparen || kind == Tok::rbracket) {
      const char want = kind == Tok::rbrace ? '{' : (kind == Tok::rparen ? '(' : '[');
      if (stack.empty()) {
        error(here, "E-lex-unbalanced", std::string("unmatched '") + c + "'");
        return out;
      }
      if (stack.back().ch != want) {
        error(stack.back().loc, "E-lex-unbalanced",
              std::string("'") + stack.back().ch + "' is closed by '" + c + "' at line " + std::to_string(line) +
                  ", column " + std::to_string(col));
        return out;
      }
      stack.pop_back();
    }
    push(kind, std::string(1, c), here);
    advance();
  }
  if (!stack.empty()) {
    const auto& open = stack.front();
    const char* what = open.ch == '{' ? "block" : (open.ch == '(' ? "parenthesis" : "bracket");
    error(open.loc, "E-lex-unterminated", std::string("unterminated ") + what + ": '" + open.ch + "' is never closed");
    return out;
  }
  if (!out.empty() && out.back().kind != Tok::newline) push(Tok::newline, "\\n", {line, col});
  push(Tok::end, "", {line, col});
  return out;
}

}  // namespace hodge::dsl
