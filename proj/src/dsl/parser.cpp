#include "hodge/dsl/parser.hpp"

#include "hodge/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hodge::dsl {

std::string describe(ValueKind kind) {
  switch (kind) {
    case ValueKind::variety: return "variety class";
    case ValueKind::mhs: return "mixed Hodge table";
    case ValueKind::poly: return "genus polynomial";
    case ValueKind::strata: return "strata descriptor";
    case ValueKind::stalks: return "stalk descriptor";
    case ValueKind::fibration: return "fibration";
    case ValueKind::ring: return "ring";
    case ValueKind::bundle: return "bundle";
    case ValueKind::hodgecoll: return "Hodge bundle collection";
    case ValueKind::cls: return "class";
  }
  return "value";
}

namespace {

struct ParseError {
  Diagnostic diag;
};

const std::set<std::string, std::less<>> kReserved = {
    "let", "var", "pt", "L", "Gm", "P", "atom", "blowup", "mhs", "poly", "strata", "stalks", "fibration", "ring",
    "bundle", "hodgecoll", "class", "y", "O", "on", "point", "product", "projbundle", "custom", "tangent",
    "cotangent", "trivial", "line", "dual", "chi_y", "chi_y_c", "assert", "verify", "true", "false"};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view source) : toks_(std::move(tokens)) {
    std::size_t start = 0;
    while (start <= source.size()) {
      auto end = source.find('\n', start);
      if (end == std::string_view::npos) end = source.size();
      lines_.emplace_back(source.substr(start, end - start));
      start = end + 1;
    }
    prescan();
  }

  ParseResult run() {
    ParseResult result;
    while (peek().kind != Tok::end) {
      if (peek().kind == Tok::newline) {
        ++pos_;
        continue;
      }
      try {
        result.script.statements.push_back(statement());
      } catch (const ParseError& e) {
        result.diagnostics.push_back(e.diag);
        while (peek().kind != Tok::newline && peek().kind != Tok::end) ++pos_;
      }
    }
    return result;
  }

  // Entry point used by parse_y_polynomial.
  GenusPolynomial standalone_y_polynomial() {
    GenusPolynomial p = ypoly();
    skip_newlines();
    if (peek().kind != Tok::end) fail(peek().loc, "E-syntax", "unexpected " + what(peek()) + " after polynomial");
    return p;
  }

 private:
  // ----- token helpers -----------------------------------------------------

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == Tok::ident && peek(k).text == w;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!at_word(w)) return false;
    ++pos_;
    return true;
  }
  void skip_newlines() {
    while (at(Tok::newline)) ++pos_;
  }

  static std::string what(const Token& t) {
    if (t.kind == Tok::ident) return "'" + t.text + "'";
    if (t.kind == Tok::integer) return "integer " + t.text;
    return describe(t.kind);
  }

  [[noreturn]] void fail(Loc loc, std::string code, std::string message) const {
    throw ParseError{{Diagnostic::Severity::error, loc, std::move(code), std::move(message)}};
  }

  const Token& expect(Tok kind, std::string_view context) {
    if (!at(kind)) fail(peek().loc, "E-syntax", "expected " + describe(kind) + " " + std::string(context) + ", found " + what(peek()));
    return next();
  }
  void expect_word(std::string_view w, std::string_view context) {
    if (!at_word(w)) {
      fail(peek().loc, "E-syntax", "expected '" + std::string(w) + "' " + std::string(context) + ", found " + what(peek()));
    }
    ++pos_;
  }
  std::string ident(std::string_view context) { return expect(Tok::ident, context).text; }

  long integer(std::string_view context) {
    bool negative = accept(Tok::minus);
    const Token& t = expect(Tok::integer, context);
    try {
      long v = std::stol(t.text);
      return negative ? -v : v;
    } catch (const std::exception&) {
      fail(t.loc, "E-range", "integer " + t.text + " is out of range");
    }
  }
  Integer big_integer(std::string_view context) {
    bool negative = accept(Tok::minus);
    const Token& t = expect(Tok::integer, context);
    Integer v(t.text);
    return negative ? Integer(-v) : v;
  }

  void end_of_statement() {
    if (!at(Tok::newline) && !at(Tok::end)) fail(peek().loc, "E-syntax", "unexpected " + what(peek()) + " at end of statement");
  }

  // ----- symbol table ------------------------------------------------------

  void prescan() {
    bool line_start = true;
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (line_start && toks_[i].kind == Tok::ident && toks_[i].text == "let" && toks_[i + 1].kind == Tok::ident) {
        later_.emplace(toks_[i + 1].text, toks_[i + 1].loc);
      }
      line_start = toks_[i].kind == Tok::newline;
    }
  }

  bool is_bound(const std::string& name) const { return symbols_.count(name) > 0; }
  std::optional<ValueKind> kind_of(const std::string& name) const {
    auto it = symbols_.find(name);
    if (it == symbols_.end()) return std::nullopt;
    return it->second;
  }

  void require(const std::string& name, Loc loc, std::initializer_list<ValueKind> kinds) {
    auto k = kind_of(name);
    if (!k) {
      auto later = later_.find(name);
      if (later != later_.end() && (later->second.line > loc.line ||
                                    (later->second.line == loc.line && later->second.col > loc.col))) {
        fail(loc, "E-forward-ref", "'" + name + "' is used before its definition at line " +
                                       std::to_string(later->second.line));
      }
      fail(loc, "E-undefined", "'" + name + "' is not defined");
    }
    if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end()) {
      std::string want;
      for (auto kk : kinds) want += (want.empty() ? "" : " or ") + describe(kk);
      fail(loc, "E-type", "'" + name + "' is a " + describe(*k) + ", expected a " + want);
    }
  }

  // ----- statements --------------------------------------------------------

  Statement statement() {
    const Token& head = peek();
    if (head.kind != Tok::ident) fail(head.loc, "E-syntax", "expected a statement, found " + what(head));
    if (head.text == "let") return binding();
    Query q = query();
    end_of_statement();
    return q;
  }

  Binding binding() {
    expect_word("let", "");
    Binding b;
    b.loc = peek().loc;
    b.name = ident("after 'let'");
    if (kReserved.count(b.name)) fail(b.loc, "E-reserved", "'" + b.name + "' is a reserved word");
    if (auto prev = symbols_.find(b.name); prev != symbols_.end()) {
      fail(b.loc, "E-duplicate", "'" + b.name + "' is already defined at line " + std::to_string(defined_at_[b.name].line));
    }
    expect(Tok::assign, "after the bound name");
    const Token& kw = peek();
    if (kw.kind != Tok::ident) fail(kw.loc, "E-syntax", "expected a value constructor, found " + what(kw));
    ++pos_;
    if (kw.text == "var") {
      b.kind = ValueKind::variety;
      b.value = vexpr();
    } else if (kw.text == "mhs") {
      --pos_;
      b.kind = ValueKind::mhs;
      b.value = mhs_src();
    } else if (kw.text == "poly") {
      b.kind = ValueKind::poly;
      b.value = gexpr();
    } else if (kw.text == "strata") {
      b.kind = ValueKind::strata;
      b.value = strata_lit();
    } else if (kw.text == "stalks") {
      b.kind = ValueKind::stalks;
      b.value = stalks_lit();
    } else if (kw.text == "fibration") {
      b.kind = ValueKind::fibration;
      b.value = fibration_lit();
    } else if (kw.text == "ring") {
      b.kind = ValueKind::ring;
      b.value = ring_expr();
    } else if (kw.text == "bundle") {
      b.kind = ValueKind::bundle;
      BundleLit lit;
      lit.bundle = bexpr();
      expect_word("on", "before the ring of a bundle");
      lit.ring = ring_atom();
      b.value = lit;
    } else if (kw.text == "hodgecoll") {
      b.kind = ValueKind::hodgecoll;
      b.value = hodgecoll_lit();
    } else if (kw.text == "class") {
      b.kind = ValueKind::cls;
      ClassLit lit;
      lit.element = relem();
      expect_word("on", "before the ring of a class");
      lit.ring = ring_atom();
      b.value = lit;
    } else {
      fail(kw.loc, "E-syntax", "unknown value constructor '" + kw.text + "'");
    }
    end_of_statement();
    symbols_[b.name] = b.kind;
    defined_at_[b.name] = b.loc;
    return b;
  }

  // ----- y-polynomials and genus sources ------------------------------------

  bool starts_ypoly() const {
    return at(Tok::integer) || at(Tok::minus) || at(Tok::lparen) || at_word("y");
  }

  GenusPolynomial ypoly() {
    GenusPolynomial sum = yterm();
    while (at(Tok::plus) || at(Tok::minus)) {
      bool minus = next().kind == Tok::minus;
      GenusPolynomial t = yterm();
      sum = minus ? sum - t : sum + t;
    }
    return sum;
  }
  GenusPolynomial yterm() {
    bool negative = accept(Tok::minus);
    GenusPolynomial p = yfactor();
    while (accept(Tok::star)) p = p * yfactor();
    return negative ? -p : p;
  }
  GenusPolynomial yfactor() {
    GenusPolynomial base;
    if (at(Tok::integer)) {
      base = GenusPolynomial(Integer(next().text));
    } else if (accept_word("y")) {
      base = GenusPolynomial::variable();
      if (accept(Tok::caret)) return GenusPolynomial::monomial(1, static_cast<int>(integer("as exponent of y")));
      return base;
    } else if (accept(Tok::lparen)) {
      base = ypoly();
      expect(Tok::rparen, "to close the parenthesized polynomial");
    } else {
      fail(peek().loc, "E-syntax", "expected a polynomial in y, found " + what(peek()));
    }
    if (accept(Tok::caret)) {
      const Loc l = peek().loc;
      long e = integer("as exponent");
      if (e < 0) fail(l, "E-syntax", "only y may carry a negative exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  GExpr gexpr() {
    GExpr g;
    g.loc = peek().loc;
    if (at_word("chi_y_c")) {
      ++pos_;
      expect(Tok::lparen, "after chi_y_c");
      g.kind = GExpr::Kind::chi_y_c;
      g.variety = vexpr();
      expect(Tok::rparen, "to close chi_y_c(...)");
      return g;
    }
    if (at_word("chi_y")) {
      ++pos_;
      expect(Tok::lparen, "after chi_y");
      if (starts_mhs()) {
        g.kind = GExpr::Kind::chi_y_mhs;
        g.mhs = mhs_src();
      } else {
        g.kind = GExpr::Kind::chi_y;
        g.variety = vexpr();
      }
      expect(Tok::rparen, "to close chi_y(...)");
      return g;
    }
    if (at(Tok::ident) && !at_word("y")) {
      g.kind = GExpr::Kind::ref;
      g.name = next().text;
      require(g.name, g.loc, {ValueKind::poly});
      return g;
    }
    g.kind = GExpr::Kind::literal;
    g.literal = ypoly();
    return g;
  }

  // ----- MHS tables ----------------------------------------------------------

  bool starts_mhs() const {
    if (at_word("mhs")) return true;
    if (!at(Tok::ident)) return false;
    auto k = kind_of(peek().text);
    return k && *k == ValueKind::mhs;
  }

  MhsSrc mhs_src() {
    MhsSrc m;
    m.loc = peek().loc;
    if (accept_word("mhs")) {
      expect(Tok::lbrace, "to open an mhs table");
      std::set<HodgeIndex> seen;
      while (!at(Tok::rbrace)) {
        const Loc eloc = peek().loc;
        expect(Tok::lparen, "to open an (i, p, q) index");
        HodgeIndex idx;
        idx.degree = static_cast<int>(integer("as cohomological degree"));
        expect(Tok::comma, "after the degree");
        idx.p = static_cast<int>(integer("as Hodge index p"));
        expect(Tok::comma, "after p");
        if (accept(Tok::underscore)) {
          idx.q = kUnknownWeight;
        } else {
          idx.q = static_cast<int>(integer("as index q (or _)"));
        }
        expect(Tok::rparen, "to close the index");
        expect(Tok::colon, "after the index");
        const Loc dloc = peek().loc;
        Integer dim = big_integer("as dimension");
        if (dim < 0) fail(dloc, "E-value", "dimensions must be nonnegative");
        if (!seen.insert(idx).second) fail(eloc, "E-duplicate", "index listed twice in the mhs table");
        m.entries.emplace_back(idx, dim);
        if (!accept(Tok::comma) && !accept(Tok::semicolon)) break;
      }
      expect(Tok::rbrace, "to close the mhs table");
      return m;
    }
    m.ref = ident("naming a mixed Hodge table");
    require(*m.ref, m.loc, {ValueKind::mhs});
    return m;
  }

  // ----- variety expressions -------------------------------------------------

  std::shared_ptr<VExpr> make_v(VExpr::Kind kind, Loc loc) {
    auto v = std::make_shared<VExpr>();
    v->kind = kind;
    v->loc = loc;
    return v;
  }

  VExprPtr vexpr() {
    VExprPtr lhs = vterm();
    while (at(Tok::plus) || at(Tok::minus)) {
      const Token& op = next();
      auto node = make_v(op.kind == Tok::plus ? VExpr::Kind::add : VExpr::Kind::sub, op.loc);
      node->a = lhs;
      node->b = vterm();
      lhs = node;
    }
    return lhs;
  }
  VExprPtr vterm() {
    VExprPtr lhs = vpower();
    while (at(Tok::star)) {
      const Token& op = next();
      auto node = make_v(VExpr::Kind::mul, op.loc);
      node->a = lhs;
      node->b = vpower();
      lhs = node;
    }
    return lhs;
  }
  VExprPtr vpower() {
    VExprPtr base = vatom();
    if (at(Tok::caret)) {
      const Token& op = next();
      auto node = make_v(VExpr::Kind::pow, op.loc);
      node->a = base;
      const Loc l = peek().loc;
      node->n = integer("as exponent");
      if (node->n < 0) fail(l, "E-value", "exponent must be >= 0");
      return node;
    }
    return base;
  }
  VExprPtr vatom() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      auto v = make_v(VExpr::Kind::integer, t.loc);
      v->n = integer("");
      return v;
    }
    if (t.kind == Tok::lparen) {
      ++pos_;
      VExprPtr inner = vexpr();
      expect(Tok::rparen, "to close the parenthesized class");
      return inner;
    }
    if (t.kind != Tok::ident) fail(t.loc, "E-syntax", "expected a variety class, found " + what(t));
    ++pos_;
    if (t.text == "pt") return make_v(VExpr::Kind::point, t.loc);
    if (t.text == "L") return make_v(VExpr::Kind::affine_line, t.loc);
    if (t.text == "Gm") return make_v(VExpr::Kind::torus, t.loc);
    if (t.text == "P") {
      auto v = make_v(VExpr::Kind::proj, t.loc);
      const Loc l = peek().loc;
      v->n = integer("as the dimension of P");
      if (v->n < 0) fail(l, "E-value", "projective space of negative dimension");
      return v;
    }
    if (t.text == "blowup") {
      auto v = make_v(VExpr::Kind::blowup, t.loc);
      expect(Tok::lparen, "after blowup");
      v->a = vexpr();
      expect(Tok::comma, "after the blown-up class");
      v->b = vexpr();
      expect(Tok::comma, "after the center");
      v->n = integer("as r = codim - 1");
      expect(Tok::rparen, "to close blowup(...)");
      return v;
    }
    if (t.text == "atom") {
      auto v = make_v(VExpr::Kind::atom, t.loc);
      v->name = expect(Tok::string, "naming the atom").text;
      if (accept_word("epoly")) {
        v->epoly = epoly_literal();
      } else if (accept_word("of")) {
        v->a = vexpr();
      } else {
        fail(peek().loc, "E-syntax", "expected 'epoly {...}' or 'of <class>' after the atom name");
      }
      while (true) {
        if (accept_word("dim")) {
          const Loc l = peek().loc;
          long d = integer("as dimension");
          if (d < 0) fail(l, "E-value", "dimension must be >= 0");
          v->dim = static_cast<int>(d);
        } else if (accept_word("smooth")) {
          v->smooth = true;
        } else if (accept_word("complete")) {
          v->complete = true;
        } else {
          break;
        }
      }
      return v;
    }
    auto v = make_v(VExpr::Kind::ref, t.loc);
    v->name = t.text;
    require(v->name, t.loc, {ValueKind::variety});
    return v;
  }

  EPolynomial epoly_literal() {
    expect(Tok::lbrace, "to open an E-polynomial");
    EPolynomial e;
    while (!at(Tok::rbrace)) {
      expect(Tok::lparen, "to open a (k, l) exponent");
      int k = static_cast<int>(integer("as exponent of u"));
      expect(Tok::comma, "after k");
      int l = static_cast<int>(integer("as exponent of v"));
      expect(Tok::rparen, "to close the exponent");
      expect(Tok::colon, "after the exponent");
      e += EPolynomial::monomial(big_integer("as coefficient"), k, l);
      if (!accept(Tok::comma) && !accept(Tok::semicolon)) break;
    }
    expect(Tok::rbrace, "to close the E-polynomial");
    return e;
  }

  // ----- ring elements ---------------------------------------------------------

  std::shared_ptr<RExpr> make_r(RExpr::Kind kind, Loc loc) {
    auto r = std::make_shared<RExpr>();
    r->kind = kind;
    r->loc = loc;
    return r;
  }

  RExprPtr relem() {
    RExprPtr lhs = rterm();
    while (at(Tok::plus) || at(Tok::minus)) {
      const Token& op = next();
      auto node = make_r(op.kind == Tok::plus ? RExpr::Kind::add : RExpr::Kind::sub, op.loc);
      node->a = lhs;
      node->b = rterm();
      lhs = node;
    }
    return lhs;
  }
  RExprPtr rterm() {
    const Loc loc = peek().loc;
    bool negative = accept(Tok::minus);
    RExprPtr lhs = rfactor();
    while (at(Tok::star)) {
      const Token& op = next();
      auto node = make_r(RExpr::Kind::mul, op.loc);
      node->a = lhs;
      node->b = rfactor();
      lhs = node;
    }
    if (negative) {
      auto node = make_r(RExpr::Kind::neg, loc);
      node->a = lhs;
      return node;
    }
    return lhs;
  }
  RExprPtr rfactor() {
    const Token& t = peek();
    RExprPtr base;
    if (t.kind == Tok::integer) {
      ++pos_;
      auto num = make_r(RExpr::Kind::number, t.loc);
      Rational v{Integer(t.text)};
      if (accept(Tok::slash)) {
        const Token& d = expect(Tok::integer, "as denominator");
        Integer den(d.text);
        if (den == 0) fail(d.loc, "E-value", "division by zero");
        v /= Rational(den);
      }
      num->value = v;
      base = num;
    } else if (t.kind == Tok::ident) {
      ++pos_;
      auto nm = make_r(RExpr::Kind::name, t.loc);
      nm->name = t.text;
      base = nm;
    } else if (t.kind == Tok::lparen) {
      ++pos_;
      base = relem();
      expect(Tok::rparen, "to close the parenthesized class");
    } else {
      fail(t.loc, "E-syntax", "expected a ring element, found " + what(t));
    }
    if (at(Tok::caret)) {
      const Token& op = next();
      auto node = make_r(RExpr::Kind::pow, op.loc);
      node->a = base;
      const Loc l = peek().loc;
      node->exponent = integer("as exponent");
      if (node->exponent < 0) fail(l, "E-value", "exponent must be >= 0");
      return node;
    }
    return base;
  }

  ChernList chern_list() {
    ChernList c;
    expect(Tok::lbracket, "to open a Chern class list");
    expect_word("rank", "at the start of a Chern class list");
    const Loc rl = peek().loc;
    c.rank = integer("as rank");
    if (c.rank < 0) fail(rl, "E-value", "rank must be >= 0");
    std::set<long> seen;
    while (accept(Tok::semicolon) || accept(Tok::comma)) {
      if (at(Tok::rbracket)) break;
      const Token& name = expect(Tok::ident, "naming a Chern class c<i>");
      if (name.text.size() < 2 || name.text[0] != 'c' ||
          !std::all_of(name.text.begin() + 1, name.text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        fail(name.loc, "E-syntax", "expected c<i>, found '" + name.text + "'");
      }
      long i = std::stol(name.text.substr(1));
      if (i < 1) fail(name.loc, "E-value", "Chern classes are numbered from c1");
      if (!seen.insert(i).second) fail(name.loc, "E-duplicate", name.text + " is given twice");
      expect(Tok::assign, "after " + name.text);
      c.classes.emplace_back(i, relem());
    }
    expect(Tok::rbracket, "to close the Chern class list");
    return c;
  }

  // ----- rings ---------------------------------------------------------------

  std::shared_ptr<RingExpr> make_ring(RingExpr::Kind kind, Loc loc) {
    auto r = std::make_shared<RingExpr>();
    r->kind = kind;
    r->loc = loc;
    return r;
  }

  bool starts_ring_atom() const {
    if (at(Tok::lparen) || at_word("P") || at_word("point")) return true;
    if (!at(Tok::ident)) return false;
    auto k = kind_of(peek().text);
    return k && *k == ValueKind::ring;
  }

  RingExprPtr ring_atom() {
    const Token& t = peek();
    if (accept(Tok::lparen)) {
      RingExprPtr r = ring_expr();
      expect(Tok::rparen, "to close the parenthesized ring");
      return r;
    }
    if (at_word("P") || at_word("point")) return ring_expr();
    if (t.kind != Tok::ident) fail(t.loc, "E-syntax", "expected a ring, found " + what(t));
    ++pos_;
    auto r = make_ring(RingExpr::Kind::ref, t.loc);
    r->name = t.text;
    require(r->name, t.loc, {ValueKind::ring});
    return r;
  }

  RingExprPtr ring_expr() {
    const Token& t = peek();
    if (t.kind == Tok::lparen || (t.kind == Tok::ident && kind_of(t.text))) return ring_atom();
    if (t.kind != Tok::ident) fail(t.loc, "E-syntax", "expected a ring, found " + what(t));
    ++pos_;
    if (t.text == "point") return make_ring(RingExpr::Kind::point, t.loc);
    if (t.text == "P") {
      auto r = make_ring(RingExpr::Kind::proj, t.loc);
      const Loc l = peek().loc;
      r->n = integer("as the dimension of P");
      if (r->n < 0) fail(l, "E-value", "projective space of negative dimension");
      return r;
    }
    if (t.text == "product") {
      auto r = make_ring(RingExpr::Kind::product, t.loc);
      while (starts_ring_atom()) r->factors.push_back(ring_atom());
      if (r->factors.size() < 2) fail(t.loc, "E-syntax", "product needs at least two factor rings");
      return r;
    }
    if (t.text == "projbundle") {
      auto r = make_ring(RingExpr::Kind::proj_bundle, t.loc);
      expect_word("base", "in projbundle");
      expect(Tok::assign, "after base");
      r->factors.push_back(ring_atom());
      expect_word("bundle", "in projbundle");
      expect(Tok::assign, "after bundle");
      r->bundle = chern_list();
      return r;
    }
    if (t.text == "custom") {
      auto r = make_ring(RingExpr::Kind::custom, t.loc);
      expect(Tok::lbrace, "to open a custom ring");
      bool have_top = false;
      while (!at(Tok::rbrace)) {
        if (accept_word("basis")) {
          do {
            std::string name = ident("naming a basis element");
            expect(Tok::colon, "after the basis element");
            long d = integer("as degree");
            r->custom.basis.emplace_back(name, d);
          } while (accept(Tok::comma));
        } else if (accept_word("top")) {
          r->custom.top = ident("naming the top class");
          have_top = true;
        } else {
          const Loc l = peek().loc;
          std::string a = ident("naming a basis element");
          expect(Tok::star, "in a product rule a*b = ...");
          std::string b = ident("naming a basis element");
          expect(Tok::assign, "in a product rule");
          r->custom.products.emplace_back(a, b, relem(), l);
        }
        if (!accept(Tok::semicolon)) break;
      }
      expect(Tok::rbrace, "to close the custom ring");
      if (!have_top) fail(t.loc, "E-syntax", "custom ring needs a 'top <name>' clause");
      return r;
    }
    fail(t.loc, "E-syntax", "unknown ring constructor '" + t.text + "'");
  }

  // ----- bundles ---------------------------------------------------------------

  std::shared_ptr<BExpr> make_b(BExpr::Kind kind, Loc loc) {
    auto b = std::make_shared<BExpr>();
    b->kind = kind;
    b->loc = loc;
    return b;
  }

  BExprPtr bexpr() {
    BExprPtr lhs = bterm();
    while (at(Tok::plus)) {
      const Token& op = next();
      auto node = make_b(BExpr::Kind::sum, op.loc);
      node->a = lhs;
      node->b = bterm();
      lhs = node;
    }
    return lhs;
  }

  BExprPtr bterm() {
    const Token& t = peek();
    if (t.kind == Tok::lbracket) {
      auto b = make_b(BExpr::Kind::explicit_chern, t.loc);
      b->chern = chern_list();
      return b;
    }
    if (t.kind != Tok::ident) fail(t.loc, "E-syntax", "expected a bundle, found " + what(t));
    ++pos_;
    if (t.text == "O") {
      auto b = make_b(BExpr::Kind::o, t.loc);
      if (accept(Tok::lparen)) {
        do {
          b->degrees.push_back(integer("as a twist degree"));
        } while (accept(Tok::comma));
        expect(Tok::rparen, "to close O(...)");
      } else {
        b->kind = BExpr::Kind::trivial;
        b->rank = 1;
      }
      return b;
    }
    if (t.text == "trivial") {
      auto b = make_b(BExpr::Kind::trivial, t.loc);
      const Loc l = peek().loc;
      b->rank = integer("as rank");
      if (b->rank < 0) fail(l, "E-value", "rank must be >= 0");
      return b;
    }
    if (t.text == "tangent") return make_b(BExpr::Kind::tangent, t.loc);
    if (t.text == "cotangent") return make_b(BExpr::Kind::cotangent, t.loc);
    if (t.text == "line") {
      auto b = make_b(BExpr::Kind::line, t.loc);
      expect(Tok::lparen, "after line");
      b->c1 = relem();
      expect(Tok::rparen, "to close line(...)");
      return b;
    }
    if (t.text == "dual") {
      auto b = make_b(BExpr::Kind::dual, t.loc);
      expect(Tok::lparen, "after dual");
      b->a = bexpr();
      expect(Tok::rparen, "to close dual(...)");
      return b;
    }
    auto b = make_b(BExpr::Kind::ref, t.loc);
    b->name = t.text;
    require(b->name, t.loc, {ValueKind::bundle});
    return b;
  }

  // ----- composite literals ------------------------------------------------------

  StrataLit strata_lit() {
    StrataLit lit;
    if (accept_word("projective")) lit.projective = true;
    expect(Tok::lbrace, "to open a strata block");
    std::set<std::string> ids;
    while (!at(Tok::rbrace)) {
      StratumLit s;
      s.loc = peek().loc;
      s.id = ident("naming a stratum");
      if (!ids.insert(s.id).second) fail(s.loc, "E-duplicate", "stratum '" + s.id + "' is declared twice");
      expect(Tok::colon, "after the stratum name");
      bool have_genus = false, have_fiber = false;
      while (at(Tok::ident)) {
        const Token& a = next();
        if (a.text == "closure" || a.text == "open") {
          expect(Tok::assign, "after " + a.text);
          s.genus = gexpr();
          s.genus_is_closure = a.text == "closure";
          have_genus = true;
        } else if (a.text == "fiber") {
          expect(Tok::assign, "after fiber");
          s.fiber = gexpr();
          have_fiber = true;
        } else if (a.text == "generic") {
          s.generic = true;
        } else if (a.text == "trivial-monodromy") {
          s.trivial_monodromy = true;
        } else if (a.text == "under") {
          do {
            const Token& w = expect(Tok::ident, "naming a stratum");
            s.under.emplace_back(w.text, w.loc);
          } while (accept(Tok::comma));
        } else {
          fail(a.loc, "E-syntax", "unknown stratum attribute '" + a.text + "'");
        }
      }
      if (!have_genus) fail(s.loc, "E-syntax", "stratum '" + s.id + "' needs closure=... or open=...");
      if (!have_fiber) fail(s.loc, "E-syntax", "stratum '" + s.id + "' needs fiber=...");
      lit.strata.push_back(std::move(s));
      if (!accept(Tok::semicolon)) break;
    }
    expect(Tok::rbrace, "to close the strata block");
    for (const auto& s : lit.strata) {
      for (const auto& [w, loc] : s.under) {
        if (!ids.count(w)) fail(loc, "E-undefined", "stratum '" + w + "' is not declared in this block");
      }
    }
    return lit;
  }

  StalksLit stalks_lit() {
    StalksLit lit;
    expect(Tok::lbrace, "to open a stalks block");
    while (!at(Tok::rbrace)) {
      StalkLit s;
      s.loc = peek().loc;
      s.id = ident("naming a stratum");
      expect(Tok::colon, "after the stratum name");
      expect_word("open", "in a stalk entry");
      expect(Tok::assign, "after open");
      s.open = gexpr();
      expect_word("stalk", "in a stalk entry");
      expect(Tok::assign, "after stalk");
      s.stalk = mhs_src();
      lit.strata.push_back(std::move(s));
      if (!accept(Tok::semicolon)) break;
    }
    expect(Tok::rbrace, "to close the stalks block");
    return lit;
  }

  FibrationLit fibration_lit() {
    FibrationLit lit;
    const Loc open = peek().loc;
    expect(Tok::lbrace, "to open a fibration block");
    bool have_base = false, have_fiber = false, have_dim = false;
    while (!at(Tok::rbrace)) {
      const Token& a = expect(Tok::ident, "in a fibration block");
      if (a.text == "base") {
        expect(Tok::assign, "after base");
        lit.base = gexpr();
        have_base = true;
      } else if (a.text == "fiber") {
        expect(Tok::assign, "after fiber");
        lit.fiber = gexpr();
        have_fiber = true;
      } else if (a.text == "dim") {
        expect(Tok::assign, "after dim");
        const Loc l = peek().loc;
        lit.dim = integer("as total dimension");
        if (lit.dim < 1) fail(l, "E-value", "total dimension must be >= 1");
        have_dim = true;
      } else if (a.text == "trivial-monodromy") {
        lit.trivial_monodromy = true;
      } else if (a.text == "critical") {
        lit.critical.push_back(critical_lit(a.loc));
      } else {
        fail(a.loc, "E-syntax", "unknown fibration attribute '" + a.text + "'");
      }
      accept(Tok::semicolon);
    }
    expect(Tok::rbrace, "to close the fibration block");
    if (!have_base || !have_fiber || !have_dim) fail(open, "E-syntax", "fibration needs base=, fiber= and dim=");
    return lit;
  }

  CriticalLit critical_lit(Loc loc) {
    CriticalLit c;
    c.loc = loc;
    if (at(Tok::string)) c.label = next().text;
    expect(Tok::lbrace, "to open a critical value");
    const Token& kind = expect(Tok::ident, "naming the critical data (vanishing, isolated or strata)");
    if (kind.text == "vanishing") {
      c.kind = CriticalLit::Kind::vanishing;
      c.table = mhs_src();
      expect_word("sing_dim", "after the vanishing table");
      const Loc l = peek().loc;
      c.sing_dim = integer("as singular locus dimension");
      if (c.sing_dim < 0) fail(l, "E-value", "sing_dim must be >= 0");
    } else if (kind.text == "isolated") {
      c.kind = CriticalLit::Kind::isolated;
      expect(Tok::lbracket, "to open the list of Milnor tables");
      while (!at(Tok::rbracket)) {
        c.points.push_back(mhs_src());
        if (!accept(Tok::comma)) break;
      }
      expect(Tok::rbracket, "to close the list of Milnor tables");
    } else if (kind.text == "strata") {
      c.kind = CriticalLit::Kind::stratified;
      expect(Tok::lbrace, "to open the singular strata");
      while (!at(Tok::rbrace)) {
        MilnorLit m;
        m.id = ident("naming a stratum");
        expect(Tok::colon, "after the stratum name");
        expect_word("open", "in a Milnor stratum");
        expect(Tok::assign, "after open");
        m.open = gexpr();
        expect_word("milnor", "in a Milnor stratum");
        expect(Tok::assign, "after milnor");
        m.milnor = mhs_src();
        c.strata.push_back(std::move(m));
        if (!accept(Tok::semicolon)) break;
      }
      expect(Tok::rbrace, "to close the singular strata");
    } else {
      fail(kind.loc, "E-syntax", "unknown critical data '" + kind.text + "'");
    }
    accept(Tok::semicolon);
    expect(Tok::rbrace, "to close the critical value");
    return c;
  }

  HodgeCollLit hodgecoll_lit() {
    HodgeCollLit lit;
    if (accept_word("by-filtration")) {
      lit.by_filtration = true;
    } else {
      accept_word("by-type");
    }
    expect_word("on", "before the ring of a Hodge bundle collection");
    lit.ring = ring_atom();
    expect(Tok::lbrace, "to open the Hodge bundles");
    std::set<std::pair<int, int>> seen;
    while (!at(Tok::rbrace)) {
      const Loc l = peek().loc;
      expect(Tok::lparen, "to open a (p, q) index");
      int p = static_cast<int>(integer("as p"));
      expect(Tok::comma, "after p");
      int q = static_cast<int>(integer(lit.by_filtration ? "as i" : "as q"));
      expect(Tok::rparen, "to close the index");
      expect(Tok::colon, "after the index");
      if (p < 0) fail(l, "E-value", "Hodge index p must be >= 0");
      if (!seen.insert({p, q}).second) fail(l, "E-duplicate", "index listed twice in the collection");
      lit.entries.emplace_back(p, q, bexpr(), l);
      if (!accept(Tok::semicolon) && !accept(Tok::comma)) break;
    }
    expect(Tok::rbrace, "to close the Hodge bundles");
    return lit;
  }

  // ----- queries -------------------------------------------------------------------

  std::string coll_ref() {
    const Loc l = peek().loc;
    std::string name = ident("naming a Hodge bundle collection");
    require(name, l, {ValueKind::hodgecoll});
    return name;
  }

  bool at_option(std::string_view name) const { return at_word(name) && peek(1).kind == Tok::assign; }

  void tangent_option(CharQuery& q) {
    if (at_option("tangent")) {
      pos_ += 2;
      q.tangent = bexpr();
    }
  }

  std::optional<GenusSpecialization> at_clause() {
    if (!accept_word("at")) return std::nullopt;
    const Token& t = expect(Tok::ident, "after 'at'");
    if (t.text == "euler") return GenusSpecialization::euler;
    if (t.text == "arithmetic") return GenusSpecialization::arithmetic;
    if (t.text == "signature") return GenusSpecialization::signature;
    fail(t.loc, "E-syntax", "expected euler, arithmetic or signature after 'at'");
  }

  Query query() {
    Query q;
    q.loc = peek().loc;
    q.text = line_text(q.loc.line);
    const Token& verb = next();
    q.verb = verb.text;
    if (verb.text == "genus") {
      GenusQuery g;
      const Token& mode = expect(Tok::ident, "after genus");
      if (mode.text == "chi_y_c" || mode.text == "weight" || mode.text == "euler") {
        g.mode = mode.text == "chi_y_c" ? GenusQuery::Mode::chi_y_c
                 : mode.text == "weight" ? GenusQuery::Mode::weight
                                         : GenusQuery::Mode::euler;
        g.variety = vexpr();
      } else if (mode.text == "chi_y") {
        g.mode = GenusQuery::Mode::chi_y;
        if (starts_mhs()) {
          g.mhs = mhs_src();
        } else {
          g.variety = vexpr();
        }
      } else if (mode.text == "dual") {
        g.mode = GenusQuery::Mode::dual;
        g.n = integer("as the dimension for duality");
        g.source = gexpr();
      } else if (mode.text == "of") {
        g.mode = GenusQuery::Mode::poly;
        g.source = gexpr();
      } else {
        fail(mode.loc, "E-syntax", "unknown genus mode '" + mode.text + "' (chi_y_c, chi_y, weight, euler, dual, of)");
      }
      g.at = at_clause();
      q.body = g;
    } else if (verb.text == "epoly") {
      EpolyQuery e;
      if (starts_mhs()) {
        e.mhs = mhs_src();
      } else {
        e.variety = vexpr();
      }
      q.body = e;
    } else if (verb.text == "check") {
      CheckQuery c;
      const Token& mode = expect(Tok::ident, "after check");
      if (mode.text == "product") {
        c.base = vexpr();
        expect(Tok::comma, "between base and fiber");
        c.fiber = vexpr();
      } else if (mode.text == "multiplicative") {
        c.mode = CheckQuery::Mode::multiplicative;
        c.total = gexpr();
        expect(Tok::comma, "after the total space genus");
        c.gbase = gexpr();
        expect(Tok::comma, "after the base genus");
        c.gfiber = gexpr();
      } else {
        fail(mode.loc, "E-syntax", "unknown check '" + mode.text + "' (product, multiplicative)");
      }
      q.body = c;
    } else if (verb.text == "strat") {
      StratQuery s;
      const Token& mode = expect(Tok::ident, "after strat");
      if (mode.text == "chi_c") {
        s.mode = StratQuery::Mode::chi_c;
      } else if (mode.text == "chi") {
        s.mode = StratQuery::Mode::chi;
      } else if (mode.text == "hat") {
        s.mode = StratQuery::Mode::hat;
      } else if (mode.text == "stalk") {
        s.mode = StratQuery::Mode::stalk;
      } else {
        fail(mode.loc, "E-syntax", "unknown strat mode '" + mode.text + "' (chi_c, chi, hat, stalk)");
      }
      const Loc l = peek().loc;
      s.name = ident("naming a descriptor");
      require(s.name, l, {s.mode == StratQuery::Mode::stalk ? ValueKind::stalks : ValueKind::strata});
      q.body = s;
    } else if (verb.text == "rh") {
      RhQuery r;
      if (at_word("epoly") && peek(1).kind == Tok::ident) {
        ++pos_;
        r.epoly = true;
      }
      const Loc l = peek().loc;
      r.name = ident("naming a fibration");
      require(r.name, l, {ValueKind::fibration});
      q.body = r;
    } else if (verb.text == "support") {
      SupportQuery s;
      s.table = mhs_src();
      expect_word("n", "in a support check");
      expect(Tok::assign, "after n");
      s.n = integer("as n");
      expect_word("s", "in a support check");
      expect(Tok::assign, "after s");
      s.s = integer("as s");
      q.body = s;
    } else if (verb.text == "ghrr" || verb.text == "meyer" || verb.text == "am" || verb.text == "higher" ||
               verb.text == "log") {
      CharQuery c;
      c.ring = ring_atom();
      if (verb.text == "ghrr") {
        c.mode = CharQuery::Mode::ghrr;
        if (!at(Tok::newline) && !at(Tok::end) && !at(Tok::eq) && !at(Tok::neq) && !at_option("tangent")) c.bundle = bexpr();
      } else if (verb.text == "meyer") {
        c.mode = CharQuery::Mode::meyer;
        c.coll = coll_ref();
        if (accept_word("normalized")) c.normalized = true;
      } else if (verb.text == "am") {
        c.mode = CharQuery::Mode::am;
        c.coll = coll_ref();
      } else if (verb.text == "higher") {
        c.mode = CharQuery::Mode::higher;
        c.element = relem();
      } else {
        c.mode = CharQuery::Mode::log;
        if (at_option("omega")) {
          pos_ += 2;
          c.bundle = bexpr();
        } else if (accept_word("forms")) {
          expect(Tok::lbracket, "to open the list of log forms");
          while (!at(Tok::rbracket)) {
            c.forms.push_back(bexpr());
            if (!accept(Tok::comma)) break;
          }
          expect(Tok::rbracket, "to close the list of log forms");
        } else {
          fail(peek().loc, "E-syntax", "log needs omega=<bundle> or forms [...]");
        }
        if (at_option("ext")) {
          pos_ += 2;
          c.ext = coll_ref();
        }
      }
      tangent_option(c);
      q.body = c;
    } else if (verb.text == "class") {
      CharQuery c;
      const Token& mode = expect(Tok::ident, "after class");
      if (mode.text == "hirzebruch") {
        c.mode = CharQuery::Mode::class_hirzebruch;
        c.ring = ring_atom();
        if (accept_word("normalized")) c.normalized = true;
      } else if (mode.text == "todd" || mode.text == "lambda" || mode.text == "ch") {
        c.mode = mode.text == "todd" ? CharQuery::Mode::class_todd
                 : mode.text == "lambda" ? CharQuery::Mode::class_lambda
                                         : CharQuery::Mode::class_ch;
        c.bundle = bexpr();
        expect_word("on", "before the ring");
        c.ring = ring_atom();
      } else if (mode.text == "meyer") {
        c.mode = CharQuery::Mode::class_meyer;
        c.ring = ring_atom();
        c.coll = coll_ref();
      } else if (mode.text == "atiyah") {
        c.mode = CharQuery::Mode::class_atiyah;
        c.ring = ring_atom();
        if (at(Tok::ident)) c.coll = coll_ref();
      } else if (mode.text == "push") {
        c.mode = CharQuery::Mode::class_push;
        c.ring = ring_atom();
        c.target = ring_atom();
        if (accept_word("hirzebruch")) {
          c.normalized = false;
        } else {
          c.element = relem();
        }
      } else if (mode.text == "show") {
        c.mode = CharQuery::Mode::class_value;
        const Loc l = peek().loc;
        c.class_ref = ident("naming a class");
        require(*c.class_ref, l, {ValueKind::cls});
      } else {
        fail(mode.loc, "E-syntax",
             "unknown class query '" + mode.text + "' (hirzebruch, todd, lambda, ch, meyer, atiyah, push, show)");
      }
      tangent_option(c);
      q.body = c;
    } else if (verb.text == "verify") {
      VerifyQuery v;
      const Token& s = expect(Tok::ident, "naming a suite");
      if (s.text != "paper-examples" && s.text != "properties" && s.text != "cross-checks" && s.text != "all") {
        fail(s.loc, "E-syntax", "unknown suite '" + s.text + "' (paper-examples, properties, cross-checks, all)");
      }
      v.suite = s.text;
      q.body = v;
    } else if (verb.text == "assert") {
      AssertQuery a;
      if (at_word("assert")) fail(peek().loc, "E-syntax", "nested assert");
      auto inner = std::make_shared<Query>(query());
      a.inner = inner;
      if (accept(Tok::eq)) {
        a.equal = true;
      } else if (accept(Tok::neq)) {
        a.equal = false;
      } else {
        fail(peek().loc, "E-syntax", "expected '==' or '!=' in assert, found " + what(peek()));
      }
      if (accept_word("true")) {
        a.truth = true;
      } else if (accept_word("false")) {
        a.truth = false;
      } else {
        a.genus = ypoly();
      }
      q.body = a;
    } else {
      fail(verb.loc, "E-syntax", "unknown statement '" + verb.text + "'");
    }
    return q;
  }

  std::string line_text(int line) const {
    if (line < 1 || line > static_cast<int>(lines_.size())) return {};
    std::string s = lines_[static_cast<std::size_t>(line) - 1];
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> lines_;
  std::unordered_map<std::string, ValueKind> symbols_;
  std::unordered_map<std::string, Loc> defined_at_;
  std::unordered_map<std::string, Loc> later_;
};

}  // namespace

ParseResult parse(std::string_view source) {
  std::vector<Diagnostic> diags;
  auto tokens = lex(source, diags);
  if (!diags.empty()) return {{}, diags};
  Parser p(std::move(tokens), source);
  return p.run();
}

GenusPolynomial parse_y_polynomial(std::string_view text) {
  std::vector<Diagnostic> diags;
  auto tokens = lex(text, diags);
  if (!diags.empty()) throw ValidationError(to_string(diags.front()));
  Parser p(std::move(tokens), text);
  try {
    return p.standalone_y_polynomial();
  } catch (const ParseError& e) {
    throw ValidationError(to_string(e.diag));
  }
}

}  // namespace hodge::dsl
