#include "hodge/dsl/parser.hpp"
#include "hodge/error.hpp"
#include "hodge/dsl/runner.hpp"
#include "hodge/polycore/json_io.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using namespace hodge::dsl;

namespace {

RunOutput run_text(std::string_view src, OutputFormat format = OutputFormat::text, bool assume = false) {
  RunOptions opts;
  opts.format = format;
  opts.assume_trivial_monodromy = assume;
  return run_source(src, opts);
}

std::vector<Diagnostic> diagnostics(std::string_view src) { return parse(src).diagnostics; }

}  // namespace

TEST(Lexer, TokensAndComments) {
  std::vector<Diagnostic> d;
  auto toks = lex("let X = var P 2 # comment\n", d);
  ASSERT_TRUE(d.empty());
  std::vector<Tok> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  EXPECT_EQ(kinds, (std::vector<Tok>{Tok::ident, Tok::ident, Tok::assign, Tok::ident, Tok::ident, Tok::integer,
                                     Tok::newline, Tok::end}));
  EXPECT_EQ(toks[5].loc.line, 1);
  EXPECT_EQ(toks[5].loc.col, 15);
}

TEST(Lexer, HyphenatedKeywordsOnly) {
  std::vector<Diagnostic> d;
  auto toks = lex("trivial-monodromy Gm-pt", d);
  ASSERT_TRUE(d.empty());
  EXPECT_EQ(toks[0].text, "trivial-monodromy");
  EXPECT_EQ(toks[1].text, "Gm");
  EXPECT_EQ(toks[2].kind, Tok::minus);
}

TEST(Lexer, NewlinesInsideBracketsAreIgnored) {
  std::vector<Diagnostic> d;
  auto toks = lex("mhs {\n (0,0,0): 1\n}\n", d);
  ASSERT_TRUE(d.empty());
  int newlines = 0;
  for (const auto& t : toks) newlines += t.kind == Tok::newline;
  EXPECT_EQ(newlines, 1);
}

TEST(Parser, WellFormedScript) {
  auto r = parse("let B = var (P 1)\ngenus chi_y_c B\n");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.script.statements.size(), 2u);
  const auto& q = std::get<Query>(r.script.statements[1]);
  EXPECT_EQ(q.verb, "genus");
  EXPECT_EQ(q.text, "genus chi_y_c B");
}

TEST(Parser, UnterminatedBlockGivesOneDiagnosticAtOpenBrace) {
  auto d = diagnostics("let F = mhs { (0,0,0): 1,\n (1,1,0): 1\ngenus chi_y F\nlet G = mhs { (0,0,0): 1 }\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].loc.line, 1);
  EXPECT_EQ(d[0].loc.col, 13);
  EXPECT_EQ(d[0].code, "E-lex-unterminated");
}

TEST(Parser, ForwardReferenceNamesIdentifier) {
  auto d = diagnostics("genus chi_y_c Later\nlet Later = var P 1\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-forward-ref");
  EXPECT_NE(d[0].message.find("'Later'"), std::string::npos);
  EXPECT_EQ(d[0].loc.line, 1);
  EXPECT_EQ(d[0].loc.col, 15);
}

TEST(Parser, UndefinedDuplicateAndKindErrors) {
  auto d = diagnostics("genus chi_y_c Nope\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-undefined");

  d = diagnostics("let X = var P 1\nlet X = var P 2\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-duplicate");
  EXPECT_EQ(d[0].loc.line, 2);

  d = diagnostics("let R = ring P 1\ngenus chi_y_c R\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-type");

  d = diagnostics("let L = var P 1\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-reserved");
}

TEST(Parser, SyntaxErrorsAreReportedPerLine) {
  auto d = diagnostics("genus chi_y_c P\nfrobnicate 3\nlet S = strata { A: fiber=1 generic }\n");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].loc.line, 1);
  EXPECT_EQ(d[1].loc.line, 2);
  EXPECT_EQ(d[2].loc.line, 3);
  for (const auto& x : d) EXPECT_EQ(x.code, "E-syntax");
}

TEST(Parser, StrataUnderUnknownStratum) {
  auto d = diagnostics("let S = strata { U: closure=1 fiber=1 generic; A: closure=1 fiber=1 under V }\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-undefined");
}

TEST(Parser, YPolynomials) {
  EXPECT_EQ(parse_y_polynomial("(1 - y)^2 + 3*y^-1"), parse_genus_polynomial("3*y^-1 + 1 - 2*y + y^2"));
  EXPECT_THROW(parse_y_polynomial("1 +"), ValidationError);
}

TEST(Runner, GenusQueries) {
  auto out = run_text(
      "let B = var (P 1)\n"
      "genus chi_y_c B\n"
      "genus chi_y Gm\n"
      "genus weight P 1\n"
      "genus euler P 3\n"
      "genus chi_y P 2 at signature\n"
      "epoly L * Gm\n");
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.output,
            "> genus chi_y_c B\n  1 - y\n"
            "> genus chi_y Gm\n  1 + y\n"
            "> genus weight P 1\n  1 + t^2\n"
            "> genus euler P 3\n  4\n"
            "> genus chi_y P 2 at signature\n  1\n"
            "> epoly L * Gm\n  " +
                (EPolynomial::uv() * (EPolynomial::uv() - 1)).to_string() + "\n");
}

TEST(Runner, ExitCodes) {
  EXPECT_EQ(run_text("genus chi_y_c X\n").exit_code, kExitParse);
  EXPECT_EQ(run_text("let S = strata { U: closure=3 fiber=1 generic under A; A: closure=1 fiber=1 under U }\n")
                .exit_code,
            kExitValidation);
  EXPECT_EQ(run_text("genus chi_y P 2 - pt\n").exit_code, kExitValidation);
  EXPECT_EQ(run_text("assert genus chi_y P 1 == 1\n").exit_code, kExitValidation);
  const char* refused =
      "let S = strata { U: closure=chi_y_c(P 2) fiber=1 generic; p: closure=1 fiber=chi_y_c(P 1) under U }\n"
      "strat chi_c S\n";
  EXPECT_EQ(run_text(refused).exit_code, kExitMonodromy);
  auto ok = run_text(refused, OutputFormat::text, true);
  EXPECT_EQ(ok.exit_code, kExitOk);
  EXPECT_NE(ok.output.find("1 - 2*y + y^2"), std::string::npos);
}

TEST(Runner, FailFastKeepsEarlierOutput) {
  auto out = run_text("genus chi_y P 1\nassert genus chi_y P 1 == 0\ngenus chi_y P 2\n");
  EXPECT_EQ(out.exit_code, kExitValidation);
  EXPECT_NE(out.output.find("> genus chi_y P 1\n  1 - y\n"), std::string::npos);
  EXPECT_NE(out.output.find("2:1: error [E-assert]"), std::string::npos);
  EXPECT_EQ(out.output.find("genus chi_y P 2"), std::string::npos);
}

TEST(Runner, JsonPolynomialsRoundTrip) {
  auto out = run_text("genus chi_y blowup(P 3, P 1, 1)\nstrat hat S\n", OutputFormat::json);
  EXPECT_EQ(out.exit_code, kExitParse);  // S undefined
  out = run_text("genus chi_y blowup(P 3, P 1, 1)\nghrr P 2 O(2)\n", OutputFormat::json);
  ASSERT_EQ(out.exit_code, kExitOk);
  auto j = nlohmann::json::parse(out.output);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(genus_from_json(j["results"][0]["value"]["genus"]), parse_genus_polynomial("1 - 2*y + 2*y^2 - y^3"));
  auto ghrr_value = genus_from_json(j["results"][1]["value"]["genus"]);
  EXPECT_EQ(ghrr_value.coefficient(0), 6);
  EXPECT_EQ(j["exit_code"], 0);
}

TEST(Runner, JsonClassesListTerms) {
  auto out = run_text("class hirzebruch P 1\n", OutputFormat::json);
  ASSERT_EQ(out.exit_code, kExitOk);
  auto terms = nlohmann::json::parse(out.output)["results"][0]["value"]["class"]["terms"];
  // (1 + y) + (1 - y) h
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0]["basis"], "1");
  EXPECT_EQ(terms[2]["basis"], "h");
  EXPECT_EQ(terms[3]["coef"], "-1");
}

TEST(Runner, Deterministic) {
  const char* src =
      "let Bl = var blowup(P 2, pt, 1)\ngenus chi_y Bl\nverify properties\n"
      "let S = strata { U: closure=chi_y_c(P 3) fiber=1 generic; l: closure=chi_y_c(P 1) fiber=chi_y_c(P 1) under U "
      "trivial-monodromy }\nstrat chi_c S\n";
  auto a = run_text(src, OutputFormat::json);
  auto b = run_text(src, OutputFormat::json);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(a.output, b.output);
  EXPECT_NE(a.output.find("hat_genera"), std::string::npos);
}

TEST(Runner, VerbFilter) {
  RunOptions opts;
  opts.verbs = std::set<std::string>{"ghrr"};
  auto out = run_source("genus chi_y P 1\nghrr P 1\nassert ghrr P 1 == 1 - y\n", opts);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.output.find("genus"), std::string::npos);
  EXPECT_NE(out.output.find("> ghrr P 1"), std::string::npos);
  EXPECT_NE(out.output.find("> assert ghrr"), std::string::npos);
}

TEST(Runner, RingElementsAndCustomRings) {
  auto out = run_text(
      "let Hz = ring projbundle base=(P 1) bundle=[rank 2; c1=1*h]\n"
      "assert ghrr Hz == 1 - 2*y + y^2\n"
      "let C = ring custom { basis e:1, f:1, p:2; e*f = p; f*e = p; e*e = 0; f*f = 0; top p }\n"
      "higher C e*f tangent=trivial 2\n"
      "class show K\n");
  EXPECT_EQ(out.exit_code, kExitParse);  // K is undefined
  out = run_text(
      "let C = ring custom { basis e:1, f:1, p:2; e*f = p; f*e = p; e*e = 0; f*f = 0; top p }\n"
      "higher C e*f tangent=trivial 2\n"
      "higher C q tangent=trivial 2\n");
  EXPECT_EQ(out.exit_code, kExitValidation);
  EXPECT_NE(out.output.find("> higher C e*f tangent=trivial 2\n  1 + 2*y + y^2\n"), std::string::npos);
  EXPECT_NE(out.output.find("'q' is not a generator"), std::string::npos);
}
