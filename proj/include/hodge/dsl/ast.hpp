#pragma once

#include "hodge/dsl/lexer.hpp"
#include "hodge/hodgestruct/mixed_hodge.hpp"
#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hodge::dsl {

// ----- expressions ---------------------------------------------------------

struct VExpr;
using VExprPtr = std::shared_ptr<const VExpr>;

/// Grothendieck-ring expression.
struct VExpr {
  enum class Kind { integer, point, affine_line, torus, proj, ref, atom, add, sub, mul, pow, blowup };
  Kind kind = Kind::point;
  Loc loc;
  long n = 0;              // integer value, projective dimension, exponent, or blow-up r
  std::string name;        // ref name or atom name
  std::optional<EPolynomial> epoly;  // atom given by its E-polynomial
  VExprPtr a, b;           // operands; for atoms given by `of`, a is the source
  std::optional<int> dim;  // atom flags
  bool smooth = false;
  bool complete = false;
};

struct RExpr;
using RExprPtr = std::shared_ptr<const RExpr>;

/// Ring-element expression: a polynomial in generator names.
struct RExpr {
  enum class Kind { number, name, add, sub, mul, neg, pow };
  Kind kind = Kind::number;
  Loc loc;
  Rational value;
  std::string name;
  long exponent = 0;
  RExprPtr a, b;
};

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

struct ChernList {
  long rank = 0;
  std::vector<std::pair<long, RExprPtr>> classes;  // (i, c_i)
};

struct CustomRingLit {
  std::vector<std::pair<std::string, long>> basis;
  std::vector<std::tuple<std::string, std::string, RExprPtr, Loc>> products;
  std::string top;
};

struct RingExpr {
  enum class Kind { point, proj, product, proj_bundle, custom, ref };
  Kind kind = Kind::point;
  Loc loc;
  long n = 0;
  std::string name;
  std::vector<RingExprPtr> factors;  // product factors, or the base of a projective bundle
  ChernList bundle;
  CustomRingLit custom;
};

struct BExpr;
using BExprPtr = std::shared_ptr<const BExpr>;

/// Vector bundle expression over a ring known from context.
struct BExpr {
  enum class Kind { o, trivial, tangent, cotangent, line, explicit_chern, dual, sum, ref };
  Kind kind = Kind::o;
  Loc loc;
  std::vector<long> degrees;  // O(d, ...)
  long rank = 0;
  RExprPtr c1;
  ChernList chern;
  BExprPtr a, b;
  std::string name;
};

/// A MHS table, either literal or a reference.
struct MhsSrc {
  Loc loc;
  std::optional<std::string> ref;
  std::vector<std::pair<HodgeIndex, Integer>> entries;
};

/// Something that evaluates to a genus polynomial.
struct GExpr {
  enum class Kind { literal, chi_y_c, chi_y, chi_y_mhs, ref };
  Kind kind = Kind::literal;
  Loc loc;
  GenusPolynomial literal;
  VExprPtr variety;
  MhsSrc mhs;
  std::string name;
};

// ----- bindings ------------------------------------------------------------

enum class ValueKind { variety, mhs, poly, strata, stalks, fibration, ring, bundle, hodgecoll, cls };

std::string describe(ValueKind kind);

struct StratumLit {
  Loc loc;
  std::string id;
  GExpr genus;
  bool genus_is_closure = true;
  GExpr fiber;
  bool generic = false;
  std::vector<std::pair<std::string, Loc>> under;
  bool trivial_monodromy = false;
};

struct StrataLit {
  bool projective = false;
  std::vector<StratumLit> strata;
};

struct StalkLit {
  Loc loc;
  std::string id;
  GExpr open;
  MhsSrc stalk;
};

struct StalksLit {
  std::vector<StalkLit> strata;
};

struct MilnorLit {
  std::string id;
  GExpr open;
  MhsSrc milnor;
};

struct CriticalLit {
  enum class Kind { vanishing, isolated, stratified };
  Kind kind = Kind::vanishing;
  Loc loc;
  std::string label;
  MhsSrc table;
  long sing_dim = 0;
  std::vector<MhsSrc> points;
  std::vector<MilnorLit> strata;
};

struct FibrationLit {
  GExpr base;
  GExpr fiber;
  long dim = 1;
  bool trivial_monodromy = false;
  std::vector<CriticalLit> critical;
};

struct BundleLit {
  BExprPtr bundle;
  RingExprPtr ring;
};

struct HodgeCollLit {
  RingExprPtr ring;
  bool by_filtration = false;
  std::vector<std::tuple<int, int, BExprPtr, Loc>> entries;
};

struct ClassLit {
  RExprPtr element;
  RingExprPtr ring;
};

using BindingValue = std::variant<VExprPtr, MhsSrc, GExpr, StrataLit, StalksLit, FibrationLit, RingExprPtr, BundleLit,
                                  HodgeCollLit, ClassLit>;

struct Binding {
  Loc loc;
  std::string name;
  ValueKind kind = ValueKind::variety;
  BindingValue value;
};

// ----- queries -------------------------------------------------------------

struct GenusQuery {
  enum class Mode { chi_y_c, chi_y, weight, euler, dual, poly };
  Mode mode = Mode::chi_y_c;
  VExprPtr variety;             // chi_y_c / chi_y / weight / euler of a class
  std::optional<MhsSrc> mhs;    // chi_y of a table
  std::optional<GExpr> source;  // dual / poly
  long n = 0;
  std::optional<GenusSpecialization> at;
};

struct EpolyQuery {
  VExprPtr variety;
  std::optional<MhsSrc> mhs;
};

struct CheckQuery {
  enum class Mode { product, multiplicative };
  Mode mode = Mode::product;
  VExprPtr base, fiber;
  std::optional<GExpr> total, gbase, gfiber;
};

struct StratQuery {
  enum class Mode { chi_c, chi, hat, stalk };
  Mode mode = Mode::chi_c;
  std::string name;
};

struct RhQuery {
  std::string name;
  bool epoly = false;
};

struct SupportQuery {
  MhsSrc table;
  long n = 0;
  long s = 0;
};

struct CharQuery {
  enum class Mode {
    ghrr,
    meyer,
    am,
    higher,
    log,
    class_hirzebruch,
    class_todd,
    class_lambda,
    class_ch,
    class_meyer,
    class_atiyah,
    class_push,
    class_value,
  };
  Mode mode = Mode::ghrr;
  RingExprPtr ring;
  RingExprPtr target;  // pushforward destination
  BExprPtr bundle;     // ghrr twist, class argument, log Omega^1(log D)
  BExprPtr tangent;
  std::vector<BExprPtr> forms;
  std::optional<std::string> coll;
  std::optional<std::string> ext;
  RExprPtr element;
  std::optional<std::string> class_ref;
  bool normalized = false;
};

struct VerifyQuery {
  std::string suite;
};

struct Query;
using QueryPtr = std::shared_ptr<const Query>;

struct AssertQuery {
  QueryPtr inner;
  bool equal = true;
  std::optional<GenusPolynomial> genus;
  std::optional<bool> truth;
};

using QueryBody = std::variant<GenusQuery, EpolyQuery, CheckQuery, StratQuery, RhQuery, SupportQuery, CharQuery,
                               VerifyQuery, AssertQuery>;

struct Query {
  Loc loc;
  std::string verb;  // genus, epoly, check, strat, rh, support, ghrr, meyer, am, higher, log, class, verify, assert
  std::string text;  // the source line, for echoing
  QueryBody body;
};

using Statement = std::variant<Binding, Query>;

struct Script {
  std::vector<Statement> statements;
};

}  // namespace hodge::dsl
