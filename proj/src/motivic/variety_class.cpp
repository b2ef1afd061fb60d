#include "hodge/motivic/variety_class.hpp"

#include "hodge/error.hpp"
#include "hodge/hodgestruct/mixed_hodge.hpp"

#include <algorithm>

namespace hodge {

struct VarietyClass::Node {
  Kind kind = Kind::atom;
  std::string name;  // atoms: name; proj_space: "P<n>"
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  EPolynomial e;
  int dim = 0;
  bool smooth = false;
  bool complete = false;
};

namespace {


EPolynomial proj_space_e(int n) {
  EPolynomial e;
  for (int k = 0; k <= n; ++k) e += EPolynomial::monomial(1, k, k);
  return e;
}

}  // namespace

VarietyClass::VarietyClass(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

VarietyClass::VarietyClass() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->name = "0";
  n->smooth = true;
  n->complete = true;
  node_ = std::move(n);
}

VarietyClass VarietyClass::point() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::point;
  n->name = "pt";
  n->e = EPolynomial(1);
  n->smooth = true;
  n->complete = true;
  return VarietyClass(std::move(n));
}

VarietyClass VarietyClass::affine_line() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::affine_line;
  n->name = "L";
  n->e = EPolynomial::uv();
  n->dim = 1;
  n->smooth = true;
  return VarietyClass(std::move(n));
}

VarietyClass VarietyClass::proj_space(int dim) {
  if (dim < 0) throw ValidationError("projective space of negative dimension");
  auto n = std::make_shared<Node>();
  n->kind = Kind::proj_space;
  n->name = "P" + std::to_string(dim);
  n->e = proj_space_e(dim);
  n->dim = dim;
  n->smooth = true;
  n->complete = true;
  return VarietyClass(std::move(n));
}

VarietyClass VarietyClass::torus() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::torus;
  n->name = "Gm";
  n->e = EPolynomial::uv() - EPolynomial(1);
  n->dim = 1;
  n->smooth = true;
  return VarietyClass(std::move(n));
}

VarietyClass VarietyClass::atom(AtomSpec spec) {
  if (spec.dim < 0) throw ValidationError("atom '" + spec.name + "' has negative dimension");
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->name = std::move(spec.name);
  n->e = std::move(spec.e);
  n->dim = spec.dim;
  n->smooth = spec.smooth;
  n->complete = spec.complete;
  return VarietyClass(std::move(n));
}

VarietyClass VarietyClass::as_atom(std::string name, const VarietyClass& of, int dim, bool smooth, bool complete) {
  return atom(AtomSpec{std::move(name), of.e_polynomial(), dim, smooth, complete});
}

VarietyClass operator+(const VarietyClass& a, const VarietyClass& b) {
  auto n = std::make_shared<VarietyClass::Node>();
  n->kind = VarietyClass::Kind::sum;
  n->lhs = a.node_;
  n->rhs = b.node_;
  n->e = a.node_->e + b.node_->e;
  n->dim = std::max(a.node_->dim, b.node_->dim);
  // A disjoint union is smooth of pure dimension only if both parts are.
  n->smooth = a.node_->smooth && b.node_->smooth && a.node_->dim == b.node_->dim;
  n->complete = a.node_->complete && b.node_->complete;
  return VarietyClass(std::move(n));
}

VarietyClass operator-(const VarietyClass& a, const VarietyClass& b) {
  auto n = std::make_shared<VarietyClass::Node>();
  n->kind = VarietyClass::Kind::diff;
  n->lhs = a.node_;
  n->rhs = b.node_;
  n->e = a.node_->e - b.node_->e;
  n->dim = std::max(a.node_->dim, b.node_->dim);
  return VarietyClass(std::move(n));
}

VarietyClass operator*(const VarietyClass& a, const VarietyClass& b) {
  auto n = std::make_shared<VarietyClass::Node>();
  n->kind = VarietyClass::Kind::prod;
  n->lhs = a.node_;
  n->rhs = b.node_;
  n->e = a.node_->e * b.node_->e;
  n->dim = a.node_->dim + b.node_->dim;
  n->smooth = a.node_->smooth && b.node_->smooth;
  n->complete = a.node_->complete && b.node_->complete;
  return VarietyClass(std::move(n));
}

VarietyClass VarietyClass::pow(unsigned k) const {
  if (k == 0) return point();
  VarietyClass r = *this;
  for (unsigned i = 1; i < k; ++i) r = r * *this;
  return r;
}

VarietyClass::Kind VarietyClass::kind() const { return node_->kind; }
const EPolynomial& VarietyClass::e_polynomial() const { return node_->e; }
int VarietyClass::dim() const { return node_->dim; }
bool VarietyClass::smooth() const { return node_->smooth; }
bool VarietyClass::complete() const { return node_->complete; }

std::string VarietyClass::to_string() const {
  const Node& n = *node_;
  auto wrap = [](const VarietyClass& c) {
    auto k = c.kind();
    if (k == Kind::sum || k == Kind::diff) return "(" + c.to_string() + ")";
    return c.to_string();
  };
  switch (n.kind) {
    case Kind::sum:
      return VarietyClass(n.lhs).to_string() + " + " + VarietyClass(n.rhs).to_string();
    case Kind::diff:
      return VarietyClass(n.lhs).to_string() + " - " + wrap(VarietyClass(n.rhs));
    case Kind::prod:
      return wrap(VarietyClass(n.lhs)) + "*" + wrap(VarietyClass(n.rhs));
    case Kind::atom:
      return n.name == "0" ? n.name : "\"" + n.name + "\"";
    default:
      return n.name;
  }
}

GenusPolynomial chi_y_c(const VarietyClass& x) { return specialize_e(x.e_polynomial(), ESpecialization::chi_y); }

GenusPolynomial chi_y(const VarietyClass& x) {
  if (x.complete()) return chi_y_c(x);
  if (x.smooth()) return poincare_dual(chi_y_c(x), x.dim());
  throw ValidationError("chi_y of " + x.to_string() +
                        " is not determined by its E-polynomial: the class is neither complete nor smooth "
                        "of pure dimension");
}

VarietyClass blowup_class(const VarietyClass& x, const VarietyClass& y, int r) {
  if (r < 0) throw ValidationError("blow-up needs r = codim - 1 >= 0, got " + std::to_string(r));
  if (!x.smooth() || !y.smooth()) throw ValidationError("blow-up formula needs a smooth variety and a smooth center");
  VarietyClass realized = x + y * (VarietyClass::proj_space(r) - VarietyClass::point());
  return VarietyClass::as_atom("Bl(" + x.to_string() + "; " + y.to_string() + "; r=" + std::to_string(r) + ")",
                               realized, x.dim(), true, x.complete());
}

GenusPair product_genus_check(const VarietyClass& base, const VarietyClass& fiber) {
  return {chi_y_c(base * fiber), chi_y_c(base) * chi_y_c(fiber)};
}

GenusPair multiplicativity_check(const GenusPolynomial& total, const GenusPolynomial& base,
                                 const GenusPolynomial& fiber) {
  return {total, base * fiber};
}

}  // namespace hodge
