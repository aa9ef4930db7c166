#include "cbr/constraint.hpp"

#include <sstream>
#include <stdexcept>

namespace cbr {

struct Expr::Node {
  Kind kind = Kind::Constant;
  Int value;  // Constant
  Var var;    // Variable
  Expr lhs, rhs;

  Node() = default;
  Node(Kind k, Expr a, Expr b) : kind(k), lhs(std::move(a)), rhs(std::move(b)) {}
};

Expr Expr::constant(Int v) {
  auto n = std::make_shared<Node>();
  n->value = std::move(v);
  return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->var = std::move(v);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_ ? node_->kind : Kind::Constant; }

const Int& Expr::value() const {
  if (kind() != Kind::Constant) throw std::logic_error("Expr: not a constant");
  static const Int zero = 0;
  return node_ ? node_->value : zero;
}

const Var& Expr::var() const {
  if (kind() != Kind::Variable) throw std::logic_error("Expr: not a variable");
  return node_->var;
}

const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Kind::Add, a, b));
}
Expr operator-(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Kind::Sub, a, b));
}
Expr operator*(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Kind::Mul, a, b));
}
Expr Expr::operator-() const { return constant(0) - *this; }

Int Expr::evaluate(const Valuation& v) const {
  switch (kind()) {
    case Kind::Constant:
      return value();
    case Kind::Variable: {
      auto it = v.find(var());
      if (it == v.end()) throw std::out_of_range("Expr::evaluate: unbound variable " + var());
      return it->second;
    }
    case Kind::Add:
      return lhs().evaluate(v) + rhs().evaluate(v);
    case Kind::Sub:
      return lhs().evaluate(v) - rhs().evaluate(v);
    case Kind::Mul:
      return lhs().evaluate(v) * rhs().evaluate(v);
  }
  throw std::logic_error("Expr::evaluate: bad kind");
}

void Expr::collect_vars(std::set<Var>& out) const {
  switch (kind()) {
    case Kind::Constant:
      return;
    case Kind::Variable:
      out.insert(var());
      return;
    default:
      lhs().collect_vars(out);
      rhs().collect_vars(out);
  }
}

std::set<Var> Expr::vars() const {
  std::set<Var> out;
  collect_vars(out);
  return out;
}

std::optional<LinearExpression> Expr::to_linear() const {
  switch (kind()) {
    case Kind::Constant:
      return LinearExpression(Rational(value()));
    case Kind::Variable:
      return LinearExpression::variable(var());
    case Kind::Add: {
      auto a = lhs().to_linear();
      auto b = rhs().to_linear();
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case Kind::Sub: {
      auto a = lhs().to_linear();
      auto b = rhs().to_linear();
      if (!a || !b) return std::nullopt;
      return *a - *b;
    }
    case Kind::Mul: {
      auto a = lhs().to_linear();
      auto b = rhs().to_linear();
      if (!a || !b) return std::nullopt;
      if (a->is_constant()) return *b * a->constant();
      if (b->is_constant()) return *a * b->constant();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Expr Expr::renamed(const std::map<Var, Var>& renaming) const {
  switch (kind()) {
    case Kind::Constant:
      return *this;
    case Kind::Variable: {
      auto it = renaming.find(var());
      return it == renaming.end() ? *this : variable(it->second);
    }
    case Kind::Add:
      return lhs().renamed(renaming) + rhs().renamed(renaming);
    case Kind::Sub:
      return lhs().renamed(renaming) - rhs().renamed(renaming);
    case Kind::Mul:
      return lhs().renamed(renaming) * rhs().renamed(renaming);
  }
  throw std::logic_error("Expr::renamed: bad kind");
}

std::string Expr::sexpr() const {
  switch (kind()) {
    case Kind::Constant:
      return value().str();
    case Kind::Variable:
      return var();
    case Kind::Add:
      return "(+ " + lhs().sexpr() + " " + rhs().sexpr() + ")";
    case Kind::Sub:
      return "(- " + lhs().sexpr() + " " + rhs().sexpr() + ")";
    case Kind::Mul:
      return "(* " + lhs().sexpr() + " " + rhs().sexpr() + ")";
  }
  return "?";
}

Rel negate(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Gt: return Rel::Le;
    case Rel::Ge: return Rel::Lt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
  }
  throw std::logic_error("negate: bad relation");
}

std::string rel_symbol(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
  }
  return "?";
}

std::set<Var> Constraint::vars() const {
  std::set<Var> out;
  lhs_.collect_vars(out);
  rhs_.collect_vars(out);
  return out;
}

bool Constraint::eval(const Valuation& v) const {
  Int a = lhs_.evaluate(v);
  Int b = rhs_.evaluate(v);
  switch (rel_) {
    case Rel::Lt: return a < b;
    case Rel::Le: return a <= b;
    case Rel::Gt: return a > b;
    case Rel::Ge: return a >= b;
    case Rel::Eq: return a == b;
    case Rel::Ne: return a != b;
  }
  throw std::logic_error("Constraint::eval: bad relation");
}

Constraint Constraint::renamed(const std::map<Var, Var>& renaming) const {
  return {lhs_.renamed(renaming), rel_, rhs_.renamed(renaming)};
}

std::optional<LinearExpression> Constraint::linear_difference() const {
  auto a = lhs_.to_linear();
  auto b = rhs_.to_linear();
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

std::string Constraint::sexpr() const {
  return "(" + rel_symbol(rel_) + " " + lhs_.sexpr() + " " + rhs_.sexpr() + ")";
}

std::optional<LinearConstraint> linearize_relation(const LinearExpression& diff, Rel rel) {
  switch (rel) {
    case Rel::Ge:
      return LinearConstraint(diff, LinRel::GeqZero);
    case Rel::Gt: {
      LinearExpression e = diff;
      e.add_constant(Rational(-1));
      return LinearConstraint(std::move(e), LinRel::GeqZero);
    }
    case Rel::Le:
      return LinearConstraint(-diff, LinRel::GeqZero);
    case Rel::Lt: {
      LinearExpression e = -diff;
      e.add_constant(Rational(-1));
      return LinearConstraint(std::move(e), LinRel::GeqZero);
    }
    case Rel::Eq:
      return LinearConstraint(diff, LinRel::EqZero);
    case Rel::Ne:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace cbr
