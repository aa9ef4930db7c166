#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "cbr/linear.hpp"

namespace cbr {

/// Total assignment of integer values to variables.
using Valuation = std::map<Var, Int>;

/// Immutable arithmetic expression over integer variables with +, -, *.
class Expr {
 public:
  enum class Kind { Constant, Variable, Add, Sub, Mul };

  /// Default-constructed expressions read as the constant 0.
  Expr() = default;

  static Expr constant(Int v);
  static Expr variable(Var v);

  Kind kind() const;
  const Int& value() const;     // Constant only
  const Var& var() const;       // Variable only
  const Expr& lhs() const;      // binary nodes
  const Expr& rhs() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr operator-() const;

  /// Exact integer value; throws std::out_of_range on an unbound variable.
  Int evaluate(const Valuation& v) const;

  void collect_vars(std::set<Var>& out) const;
  std::set<Var> vars() const;

  /// Affine view of the expression, when it has one (constants fold;
  /// products with a constant side scale). nullopt for genuinely
  /// nonlinear shapes.
  std::optional<LinearExpression> to_linear() const;

  /// Variable-for-variable renaming.
  Expr renamed(const std::map<Var, Var>& renaming) const;

  std::string sexpr() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class Rel { Lt, Le, Gt, Ge, Eq, Ne };

Rel negate(Rel r);
std::string rel_symbol(Rel r);

/// Elementary constraint: lhs REL rhs over integer variables.
class Constraint {
 public:
  Constraint() : rel_(Rel::Eq) {}
  Constraint(Expr lhs, Rel rel, Expr rhs)
      : lhs_(std::move(lhs)), rel_(rel), rhs_(std::move(rhs)) {}

  const Expr& lhs() const { return lhs_; }
  const Expr& rhs() const { return rhs_; }
  Rel rel() const { return rel_; }

  std::set<Var> vars() const;

  /// Truth under a valuation total on vars(); exact integer arithmetic.
  bool eval(const Valuation& v) const;

  Constraint negated() const { return {lhs_, negate(rel_), rhs_}; }
  Constraint renamed(const std::map<Var, Var>& renaming) const;

  /// lhs - rhs as an affine expression, when linear.
  std::optional<LinearExpression> linear_difference() const;

  std::string sexpr() const;

 private:
  Expr lhs_;
  Rel rel_;
  Expr rhs_;
};

/// Rewrites an integer relation over an affine difference into the
/// closed >=0 / =0 form (x > y becomes x - y - 1 >= 0). Disequalities
/// have no single-constraint encoding: nullopt.
std::optional<LinearConstraint> linearize_relation(const LinearExpression& diff, Rel rel);

// Small builders; test and frontend code reads better with them.
inline Expr cvar(const Var& v) { return Expr::variable(v); }
inline Expr cint(long long v) { return Expr::constant(Int(v)); }
inline Constraint lt(Expr a, Expr b) { return {std::move(a), Rel::Lt, std::move(b)}; }
inline Constraint le(Expr a, Expr b) { return {std::move(a), Rel::Le, std::move(b)}; }
inline Constraint gt(Expr a, Expr b) { return {std::move(a), Rel::Gt, std::move(b)}; }
inline Constraint ge(Expr a, Expr b) { return {std::move(a), Rel::Ge, std::move(b)}; }
inline Constraint eq(Expr a, Expr b) { return {std::move(a), Rel::Eq, std::move(b)}; }
inline Constraint ne(Expr a, Expr b) { return {std::move(a), Rel::Ne, std::move(b)}; }

}  // namespace cbr
