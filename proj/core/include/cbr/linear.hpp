#pragma once

#include <map>
#include <string>
#include <vector>

#include "cbr/rational.hpp"

namespace cbr {

using Var = std::string;

/// Affine expression c0 + sum(ci * xi) with exact rational coefficients.
/// Canonical form: no variable maps to a zero coefficient.
class LinearExpression {
 public:
  LinearExpression() = default;
  explicit LinearExpression(Rational constant) : constant_(std::move(constant)) {}

  static LinearExpression variable(const Var& v, Rational coeff = Rational(1));

  const std::map<Var, Rational>& coefficients() const { return coeffs_; }
  const Rational& constant() const { return constant_; }
  Rational coefficient(const Var& v) const;

  bool is_constant() const { return coeffs_.empty(); }

  void set_coefficient(const Var& v, Rational c);
  void add_term(const Var& v, const Rational& c);
  void add_constant(const Rational& c) { constant_ += c; }

  LinearExpression& operator+=(const LinearExpression& o);
  LinearExpression& operator-=(const LinearExpression& o);
  LinearExpression& operator*=(const Rational& k);

  friend LinearExpression operator+(LinearExpression a, const LinearExpression& b) { return a += b; }
  friend LinearExpression operator-(LinearExpression a, const LinearExpression& b) { return a -= b; }
  friend LinearExpression operator*(LinearExpression a, const Rational& k) { return a *= k; }
  LinearExpression operator-() const;

  friend bool operator==(const LinearExpression& a, const LinearExpression& b) = default;

  /// Exact value under a total assignment; throws std::out_of_range when a
  /// variable of the expression is unbound.
  Rational evaluate(const std::map<Var, Rational>& assignment) const;

  /// Replaces v by the given expression (used by Gaussian elimination).
  LinearExpression substituted(const Var& v, const LinearExpression& replacement) const;

  std::vector<Var> vars() const;

  std::string str() const;

 private:
  std::map<Var, Rational> coeffs_;
  Rational constant_;
};

enum class LinRel { GeqZero, EqZero };

/// expr >= 0 or expr == 0. Strict inequalities are not representable here;
/// integer constraints are rewritten (x > y becomes x >= y+1) before they
/// reach this layer.
class LinearConstraint {
 public:
  LinearConstraint() : rel_(LinRel::GeqZero) {}
  LinearConstraint(LinearExpression expr, LinRel rel);

  const LinearExpression& expr() const { return expr_; }
  LinRel rel() const { return rel_; }

  bool is_equality() const { return rel_ == LinRel::EqZero; }

  /// True when the constraint has no variables and its constant satisfies
  /// (resp. violates) the relation.
  bool is_tautology() const;
  bool is_contradiction() const;

  bool satisfied_by(const std::map<Var, Rational>& assignment) const;

  /// Rendered "c0 + c1*x1 + ... >= 0" with integer, gcd-reduced coefficients.
  std::string str() const;

  friend bool operator==(const LinearConstraint& a, const LinearConstraint& b) = default;
  friend bool operator<(const LinearConstraint& a, const LinearConstraint& b);

 private:
  // Scales coefficients to coprime integers; for equalities flips the sign
  // so the leading nonzero coefficient is positive.
  void canonicalize();

  LinearExpression expr_;
  LinRel rel_;
};

std::ostream& operator<<(std::ostream& os, const LinearConstraint& c);

}  // namespace cbr
