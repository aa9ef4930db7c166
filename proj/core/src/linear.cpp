#include "cbr/linear.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cbr {

LinearExpression LinearExpression::variable(const Var& v, Rational coeff) {
  LinearExpression e;
  e.set_coefficient(v, std::move(coeff));
  return e;
}

Rational LinearExpression::coefficient(const Var& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinearExpression::set_coefficient(const Var& v, Rational c) {
  if (c.is_zero()) {
    coeffs_.erase(v);
  } else {
    coeffs_[v] = std::move(c);
  }
}

void LinearExpression::add_term(const Var& v, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LinearExpression& LinearExpression::operator+=(const LinearExpression& o) {
  for (const auto& [v, c] : o.coeffs_) add_term(v, c);
  constant_ += o.constant_;
  return *this;
}

LinearExpression& LinearExpression::operator-=(const LinearExpression& o) {
  for (const auto& [v, c] : o.coeffs_) add_term(v, -c);
  constant_ -= o.constant_;
  return *this;
}

LinearExpression& LinearExpression::operator*=(const Rational& k) {
  if (k.is_zero()) {
    coeffs_.clear();
    constant_ = Rational(0);
    return *this;
  }
  for (auto& [v, c] : coeffs_) c *= k;
  constant_ *= k;
  return *this;
}

LinearExpression LinearExpression::operator-() const {
  LinearExpression e = *this;
  e *= Rational(-1);
  return e;
}

Rational LinearExpression::evaluate(const std::map<Var, Rational>& assignment) const {
  Rational acc = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw std::out_of_range("LinearExpression::evaluate: unbound variable " + v);
    acc += c * it->second;
  }
  return acc;
}

LinearExpression LinearExpression::substituted(const Var& v, const LinearExpression& replacement) const {
  auto it = coeffs_.find(v);
  if (it == coeffs_.end()) return *this;
  Rational k = it->second;
  LinearExpression e = *this;
  e.coeffs_.erase(v);
  LinearExpression scaled = replacement;
  scaled *= k;
  e += scaled;
  return e;
}

std::vector<Var> LinearExpression::vars() const {
  std::vector<Var> out;
  out.reserve(coeffs_.size());
  for (const auto& [v, c] : coeffs_) out.push_back(v);
  return out;
}

std::string LinearExpression::str() const {
  std::ostringstream os;
  os << constant_.str();
  for (const auto& [v, c] : coeffs_) {
    if (c.sign() < 0) {
      os << " - " << (-c).str();
    } else {
      os << " + " << c.str();
    }
    os << '*' << v;
  }
  return os.str();
}

LinearConstraint::LinearConstraint(LinearExpression expr, LinRel rel)
    : expr_(std::move(expr)), rel_(rel) {
  canonicalize();
}

void LinearConstraint::canonicalize() {
  // Common denominator, then divide by the gcd of all numerators.
  Int lcm = 1;
  auto fold = [&lcm](const Rational& r) {
    lcm = boost::multiprecision::lcm(lcm, r.den());
  };
  fold(expr_.constant());
  for (const auto& [v, c] : expr_.coefficients()) fold(c);
  expr_ *= Rational(lcm);

  Int g = boost::multiprecision::abs(expr_.constant().num());
  for (const auto& [v, c] : expr_.coefficients())
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.num()));
  if (g > 1) expr_ *= Rational(Int(1), g);

  if (rel_ == LinRel::EqZero && !expr_.coefficients().empty() &&
      expr_.coefficients().begin()->second.sign() < 0) {
    expr_ *= Rational(-1);
  }
}

bool LinearConstraint::is_tautology() const {
  if (!expr_.is_constant()) return false;
  return rel_ == LinRel::EqZero ? expr_.constant().is_zero()
                                : expr_.constant().sign() >= 0;
}

bool LinearConstraint::is_contradiction() const {
  if (!expr_.is_constant()) return false;
  return rel_ == LinRel::EqZero ? !expr_.constant().is_zero()
                                : expr_.constant().sign() < 0;
}

bool LinearConstraint::satisfied_by(const std::map<Var, Rational>& assignment) const {
  Rational v = expr_.evaluate(assignment);
  return rel_ == LinRel::EqZero ? v.is_zero() : v.sign() >= 0;
}

std::string LinearConstraint::str() const {
  return expr_.str() + (rel_ == LinRel::EqZero ? " = 0" : " >= 0");
}

bool operator<(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.rel_ != b.rel_) return a.rel_ < b.rel_;
  if (a.expr_.constant() != b.expr_.constant())
    return a.expr_.constant() < b.expr_.constant();
  return a.expr_.coefficients() < b.expr_.coefficients();
}

std::ostream& operator<<(std::ostream& os, const LinearConstraint& c) {
  return os << c.str();
}

}  // namespace cbr
