#include "cbr/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cbr {

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

Int Rational::floor() const {
  if (den_ == 1) return num_;
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

Int Rational::ceil() const {
  if (den_ == 1) return num_;
  if (num_ >= 0) return (num_ + den_ - 1) / den_;
  return -((-num_) / den_);
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

std::pair<Int, Int> floor_ceil(const Rational& a) {
  return {a.floor(), a.ceil()};
}

}  // namespace cbr
