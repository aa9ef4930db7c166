#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cbr {

/// Arbitrary-precision integer used throughout the solver. Machine-width
/// integers overflow on modest simplex instances, so everything that can
/// grow goes through this type.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number kept in canonical form: denominator > 0 and
/// gcd(|num|, den) == 1. Equality is structural on the canonical form.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT
  Rational(int n) : num_(n), den_(1) {}             // NOLINT
  Rational(Int n, Int d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational reciprocal() const;

  /// Largest integer <= *this.
  Int floor() const;
  /// Smallest integer >= *this.
  Int ceil() const;

  /// Renders "p/q", with "/q" omitted when q == 1.
  std::string str() const;

 private:
  void normalize();

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (floor(a), ceil(a)) as a pair; both within distance < 1 of a.
std::pair<Int, Int> floor_ceil(const Rational& a);

}  // namespace cbr
