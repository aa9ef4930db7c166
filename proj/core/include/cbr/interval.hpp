#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbr/rational.hpp"

namespace cbr {

using Var = std::string;

/// Integer extended with -inf/+inf, used for interval endpoints.
class ExtInt {
 public:
  ExtInt() : kind_(Kind::Finite), value_(0) {}
  ExtInt(Int v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
  ExtInt(long long v) : kind_(Kind::Finite), value_(v) {}       // NOLINT
  ExtInt(int v) : kind_(Kind::Finite), value_(v) {}             // NOLINT

  static ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  /// Throws std::logic_error when not finite.
  const Int& value() const;

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend bool operator<(const ExtInt& a, const ExtInt& b);
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

  /// Saturating addition; inf + (-inf) is a programming error and throws.
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator*(const ExtInt& a, const ExtInt& b);
  ExtInt operator-() const;

  std::string str() const;

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtInt(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Int value_;
};

ExtInt min(const ExtInt& a, const ExtInt& b);
ExtInt max(const ExtInt& a, const ExtInt& b);

/// Closed integer interval [lo, hi]; lo > hi denotes the empty interval
/// (kept canonically as [1, 0]).
class IntInterval {
 public:
  IntInterval() : lo_(ExtInt::neg_inf()), hi_(ExtInt::pos_inf()) {}
  IntInterval(ExtInt lo, ExtInt hi);

  static IntInterval empty();
  static IntInterval singleton(Int v) { return {ExtInt(v), ExtInt(v)}; }
  static IntInterval universe() { return {}; }

  const ExtInt& lo() const { return lo_; }
  const ExtInt& hi() const { return hi_; }

  bool is_empty() const;
  bool is_singleton() const { return lo_.is_finite() && lo_ == hi_; }
  bool is_finite() const { return is_empty() || (lo_.is_finite() && hi_.is_finite()); }
  bool contains(const Int& v) const;

  /// Number of integers in the interval; nullopt when infinite.
  std::optional<Int> width() const;

  IntInterval meet(const IntInterval& o) const;
  IntInterval join(const IntInterval& o) const;
  bool includes(const IntInterval& o) const;

  friend bool operator==(const IntInterval& a, const IntInterval& b) = default;

  std::string str() const;

 private:
  ExtInt lo_, hi_;
};

/// Per-variable map of intervals: the abstract element of the bound domain
/// and the box the polyhedral filter rounds into. Any empty component makes
/// the whole box canonically empty (every component is emptied).
class IntervalBox {
 public:
  IntervalBox() = default;

  static IntervalBox over(const std::vector<Var>& vars);

  bool has(const Var& v) const { return ivals_.count(v) != 0; }
  /// Unknown variables are implicitly unconstrained.
  IntInterval get(const Var& v) const;
  void set(const Var& v, IntInterval ival);

  const std::map<Var, IntInterval>& intervals() const { return ivals_; }
  std::vector<Var> vars() const;

  bool is_empty() const { return empty_; }

  /// Componentwise intersection over the union of tracked variables.
  IntervalBox meet(const IntervalBox& o) const;
  /// Componentwise interval hull.
  IntervalBox join(const IntervalBox& o) const;
  bool includes(const IntervalBox& o) const;

  /// Product of component widths; nullopt when some component is infinite.
  std::optional<Int> volume() const;

  friend bool operator==(const IntervalBox& a, const IntervalBox& b) = default;

  std::string str() const;

 private:
  void collapse_to_empty();

  std::map<Var, IntInterval> ivals_;
  bool empty_ = false;
};

/// The bound-domain element is exactly a box of intervals.
using BoundElement = IntervalBox;

}  // namespace cbr
