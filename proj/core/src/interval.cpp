#include "cbr/interval.hpp"

#include <sstream>
#include <stdexcept>

namespace cbr {

const Int& ExtInt::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtInt: value() on infinity");
  return value_;
}

bool operator<(const ExtInt& a, const ExtInt& b) {
  if (a.kind_ == b.kind_)
    return a.kind_ == ExtInt::Kind::Finite && a.value_ < b.value_;
  if (a.kind_ == ExtInt::Kind::NegInf) return true;
  if (b.kind_ == ExtInt::Kind::NegInf) return false;
  return b.kind_ == ExtInt::Kind::PosInf;
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
  if (a.is_finite() && b.is_finite()) return ExtInt(a.value_ + b.value_);
  if (a.is_finite()) return b;
  if (b.is_finite()) return a;
  if (a.kind_ != b.kind_) throw std::logic_error("ExtInt: inf + -inf");
  return a;
}

ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

ExtInt operator*(const ExtInt& a, const ExtInt& b) {
  if (a.is_finite() && b.is_finite()) return ExtInt(a.value_ * b.value_);
  int sa = a.is_finite() ? a.value_.sign() : (a.is_pos_inf() ? 1 : -1);
  int sb = b.is_finite() ? b.value_.sign() : (b.is_pos_inf() ? 1 : -1);
  if (sa == 0 || sb == 0) return ExtInt(0);
  return sa * sb > 0 ? ExtInt::pos_inf() : ExtInt::neg_inf();
}

ExtInt ExtInt::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return ExtInt(-value_);
  }
}

std::string ExtInt::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return value_.str();
  }
}

ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

IntInterval::IntInterval(ExtInt lo, ExtInt hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) *this = empty();
}

IntInterval IntInterval::empty() {
  IntInterval i;
  i.lo_ = ExtInt(1);
  i.hi_ = ExtInt(0);
  return i;
}

bool IntInterval::is_empty() const { return hi_ < lo_; }

bool IntInterval::contains(const Int& v) const {
  ExtInt e(v);
  return lo_ <= e && e <= hi_;
}

std::optional<Int> IntInterval::width() const {
  if (is_empty()) return Int(0);
  if (!lo_.is_finite() || !hi_.is_finite()) return std::nullopt;
  return hi_.value() - lo_.value() + 1;
}

IntInterval IntInterval::meet(const IntInterval& o) const {
  return {max(lo_, o.lo_), min(hi_, o.hi_)};
}

IntInterval IntInterval::join(const IntInterval& o) const {
  if (is_empty()) return o;
  if (o.is_empty()) return *this;
  return {min(lo_, o.lo_), max(hi_, o.hi_)};
}

bool IntInterval::includes(const IntInterval& o) const {
  if (o.is_empty()) return true;
  if (is_empty()) return false;
  return lo_ <= o.lo_ && o.hi_ <= hi_;
}

std::string IntInterval::str() const {
  if (is_empty()) return "[]";
  return "[" + lo_.str() + ", " + hi_.str() + "]";
}

IntervalBox IntervalBox::over(const std::vector<Var>& vars) {
  IntervalBox b;
  for (const auto& v : vars) b.ivals_[v] = IntInterval::universe();
  return b;
}

IntInterval IntervalBox::get(const Var& v) const {
  if (empty_) return IntInterval::empty();
  auto it = ivals_.find(v);
  return it == ivals_.end() ? IntInterval::universe() : it->second;
}

void IntervalBox::set(const Var& v, IntInterval ival) {
  if (empty_) {
    ivals_[v] = IntInterval::empty();  // keep the tracked-variable set intact
    return;
  }
  if (ival.is_empty()) {
    ivals_[v] = IntInterval::empty();
    collapse_to_empty();
    return;
  }
  ivals_[v] = std::move(ival);
}

void IntervalBox::collapse_to_empty() {
  empty_ = true;
  for (auto& [v, i] : ivals_) i = IntInterval::empty();
}

std::vector<Var> IntervalBox::vars() const {
  std::vector<Var> out;
  out.reserve(ivals_.size());
  for (const auto& [v, i] : ivals_) out.push_back(v);
  return out;
}

IntervalBox IntervalBox::meet(const IntervalBox& o) const {
  IntervalBox r = *this;
  if (o.empty_) {
    for (const auto& [v, i] : o.ivals_) r.ivals_.emplace(v, IntInterval());
    r.collapse_to_empty();
    return r;
  }
  for (const auto& [v, i] : o.ivals_) {
    auto it = r.ivals_.find(v);
    if (it == r.ivals_.end()) {
      r.ivals_[v] = i;
    } else {
      it->second = it->second.meet(i);
    }
  }
  if (!r.empty_) {
    for (const auto& [v, i] : r.ivals_) {
      if (i.is_empty()) {
        r.collapse_to_empty();
        break;
      }
    }
  }
  return r;
}

IntervalBox IntervalBox::join(const IntervalBox& o) const {
  if (empty_) return o;
  if (o.empty_) return *this;
  IntervalBox r;
  // Variables missing on one side are unconstrained there.
  for (const auto& [v, i] : ivals_) r.ivals_[v] = i.join(o.get(v));
  for (const auto& [v, i] : o.ivals_) {
    if (!ivals_.count(v)) r.ivals_[v] = IntInterval::universe();
  }
  return r;
}

bool IntervalBox::includes(const IntervalBox& o) const {
  if (o.empty_) return true;
  if (empty_) return false;
  for (const auto& [v, i] : ivals_) {
    if (!i.includes(o.get(v))) return false;
  }
  return true;
}

std::optional<Int> IntervalBox::volume() const {
  if (empty_) return Int(0);
  Int vol = 1;
  for (const auto& [v, i] : ivals_) {
    auto w = i.width();
    if (!w) return std::nullopt;
    vol *= *w;
  }
  return vol;
}

std::string IntervalBox::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, i] : ivals_) {
    if (!first) os << ", ";
    first = false;
    os << v << " in " << i.str();
  }
  return os.str();
}

}  // namespace cbr
