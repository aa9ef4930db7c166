#include "cbr/concrete.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cbr {

namespace {

void require_same_vars(const std::vector<Var>& a, const std::vector<Var>& b,
                       const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": variable lists differ");
}

template <typename M>
void require_same_keys(const M& a, const M& b, const char* who) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": variable sets differ");
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      throw std::invalid_argument(std::string(who) + ": variable sets differ");
  }
}

}  // namespace

bool TupleSet::arity_ok() const {
  for (const auto& t : tuples) {
    if (t.size() != vars.size()) return false;
  }
  return true;
}

Valuation TupleSet::valuation(const std::vector<Int>& tuple) const {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = tuple[i];
  return v;
}

std::string TupleSet::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& t : tuples) {
    os << (first ? "(" : ", (");
    first = false;
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
  }
  os << "}";
  return os.str();
}

bool ArcElement::any_empty() const {
  for (const auto& [v, s] : sets) {
    if (s.empty()) return true;
  }
  return false;
}

ArcElement ArcElement::emptied() const {
  ArcElement e;
  for (const auto& [v, s] : sets) e.sets[v] = {};
  return e;
}

std::string ArcElement::str() const {
  std::ostringstream os;
  bool firstv = true;
  for (const auto& [v, s] : sets) {
    if (!firstv) os << ", ";
    firstv = false;
    os << v << " in {";
    bool first = true;
    for (const auto& x : s) {
      if (!first) os << ",";
      first = false;
      os << x;
    }
    os << "}";
  }
  return os.str();
}

ArcElement alpha_arc(const TupleSet& s) {
  ArcElement a;
  for (const auto& v : s.vars) a.sets[v] = {};
  for (const auto& t : s.tuples) {
    for (std::size_t i = 0; i < s.vars.size(); ++i) a.sets[s.vars[i]].insert(t[i]);
  }
  return a;
}

TupleSet gamma_arc(const ArcElement& a, const Int& cap) {
  TupleSet out;
  for (const auto& [v, s] : a.sets) out.vars.push_back(v);
  Int prod = 1;
  for (const auto& [v, s] : a.sets) {
    prod *= Int(s.size());
    if (prod > cap) throw std::length_error("gamma_arc: tuple cap exceeded");
  }
  if (a.any_empty()) return out;

  std::vector<const std::set<Int>*> comps;
  comps.reserve(a.sets.size());
  for (const auto& [v, s] : a.sets) comps.push_back(&s);
  std::vector<Int> tuple(comps.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == comps.size()) {
      out.tuples.insert(tuple);
      return;
    }
    for (const auto& x : *comps[i]) {
      tuple[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

BoundElement alpha_inter(const ArcElement& a) {
  BoundElement b;
  for (const auto& [v, s] : a.sets) {
    if (s.empty()) {
      b.set(v, IntInterval::empty());
    } else {
      b.set(v, IntInterval(ExtInt(*s.begin()), ExtInt(*s.rbegin())));
    }
  }
  return b;
}

ArcElement gamma_inter(const BoundElement& b, const Int& cap) {
  ArcElement a;
  for (const auto& [v, ival] : b.intervals()) {
    a.sets[v] = {};
    if (ival.is_empty()) continue;
    if (!ival.is_finite())
      throw std::length_error("gamma_inter: infinite interval for " + v);
    if (*ival.width() > cap) throw std::length_error("gamma_inter: cap exceeded");
    for (Int x = ival.lo().value(); x <= ival.hi().value(); ++x) a.sets[v].insert(x);
  }
  return a;
}

TupleSet tuple_set_from_box(const BoundElement& b, const Int& cap) {
  return gamma_arc(gamma_inter(b, cap), cap);
}

bool concrete_leq(const TupleSet& a, const TupleSet& b) {
  require_same_vars(a.vars, b.vars, "concrete_leq");
  return std::includes(b.tuples.begin(), b.tuples.end(), a.tuples.begin(), a.tuples.end());
}

TupleSet concrete_join(const TupleSet& a, const TupleSet& b) {
  require_same_vars(a.vars, b.vars, "concrete_join");
  TupleSet r = a;
  r.tuples.insert(b.tuples.begin(), b.tuples.end());
  return r;
}

TupleSet concrete_meet(const TupleSet& a, const TupleSet& b) {
  require_same_vars(a.vars, b.vars, "concrete_meet");
  TupleSet r;
  r.vars = a.vars;
  std::set_intersection(a.tuples.begin(), a.tuples.end(), b.tuples.begin(),
                        b.tuples.end(), std::inserter(r.tuples, r.tuples.begin()));
  return r;
}

bool arc_leq(const ArcElement& a, const ArcElement& b) {
  require_same_keys(a.sets, b.sets, "arc_leq");
  auto ib = b.sets.begin();
  for (auto ia = a.sets.begin(); ia != a.sets.end(); ++ia, ++ib) {
    if (!std::includes(ib->second.begin(), ib->second.end(), ia->second.begin(),
                       ia->second.end()))
      return false;
  }
  return true;
}

ArcElement arc_join(const ArcElement& a, const ArcElement& b) {
  require_same_keys(a.sets, b.sets, "arc_join");
  ArcElement r = a;
  for (const auto& [v, s] : b.sets) r.sets[v].insert(s.begin(), s.end());
  return r;
}

ArcElement arc_meet(const ArcElement& a, const ArcElement& b) {
  require_same_keys(a.sets, b.sets, "arc_meet");
  ArcElement r;
  for (const auto& [v, s] : a.sets) {
    const auto& t = b.sets.at(v);
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                          std::inserter(r.sets[v], r.sets[v].begin()));
  }
  return r;
}

bool bound_leq(const BoundElement& a, const BoundElement& b) {
  require_same_keys(a.intervals(), b.intervals(), "bound_leq");
  return b.includes(a);
}

BoundElement bound_join(const BoundElement& a, const BoundElement& b) {
  require_same_keys(a.intervals(), b.intervals(), "bound_join");
  return a.join(b);
}

BoundElement bound_meet(const BoundElement& a, const BoundElement& b) {
  require_same_keys(a.intervals(), b.intervals(), "bound_meet");
  return a.meet(b);
}

}  // namespace cbr
