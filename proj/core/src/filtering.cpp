#include "cbr/filtering.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbr {

namespace {

// ---------------------------------------------------------------------
// Exact and domain-level filtering
// ---------------------------------------------------------------------

bool covers(const std::vector<Var>& have, const std::set<Var>& need) {
  for (const auto& v : need) {
    if (std::find(have.begin(), have.end(), v) == have.end()) return false;
  }
  return true;
}

// Is there an assignment of `rest` (drawn from their components) extending
// `partial` that satisfies c?
bool has_support(const Constraint& c, const std::vector<std::pair<Var, const std::set<Int>*>>& rest,
                 Valuation& partial, std::size_t i) {
  if (i == rest.size()) return c.eval(partial);
  for (const auto& x : *rest[i].second) {
    partial[rest[i].first] = x;
    if (has_support(c, rest, partial, i + 1)) return true;
  }
  partial.erase(rest[i].first);
  return false;
}

// ---------------------------------------------------------------------
// Interval transfer functions
// ---------------------------------------------------------------------

// Rational with +-infinity, only as much as endpoint arithmetic needs.
struct ExtRat {
  ExtInt num;  // infinities live here
  Int den = 1; // > 0

  static ExtRat of(const ExtInt& e) { return {e, 1}; }
  bool finite() const { return num.is_finite(); }

  ExtInt ceil() const {
    if (!finite()) return num;
    return ExtInt(Rational(num.value(), den).ceil());
  }
  ExtInt floor() const {
    if (!finite()) return num;
    return ExtInt(Rational(num.value(), den).floor());
  }

  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (!a.finite() || !b.finite()) return a.num < b.num;
    return a.num.value() * b.den < b.num.value() * a.den;
  }
};

// Endpoint product candidates; 0 * inf contributes 0, which is the correct
// closed-interval endpoint for integer boxes.
IntInterval interval_mul(const IntInterval& a, const IntInterval& b) {
  if (a.is_empty() || b.is_empty()) return IntInterval::empty();
  ExtInt cands[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  ExtInt lo = cands[0], hi = cands[0];
  for (int i = 1; i < 4; ++i) {
    lo = min(lo, cands[i]);
    hi = max(hi, cands[i]);
  }
  return {lo, hi};
}

// Hull of { z / y : z in zi, y in part } for a sign-definite divisor part,
// with outward integer rounding.
IntInterval quotient_hull(const IntInterval& zi, const IntInterval& part) {
  if (zi.is_empty() || part.is_empty()) return IntInterval::empty();
  std::vector<ExtRat> cands;
  auto push = [&cands](const ExtInt& num, const ExtInt& den) {
    if (den.is_finite()) {
      Int d = den.value();
      if (d < 0) {
        cands.push_back({-num, -d});
      } else {
        cands.push_back({num, d});
      }
    } else {
      // z / +-inf tends to 0 from one side; 0 is a safe outward endpoint.
      cands.push_back({ExtInt(0), 1});
    }
  };
  push(zi.lo(), part.lo());
  push(zi.lo(), part.hi());
  push(zi.hi(), part.lo());
  push(zi.hi(), part.hi());
  ExtRat lo = cands[0], hi = cands[0];
  for (const auto& c : cands) {
    if (c < lo) lo = c;
    if (hi < c) hi = c;
  }
  return {lo.ceil(), hi.floor()};
}

// Factor pruning for z = x*y: x must lie in the quotient hull of z by y
// (unless y may be zero while z may be zero, in which case nothing prunes).
IntInterval factor_prune(const IntInterval& x, const IntInterval& z, const IntInterval& y) {
  bool y_has_zero = y.contains(Int(0));
  bool z_has_zero = z.contains(Int(0));
  if (y_has_zero && z_has_zero) return x;
  IntInterval neg = y.meet(IntInterval(ExtInt::neg_inf(), ExtInt(-1)));
  IntInterval pos = y.meet(IntInterval(ExtInt(1), ExtInt::pos_inf()));
  IntInterval hull = quotient_hull(z, neg).join(quotient_hull(z, pos));
  return x.meet(hull);
}

// ---------------------------------------------------------------------
// Linear propagation over interval boxes
// ---------------------------------------------------------------------

struct TermBound {
  ExtInt value;  // sum extreme
  bool ok;       // false when the extreme is the wrong infinity
};

ExtInt scaled_end(const Int& coeff, const IntInterval& ival, bool want_max) {
  bool use_hi = (coeff > 0) == want_max;
  ExtInt end = use_hi ? ival.hi() : ival.lo();
  return ExtInt(coeff) * end;
}

// One-shot refinement of every variable of an integer-coefficient
// constraint sum + c >= 0 computed from the original box.
void linear_geq_refine(const LinearConstraint& lc, const BoundElement& orig,
                       BoundElement& out) {
  // For a_i > 0: x_i >= ceil((-c - max(sum_{j!=i})) / a_i), dually for
  // a_i < 0. Infinite opposing extremes yield no bound.
  const auto& coeffs = lc.expr().coefficients();
  for (const auto& [v, coeff] : coeffs) {
    Int a = coeff.num();  // canonicalized constraints have integer coeffs
    ExtInt rest(lc.expr().constant().num());
    bool unbounded = false;
    for (const auto& [w, k] : coeffs) {
      if (w == v) continue;
      IntInterval wi = orig.get(w);
      if (wi.is_empty()) return;  // box collapses elsewhere
      ExtInt e = scaled_end(k.num(), wi, /*want_max=*/true);
      if (e.is_pos_inf()) {
        unbounded = true;
        break;
      }
      rest = rest + e;
    }
    if (unbounded) continue;
    // a * x >= -rest
    IntInterval cur = out.get(v);
    if (cur.is_empty()) return;
    ExtRat bound{-rest, boost::multiprecision::abs(a)};
    IntInterval refined = a > 0 ? IntInterval(bound.ceil(), cur.hi())
                                : IntInterval(cur.lo(), (ExtRat{rest, -a}).floor());
    out.set(v, cur.meet(refined));
    if (out.is_empty()) return;
  }
}

void apply_linear(const LinearExpression& diff, Rel rel, const BoundElement& orig,
                  BoundElement& out) {
  auto geq = [&](const LinearExpression& e) {
    linear_geq_refine(LinearConstraint(e, LinRel::GeqZero), orig, out);
  };
  switch (rel) {
    case Rel::Ge:
      geq(diff);
      break;
    case Rel::Gt: {
      LinearExpression e = diff;
      e.add_constant(Rational(-1));
      geq(e);
      break;
    }
    case Rel::Le:
      geq(-diff);
      break;
    case Rel::Lt: {
      LinearExpression e = -diff;
      e.add_constant(Rational(-1));
      geq(e);
      break;
    }
    case Rel::Eq:
      geq(diff);
      if (!out.is_empty()) geq(-diff);
      break;
    case Rel::Ne: {
      // Endpoint trimming only: bound filtering cannot see interior holes.
      LinearConstraint lc(diff, LinRel::EqZero);
      const auto& coeffs = lc.expr().coefficients();
      if (coeffs.empty()) {
        if (lc.expr().constant().is_zero()) {
          for (const auto& [v, ival] : orig.intervals()) out.set(v, IntInterval::empty());
        }
        return;
      }
      // Reduce to a single free variable if all others are singletons.
      Var free;
      Rational acc = lc.expr().constant();
      for (const auto& [v, k] : coeffs) {
        IntInterval ival = orig.get(v);
        if (ival.is_singleton()) {
          acc += k * Rational(ival.lo().value());
        } else if (free.empty()) {
          free = v;
        } else {
          return;
        }
      }
      if (free.empty()) {
        if (acc.is_zero()) {
          for (const auto& [v, ival] : orig.intervals()) out.set(v, IntInterval::empty());
        }
        return;
      }
      Rational k = coeffs.at(free);
      Rational forbidden = -acc / k;
      if (!forbidden.is_integer()) return;
      ExtInt f(forbidden.num());
      IntInterval cur = out.get(free);
      if (cur.is_empty()) return;
      ExtInt lo = cur.lo(), hi = cur.hi();
      if (lo == f) lo = lo + ExtInt(1);
      if (hi == f) hi = hi - ExtInt(1);
      out.set(free, cur.meet(IntInterval(lo, hi)));
      break;
    }
  }
}

// ---------------------------------------------------------------------
// Product shapes
// ---------------------------------------------------------------------

struct ProductShape {
  Var z, x, y;  // z = x * y
};

std::optional<ProductShape> match_product(const Constraint& c) {
  if (c.rel() != Rel::Eq) return std::nullopt;
  auto match = [](const Expr& v, const Expr& m) -> std::optional<ProductShape> {
    if (v.kind() != Expr::Kind::Variable || m.kind() != Expr::Kind::Mul) return std::nullopt;
    if (m.lhs().kind() != Expr::Kind::Variable || m.rhs().kind() != Expr::Kind::Variable)
      return std::nullopt;
    return ProductShape{v.var(), m.lhs().var(), m.rhs().var()};
  };
  if (auto s = match(c.lhs(), c.rhs())) return s;
  return match(c.rhs(), c.lhs());
}

void apply_product(const ProductShape& s, const BoundElement& orig, BoundElement& out) {
  IntInterval zi = orig.get(s.z), xi = orig.get(s.x), yi = orig.get(s.y);
  if (s.x == s.y) {
    // z = x*x: square image (never negative) and symmetric root hull.
    IntInterval sq = interval_mul(xi, xi).meet(IntInterval(ExtInt(0), ExtInt::pos_inf()));
    out.set(s.z, out.get(s.z).meet(sq));
    if (out.is_empty()) return;
    IntInterval znow = out.get(s.z);
    if (znow.hi().is_finite()) {
      if (znow.hi().value() < 0) {
        out.set(s.x, IntInterval::empty());
        return;
      }
      Int hi = znow.hi().value();
      Int r = boost::multiprecision::sqrt(hi);
      out.set(s.x, out.get(s.x).meet(IntInterval(ExtInt(-r), ExtInt(r))));
    }
    return;
  }
  out.set(s.z, out.get(s.z).meet(interval_mul(xi, yi)));
  if (out.is_empty()) return;
  IntInterval znow = orig.get(s.z).meet(interval_mul(xi, yi));
  out.set(s.x, out.get(s.x).meet(factor_prune(xi, znow, yi)));
  if (out.is_empty()) return;
  out.set(s.y, out.get(s.y).meet(factor_prune(yi, znow, xi)));
}

// ---------------------------------------------------------------------
// Witness path: exact one-shot projection
// ---------------------------------------------------------------------

BoundElement witness_refine(const Constraint& c, const BoundElement& b,
                            const std::vector<Var>& cvars) {
  BoundElement out = b;
  for (const auto& v : cvars) {
    IntInterval ival = b.get(v);
    std::vector<std::pair<Var, IntInterval>> others;
    for (const auto& w : cvars) {
      if (w != v) others.emplace_back(w, b.get(w));
    }
    auto supported = [&](const Int& val) {
      Valuation partial;
      partial[v] = val;
      auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == others.size()) return c.eval(partial);
        const auto& [w, wi] = others[i];
        for (Int x = wi.lo().value(); x <= wi.hi().value(); ++x) {
          partial[w] = x;
          if (self(self, i + 1)) return true;
        }
        partial.erase(w);
        return false;
      };
      return rec(rec, 0);
    };

    std::optional<Int> first, last;
    for (Int x = ival.lo().value(); x <= ival.hi().value(); ++x) {
      if (supported(x)) {
        first = x;
        break;
      }
    }
    if (!first) {
      // No value of v participates: the concrete image is empty.
      BoundElement empty = b;
      for (const auto& [w, wi] : b.intervals()) empty.set(w, IntInterval::empty());
      return empty;
    }
    for (Int x = ival.hi().value(); x >= *first; --x) {
      if (supported(x)) {
        last = x;
        break;
      }
    }
    out.set(v, IntInterval(ExtInt(*first), ExtInt(*last)));
  }
  return out;
}

}  // namespace

TupleSet exact_filter(const Constraint& c, const TupleSet& s) {
  if (!covers(s.vars, c.vars()))
    throw std::invalid_argument("exact_filter: tuple set does not cover vars of constraint");
  TupleSet out;
  out.vars = s.vars;
  for (const auto& t : s.tuples) {
    if (c.eval(s.valuation(t))) out.tuples.insert(t);
  }
  return out;
}

TupleSet solve_exact(const std::vector<Constraint>& cs, const TupleSet& d) {
  TupleSet cur = d;
  for (;;) {
    std::size_t before = cur.tuples.size();
    for (const auto& c : cs) cur = exact_filter(c, cur);
    if (cur.tuples.size() == before) return cur;
  }
}

ArcElement domain_filter(const Constraint& c, const ArcElement& a, const Int& cap) {
  std::set<Var> cvars = c.vars();
  for (const auto& v : cvars) {
    if (!a.sets.count(v))
      throw std::invalid_argument("domain_filter: missing component for " + v);
  }
  if (a.any_empty()) return a.emptied();

  Int prod = 1;
  for (const auto& v : cvars) prod *= Int(a.sets.at(v).size());
  if (prod > cap) throw std::length_error("domain_filter: support cap exceeded");

  ArcElement out = a;
  bool wiped = false;
  for (const auto& v : cvars) {
    std::vector<std::pair<Var, const std::set<Int>*>> rest;
    for (const auto& w : cvars) {
      if (w != v) rest.emplace_back(w, &a.sets.at(w));
    }
    std::set<Int> kept;
    for (const auto& x : a.sets.at(v)) {
      Valuation partial;
      partial[v] = x;
      if (has_support(c, rest, partial, 0)) kept.insert(x);
    }
    if (kept.empty()) wiped = true;
    out.sets[v] = std::move(kept);
  }
  return wiped ? a.emptied() : out;
}

BoundElement bound_filter(const Constraint& c, const BoundElement& b,
                          const BoundFilterOptions& opts) {
  if (b.is_empty()) return b;
  std::set<Var> cvars_set = c.vars();
  std::vector<Var> cvars(cvars_set.begin(), cvars_set.end());

  if (cvars.empty()) {
    if (c.eval({})) return b;
    BoundElement empty = b;
    for (const auto& [v, ival] : b.intervals()) empty.set(v, IntInterval::empty());
    return empty;
  }

  bool finite = true;
  Int volume = 1;
  for (const auto& v : cvars) {
    IntInterval ival = b.get(v);
    auto w = ival.width();
    if (!w) {
      finite = false;
      break;
    }
    volume *= *w;
    if (volume > opts.exact_cap) {
      finite = false;
      break;
    }
  }
  if (finite) return witness_refine(c, b, cvars);

  BoundElement out = b;
  if (auto diff = c.linear_difference()) {
    LinearConstraint canon(*diff, LinRel::GeqZero);  // integer-scales coefficients
    apply_linear(canon.expr(), c.rel(), b, out);
    return out;
  }
  if (auto shape = match_product(c)) {
    apply_product(*shape, b, out);
    return out;
  }
  return out;  // unsupported nonlinear shape on a wide box: no pruning
}

ArcElement domain_fixpoint(const std::vector<Constraint>& cs, ArcElement a, const Int& cap) {
  for (;;) {
    ArcElement next = a;
    for (const auto& c : cs) next = domain_filter(c, next, cap);
    if (next.sets == a.sets) return next;
    a = std::move(next);
  }
}

BoundElement bound_fixpoint(const std::vector<Constraint>& cs, BoundElement b,
                            const BoundFilterOptions& opts) {
  for (;;) {
    BoundElement next = b;
    for (const auto& c : cs) next = bound_filter(c, next, opts);
    if (next == b) return next;
    b = std::move(next);
  }
}

}  // namespace cbr
