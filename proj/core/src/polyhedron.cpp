#include "cbr/polyhedron.hpp"

#include <algorithm>
#include <bitset>
#include <sstream>
#include <stdexcept>

namespace cbr {

namespace {

constexpr std::size_t kFmRedundancyThreshold = 40;
constexpr std::size_t kFmHardCap = 160;

LinearConstraint empty_marker() {
  return {LinearExpression(Rational(-1)), LinRel::GeqZero};
}

Var fresh_name(const std::string& base, const std::set<Var>& taken) {
  Var v = base;
  while (taken.count(v)) v += "'";
  return v;
}

// Working set of constraints with normalization, deduplication and
// same-direction tightening. Detecting a contradiction collapses the set.
class ConstraintSet {
 public:
  bool contradiction() const { return contradiction_; }

  void add(const LinearConstraint& c) {
    if (contradiction_ || c.is_tautology()) return;
    if (c.is_contradiction()) {
      contradiction_ = true;
      return;
    }
    auto key = std::make_pair(c.rel(), c.expr().coefficients());
    auto it = by_direction_.find(key);
    if (it == by_direction_.end()) {
      by_direction_.emplace(std::move(key), c.expr().constant());
      return;
    }
    if (c.rel() == LinRel::EqZero) {
      // Same direction, different constant: no common point.
      if (it->second != c.expr().constant()) contradiction_ = true;
      return;
    }
    // a.x + c >= 0 is tighter for smaller c.
    it->second = std::min(it->second, c.expr().constant());
  }

  std::vector<LinearConstraint> take() const {
    std::vector<LinearConstraint> out;
    if (contradiction_) {
      out.push_back(empty_marker());
      return out;
    }
    for (const auto& [key, constant] : by_direction_) {
      LinearExpression e;
      for (const auto& [v, k] : key.second) e.set_coefficient(v, k);
      e.add_constant(constant);
      out.emplace_back(std::move(e), key.first);
    }
    return out;
  }

  std::size_t size() const { return by_direction_.size(); }

 private:
  std::map<std::pair<LinRel, std::map<Var, Rational>>, Rational> by_direction_;
  bool contradiction_ = false;
};

std::vector<LinearConstraint> normalized(const std::vector<LinearConstraint>& cs) {
  ConstraintSet s;
  for (const auto& c : cs) s.add(c);
  return s.take();
}

// Entailment of a single constraint by a constraint system, decided by
// optimizing the constraint's expression.
bool entails(const std::vector<LinearConstraint>& cs, const LinearConstraint& c) {
  LpResult lo = simplex_optimize(cs, c.expr(), Sense::Minimize);
  if (lo.status == LpStatus::Infeasible) return true;
  if (lo.status == LpStatus::Unbounded || lo.value.sign() < 0) return false;
  if (!c.is_equality()) return true;
  LpResult hi = simplex_optimize(cs, c.expr(), Sense::Maximize);
  return hi.status == LpStatus::Optimal && hi.value.sign() <= 0;
}

std::vector<LinearConstraint> drop_redundant(std::vector<LinearConstraint> cs) {
  if (cs.size() < 2) return cs;
  // Iterate in reverse so earlier (already inspected) constraints are kept
  // as the certifying set; deterministic because the input is normalized.
  for (std::size_t i = cs.size(); i-- > 0;) {
    std::vector<LinearConstraint> rest;
    rest.reserve(cs.size() - 1);
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (j != i) rest.push_back(cs[j]);
    if (entails(rest, cs[i])) cs = std::move(rest);
  }
  return cs;
}

// Gaussian elimination of v through an equality; among candidates, one
// whose other variables stay clear of `avoid` wins (this pins down the
// constraint basis of projected images). Returns false when no equality
// mentions v.
bool gauss_eliminate(std::vector<LinearConstraint>& cs, const Var& v,
                     const std::set<Var>& avoid) {
  const LinearConstraint* chosen = nullptr;
  for (const auto& c : cs) {
    if (!c.is_equality() || c.expr().coefficient(v).is_zero()) continue;
    bool clean = true;
    for (const auto& [w, k] : c.expr().coefficients()) {
      if (w != v && avoid.count(w)) {
        clean = false;
        break;
      }
    }
    if (clean) {
      chosen = &c;
      break;
    }
    if (!chosen) chosen = &c;
  }
  if (!chosen) return false;
  Rational a = chosen->expr().coefficient(v);
  LinearExpression repl = chosen->expr();
  repl.set_coefficient(v, Rational(0));
  repl *= -a.reciprocal();
  ConstraintSet out;
  for (const auto& o : cs) {
    if (&o == chosen) continue;
    out.add({o.expr().substituted(v, repl), o.rel()});
  }
  cs = out.take();
  return true;
}

// Fourier-Motzkin rows carrying the set of ancestor rows, for Imbert's
// acceleration: after eliminating k variables, any row combining more
// than k+1 original rows is redundant and can be dropped without an LP.
struct FmRow {
  LinearConstraint c;
  std::bitset<128> hist;
};

std::vector<LinearConstraint> drop_redundant(std::vector<LinearConstraint> cs);

std::vector<LinearConstraint> fm_eliminate_all(std::vector<LinearConstraint> cs,
                                               std::vector<Var> vars) {
  bool track = cs.size() <= 128;
  std::vector<FmRow> rows;
  rows.reserve(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    FmRow r{cs[i], {}};
    if (track) r.hist.set(i);
    rows.push_back(std::move(r));
  }

  std::size_t eliminated = 0;
  auto rebase = [&rows, &track, &eliminated]() {
    // LP-minimize the working system and restart the Imbert accounting
    // with the survivors as fresh originals.
    std::vector<LinearConstraint> cur;
    cur.reserve(rows.size());
    for (auto& r : rows) cur.push_back(std::move(r.c));
    cur = drop_redundant(std::move(cur));
    rows.clear();
    track = cur.size() <= 128;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      FmRow r{std::move(cur[i]), {}};
      if (track) r.hist.set(i);
      rows.push_back(std::move(r));
    }
    eliminated = 0;
  };

  while (!vars.empty()) {
    if (rows.size() > kFmHardCap) rebase();
    // cheapest variable first
    std::size_t pick = 0;
    long best = -1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        int s = r.c.expr().coefficient(vars[i]).sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      long cost = pos * neg - pos - neg;
      if (best < 0 || cost < best) {
        best = cost;
        pick = i;
      }
    }
    Var v = vars[pick];
    vars.erase(vars.begin() + pick);
    ++eliminated;

    std::vector<FmRow> pos, neg, out;
    for (auto& r : rows) {
      int s = r.c.expr().coefficient(v).sign();
      if (s == 0) {
        out.push_back(std::move(r));
      } else if (s > 0) {
        pos.push_back(std::move(r));
      } else {
        neg.push_back(std::move(r));
      }
    }
    std::set<LinearConstraint> seen;
    for (const auto& r : out) seen.insert(r.c);
    for (const auto& p : pos) {
      Rational a = p.c.expr().coefficient(v);
      for (const auto& n : neg) {
        auto hist = p.hist | n.hist;
        if (track && hist.count() > eliminated + 1) continue;  // Imbert bound
        Rational b = n.c.expr().coefficient(v);
        LinearExpression e = n.c.expr();
        e *= a;
        LinearExpression scaled = p.c.expr();
        scaled *= -b;
        e += scaled;
        LinearConstraint combined(std::move(e), LinRel::GeqZero);
        if (combined.is_tautology()) continue;
        if (combined.is_contradiction()) return {empty_marker()};
        if (seen.insert(combined).second) out.push_back({std::move(combined), hist});
      }
    }
    rows = std::move(out);
  }

  ConstraintSet final_set;
  for (const auto& r : rows) final_set.add(r.c);
  return final_set.take();
}

}  // namespace

Polyhedron::Polyhedron(std::vector<Var> dims) : dims_(std::move(dims)) {
  std::sort(dims_.begin(), dims_.end());
  dims_.erase(std::unique(dims_.begin(), dims_.end()), dims_.end());
}

Polyhedron::Polyhedron(std::vector<Var> dims, std::vector<LinearConstraint> cs)
    : Polyhedron(std::move(dims)) {
  for (auto& c : cs) add(c);
}

Polyhedron Polyhedron::bottom(std::vector<Var> dims) {
  Polyhedron p(std::move(dims));
  p.cs_.push_back(empty_marker());
  return p;
}

bool Polyhedron::has_dim(const Var& v) const {
  return std::binary_search(dims_.begin(), dims_.end(), v);
}

void Polyhedron::add(const LinearConstraint& c) {
  for (const auto& [v, k] : c.expr().coefficients()) {
    if (!has_dim(v))
      throw std::invalid_argument("Polyhedron::add: unknown dimension " + v);
  }
  if (c.is_tautology()) return;
  auto pos = std::lower_bound(cs_.begin(), cs_.end(), c);
  if (pos != cs_.end() && *pos == c) return;
  cs_.insert(pos, c);
}

bool Polyhedron::is_bottom() const {
  return cs_.size() == 1 && cs_[0] == empty_marker();
}

Polyhedron Polyhedron::extended(const std::vector<Var>& extra) const {
  std::vector<Var> dims = dims_;
  dims.insert(dims.end(), extra.begin(), extra.end());
  Polyhedron p(std::move(dims));
  p.cs_ = cs_;
  return p;
}

Polyhedron Polyhedron::renamed(const std::map<Var, Var>& renaming) const {
  std::vector<Var> dims;
  dims.reserve(dims_.size());
  for (const auto& d : dims_) {
    auto it = renaming.find(d);
    dims.push_back(it == renaming.end() ? d : it->second);
  }
  Polyhedron p(std::move(dims));
  for (const auto& c : cs_) {
    LinearExpression e(c.expr().constant());
    for (const auto& [v, k] : c.expr().coefficients()) {
      auto it = renaming.find(v);
      e.add_term(it == renaming.end() ? v : it->second, k);
    }
    p.add({std::move(e), c.rel()});
  }
  return p;
}

bool Polyhedron::contains_point(const std::map<Var, Int>& point) const {
  std::map<Var, Rational> rat;
  for (const auto& [v, x] : point) rat.emplace(v, Rational(x));
  for (const auto& c : cs_) {
    if (!c.satisfied_by(rat)) return false;
  }
  return true;
}

std::string Polyhedron::dump() const {
  std::vector<std::string> lines;
  lines.reserve(cs_.size());
  for (const auto& c : cs_) lines.push_back(c.str());
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto& l : lines) os << l << '\n';
  return os.str();
}

Polyhedron poly_intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("poly_intersect: dimension mismatch");
  Polyhedron r = p;
  for (const auto& c : q.constraints()) r.add(c);
  return r;
}

bool poly_is_empty(const Polyhedron& p) {
  if (p.is_bottom()) return true;
  if (p.constraints().empty()) return false;
  return lp_infeasible(p.constraints());
}

bool poly_includes(const Polyhedron& p, const Polyhedron& q) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("poly_includes: dimension mismatch");
  if (poly_is_empty(q)) return true;
  for (const auto& c : p.constraints()) {
    if (!entails(q.constraints(), c)) return false;
  }
  return true;
}

bool poly_equal(const Polyhedron& p, const Polyhedron& q) {
  return poly_includes(p, q) && poly_includes(q, p);
}

LpResult simplex_optimize(const Polyhedron& p, const LinearExpression& objective,
                          Sense sense) {
  for (const auto& [v, k] : objective.coefficients()) {
    if (!p.has_dim(v))
      throw std::invalid_argument("simplex_optimize: objective over unknown dimension " + v);
  }
  if (p.is_bottom()) return {LpStatus::Infeasible, Rational(0), {}};
  return simplex_optimize(p.constraints(), objective, sense);
}

Polyhedron poly_minimize(const Polyhedron& p) {
  if (p.is_bottom() || poly_is_empty(p)) return Polyhedron::bottom(p.dims());
  return {p.dims(), drop_redundant(normalized(p.constraints()))};
}

Polyhedron poly_project_out(const Polyhedron& p, const std::vector<Var>& vars,
                            const std::set<Var>& subst_avoid) {
  std::vector<Var> kept;
  for (const auto& d : p.dims()) {
    if (std::find(vars.begin(), vars.end(), d) == vars.end()) kept.push_back(d);
  }
  if (p.is_bottom()) return Polyhedron::bottom(kept);

  std::vector<LinearConstraint> cs = normalized(p.constraints());

  // Gaussian eliminations first: exact rewritings with no growth. The
  // remaining variables go through Fourier-Motzkin as one batch so the
  // Imbert history bound applies cleanly.
  std::vector<Var> todo = vars;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = todo.begin(); it != todo.end(); ++it) {
      if (gauss_eliminate(cs, *it, subst_avoid)) {
        todo.erase(it);
        progress = true;
        break;
      }
    }
    if (cs.size() == 1 && cs[0] == empty_marker()) return Polyhedron::bottom(kept);
  }
  if (!todo.empty()) cs = fm_eliminate_all(std::move(cs), std::move(todo));
  if (cs.size() == 1 && cs[0] == empty_marker()) return Polyhedron::bottom(kept);
  if (cs.size() > kFmRedundancyThreshold) cs = drop_redundant(cs);
  return {kept, std::move(cs)};
}

namespace {

using Point = std::vector<Rational>;  // aligned with the polyhedron's dims

// Gaussian solve of a square rational system; nullopt when singular.
std::optional<Point> solve_square(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = a[col][col].reciprocal();
    for (auto& x : a[col]) x *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational k = a[r][col];
      for (std::size_t c2 = 0; c2 < n; ++c2) a[r][c2] -= k * a[col][c2];
      b[r] -= k * b[col];
    }
  }
  return b;
}

// All subsets of size k, visited through a callback; returns false when the
// count would exceed the budget.
bool for_each_subset(std::size_t n, std::size_t k, std::size_t budget,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return true;
  // quick budget estimate
  double count = 1;
  for (std::size_t i = 0; i < k; ++i) count = count * double(n - i) / double(i + 1);
  if (count > double(budget)) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return true;
    }
    if (idx[i] == i + n - k) return true;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Vertices of a polyhedron as intersections of dim-many constraint
// hyperplanes that satisfy everything; nullopt when over budget.
std::optional<std::vector<Point>> enumerate_vertices(const Polyhedron& p,
                                                     std::size_t budget) {
  const auto& dims = p.dims();
  const auto& cs = p.constraints();
  const std::size_t d = dims.size();
  std::set<Point> verts;
  bool ok = for_each_subset(cs.size(), d, budget, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    std::vector<Rational> b(d);
    for (std::size_t r = 0; r < d; ++r) {
      const auto& e = cs[idx[r]].expr();
      for (std::size_t c = 0; c < d; ++c) a[r][c] = e.coefficient(dims[c]);
      b[r] = -e.constant();
    }
    auto sol = solve_square(std::move(a), std::move(b));
    if (!sol) return;
    std::map<Var, Rational> pt;
    for (std::size_t c = 0; c < d; ++c) pt[dims[c]] = (*sol)[c];
    for (const auto& c : cs) {
      if (!c.satisfied_by(pt)) return;
    }
    verts.insert(std::move(*sol));
  });
  if (!ok) return std::nullopt;
  return std::vector<Point>(verts.begin(), verts.end());
}

// Affine rank of a point set (dimension of the affine hull).
std::size_t affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  const std::size_t d = pts[0].size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(d);
    for (std::size_t c = 0; c < d; ++c) r[c] = pts[i][c] - pts[0][c];
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Rational inv = rows[rank][col].reciprocal();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational k = rows[r][col];
      for (std::size_t c2 = 0; c2 < d; ++c2) rows[r][c2] -= k * rows[rank][c2];
    }
    ++rank;
  }
  return rank;
}

// Facet enumeration of a full-dimensional point set: hyperplanes through
// dim-many points with every point on one side.
std::optional<Polyhedron> hull_from_points(const std::vector<Point>& pts,
                                           const std::vector<Var>& dims,
                                           std::size_t budget) {
  const std::size_t d = dims.size();
  Polyhedron out((std::vector<Var>(dims)));
  std::set<LinearConstraint> facets;
  bool ok = for_each_subset(pts.size(), d, budget, [&](const std::vector<std::size_t>& idx) {
    // normal n with (p_i - p_0) . n = 0; solve the (d-1) x d nullspace by
    // fixing each coordinate as the free one until a solution appears
    std::vector<std::vector<Rational>> diff(d - 1, std::vector<Rational>(d));
    for (std::size_t r = 0; r + 1 < d; ++r) {
      for (std::size_t c = 0; c < d; ++c)
        diff[r][c] = pts[idx[r + 1]][c] - pts[idx[0]][c];
    }
    for (std::size_t free = 0; free < d; ++free) {
      std::vector<std::vector<Rational>> a(d - 1, std::vector<Rational>(d - 1));
      std::vector<Rational> b(d - 1);
      for (std::size_t r = 0; r + 1 < d; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < d; ++c) {
          if (c == free) continue;
          a[r][cc++] = diff[r][c];
        }
        b[r] = -diff[r][free];
      }
      auto sol = d == 1 ? std::optional<Point>(Point{}) : solve_square(std::move(a), std::move(b));
      if (!sol) continue;
      Point normal(d);
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) normal[c] = c == free ? Rational(1) : (*sol)[cc++];
      // offset through the subset's base point
      Rational offset;
      for (std::size_t c = 0; c < d; ++c) offset += normal[c] * pts[idx[0]][c];
      int side = 0;
      bool is_facet = true;
      for (const auto& pt : pts) {
        Rational v;
        for (std::size_t c = 0; c < d; ++c) v += normal[c] * pt[c];
        int s = (v - offset).sign();
        if (s == 0) continue;
        if (side == 0) {
          side = s;
        } else if (s != side) {
          is_facet = false;
          break;
        }
      }
      if (is_facet && side != 0) {
        // normal . x <= / >= offset with all points on `side`
        LinearExpression e;
        for (std::size_t c = 0; c < d; ++c) e.add_term(dims[c], side > 0 ? normal[c] : -normal[c]);
        e.add_constant(side > 0 ? -offset : offset);
        facets.insert(LinearConstraint(std::move(e), LinRel::GeqZero));
      }
      break;  // one nullspace direction suffices for a (d-1)-flat
    }
  });
  if (!ok) return std::nullopt;
  for (const auto& f : facets) out.add(f);
  return out;
}

// Exact hull of two bounded full-dimensional polyhedra via vertex
// enumeration; nullopt when the inputs are unbounded, degenerate or over
// budget, in which case the caller falls back to the lifted projection.
std::optional<Polyhedron> vertex_hull_join(const Polyhedron& p, const Polyhedron& q) {
  constexpr std::size_t kSubsetBudget = 60'000;
  // A bounded polyhedron is exactly the hull of its vertices; unbounded or
  // degenerate inputs fall back to the lifted projection.
  auto bounded = [](const Polyhedron& r) {
    std::vector<LinearExpression> objs;
    for (const auto& d : r.dims()) objs.push_back(LinearExpression::variable(d));
    for (const auto& o : objs) {
      if (simplex_optimize(r.constraints(), o, Sense::Maximize).status != LpStatus::Optimal)
        return false;
      if (simplex_optimize(r.constraints(), o, Sense::Minimize).status != LpStatus::Optimal)
        return false;
    }
    return true;
  };
  if (!bounded(p) || !bounded(q)) return std::nullopt;
  auto vp = enumerate_vertices(p, kSubsetBudget);
  if (!vp) return std::nullopt;
  auto vq = enumerate_vertices(q, kSubsetBudget);
  if (!vq) return std::nullopt;
  std::vector<Point> pts = std::move(*vp);
  pts.insert(pts.end(), vq->begin(), vq->end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return std::nullopt;
  if (affine_rank(pts) != p.dims().size()) return std::nullopt;
  return hull_from_points(pts, p.dims(), kSubsetBudget);
}

Polyhedron template_join(const Polyhedron& p, const Polyhedron& q) {
  Polyhedron out(p.dims());
  std::vector<LinearExpression> rows;
  for (std::size_t i = 0; i < p.dims().size(); ++i) {
    rows.push_back(LinearExpression::variable(p.dims()[i]));
    rows.push_back(-LinearExpression::variable(p.dims()[i]));
    for (std::size_t j = i + 1; j < p.dims().size(); ++j) {
      LinearExpression a = LinearExpression::variable(p.dims()[i]);
      LinearExpression b = LinearExpression::variable(p.dims()[j]);
      rows.push_back(a + b);
      rows.push_back(a - b);
      rows.push_back(-(a + b));
      rows.push_back(-(a - b));
    }
  }
  for (const auto& t : rows) {
    LpResult r1 = simplex_optimize(p.constraints(), t, Sense::Maximize);
    if (r1.status != LpStatus::Optimal) continue;
    LpResult r2 = simplex_optimize(q.constraints(), t, Sense::Maximize);
    if (r2.status != LpStatus::Optimal) continue;
    // t <= max(sup_p, sup_q)
    LinearExpression e = -t;
    e.add_constant(std::max(r1.value, r2.value));
    out.add({std::move(e), LinRel::GeqZero});
  }
  return poly_minimize(out);
}

}  // namespace

Polyhedron poly_join(const Polyhedron& p, const Polyhedron& q, JoinOptions opts) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("poly_join: dimension mismatch");
  if (poly_is_empty(p)) return poly_minimize(q);
  if (poly_is_empty(q)) return poly_minimize(p);
  if (p.dims().size() > opts.exact_dim_limit) return template_join(p, q);

  if (auto hull = vertex_hull_join(poly_minimize(p), poly_minimize(q)))
    return poly_minimize(*hull);

  // Lifted union: x = y + z with y in lambda*P, z in (1-lambda)*Q,
  // 0 <= lambda <= 1; projecting out y and lambda yields the closed
  // convex hull without ever building a generator representation.
  std::set<Var> taken(p.dims().begin(), p.dims().end());
  Var lambda = fresh_name("#l", taken);
  taken.insert(lambda);
  std::map<Var, Var> y;
  for (const auto& d : p.dims()) {
    y[d] = fresh_name("#y_" + d, taken);
    taken.insert(y[d]);
  }

  std::vector<Var> all(p.dims());
  all.push_back(lambda);
  for (const auto& [d, yd] : y) all.push_back(yd);
  Polyhedron lifted(std::move(all));

  for (const auto& c : p.constraints()) {
    LinearExpression e;
    e.add_term(lambda, c.expr().constant());
    for (const auto& [v, k] : c.expr().coefficients()) e.add_term(y.at(v), k);
    lifted.add({std::move(e), c.rel()});
  }
  for (const auto& c : q.constraints()) {
    LinearExpression e(c.expr().constant());
    e.add_term(lambda, -c.expr().constant());
    for (const auto& [v, k] : c.expr().coefficients()) {
      e.add_term(v, k);
      e.add_term(y.at(v), -k);
    }
    lifted.add({std::move(e), c.rel()});
  }
  lifted.add({LinearExpression::variable(lambda), LinRel::GeqZero});
  LinearExpression upper(Rational(1));
  upper.add_term(lambda, Rational(-1));
  lifted.add({std::move(upper), LinRel::GeqZero});

  std::vector<Var> elim;
  for (const auto& [d, yd] : y) elim.push_back(yd);
  elim.push_back(lambda);
  return poly_minimize(poly_project_out(lifted, elim));
}

Polyhedron poly_join_directions(const Polyhedron& p, const Polyhedron& q) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("poly_join_directions: dimension mismatch");
  if (poly_is_empty(p)) return poly_minimize(q);
  if (poly_is_empty(q)) return poly_minimize(p);

  // Directions of both arguments; equalities contribute both orientations.
  std::set<std::map<Var, Rational>> dirs;
  auto normalize_dir = [](std::map<Var, Rational> row) {
    Int g = 0;
    for (const auto& [v, k] : row) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(k.num()));
    if (g > 1) {
      for (auto& [v, k] : row) k *= Rational(Int(1), g);
    }
    return row;
  };
  auto collect = [&](const Polyhedron& r) {
    for (const auto& c : r.constraints()) {
      if (c.expr().coefficients().empty()) continue;
      std::map<Var, Rational> row = normalize_dir(c.expr().coefficients());
      std::map<Var, Rational> neg;
      for (const auto& [v, k] : row) neg[v] = -k;
      if (c.is_equality()) {
        dirs.insert(row);
        dirs.insert(neg);
      } else {
        // expr >= 0 bounds the direction -coeffs from above.
        dirs.insert(neg);
      }
    }
  };
  collect(p);
  collect(q);

  Polyhedron out(p.dims());
  for (const auto& row : dirs) {
    LinearExpression t;
    for (const auto& [v, k] : row) t.set_coefficient(v, k);
    LpResult rp = simplex_optimize(p.constraints(), t, Sense::Maximize);
    if (rp.status != LpStatus::Optimal) continue;
    LpResult rq = simplex_optimize(q.constraints(), t, Sense::Maximize);
    if (rq.status != LpStatus::Optimal) continue;
    LinearExpression e = -t;
    e.add_constant(std::max(rp.value, rq.value));
    out.add({std::move(e), LinRel::GeqZero});
  }
  return poly_minimize(out);
}

Polyhedron poly_widen(const Polyhedron& p, const Polyhedron& q) {
  if (p.dims() != q.dims())
    throw std::invalid_argument("poly_widen: dimension mismatch");
  if (poly_is_empty(p)) return poly_minimize(q);
  Polyhedron out(p.dims());
  for (const auto& c : p.constraints()) {
    if (entails(q.constraints(), c)) out.add(c);
  }
  return out;
}

Polyhedron alpha_box(const IntervalBox& box) {
  std::vector<Var> dims = box.vars();
  if (box.is_empty()) return Polyhedron::bottom(std::move(dims));
  Polyhedron p(std::move(dims));
  for (const auto& [v, ival] : box.intervals()) {
    if (ival.lo().is_finite()) {
      LinearExpression e = LinearExpression::variable(v);
      e.add_constant(Rational(-ival.lo().value()));
      p.add({std::move(e), LinRel::GeqZero});  // x - lo >= 0
    }
    if (ival.hi().is_finite()) {
      LinearExpression e = -LinearExpression::variable(v);
      e.add_constant(Rational(ival.hi().value()));
      p.add({std::move(e), LinRel::GeqZero});  // hi - x >= 0
    }
  }
  return p;
}

IntervalBox gamma_box(const Polyhedron& p) {
  IntervalBox box = IntervalBox::over(p.dims());
  auto empty_box = [&p]() {
    IntervalBox b;
    for (const auto& d : p.dims()) b.set(d, IntInterval::empty());
    return b;
  };
  if (poly_is_empty(p)) return empty_box();
  for (const auto& d : p.dims()) {
    LinearExpression obj = LinearExpression::variable(d);
    LpResult lo = simplex_optimize(p.constraints(), obj, Sense::Minimize);
    LpResult hi = simplex_optimize(p.constraints(), obj, Sense::Maximize);
    if (lo.status == LpStatus::Infeasible || hi.status == LpStatus::Infeasible)
      return empty_box();
    ExtInt l = lo.status == LpStatus::Unbounded ? ExtInt::neg_inf() : ExtInt(lo.value.ceil());
    ExtInt h = hi.status == LpStatus::Unbounded ? ExtInt::pos_inf() : ExtInt(hi.value.floor());
    if (h < l) return empty_box();
    box.set(d, IntInterval(l, h));
  }
  return box;
}

std::vector<std::map<Var, Int>> poly_integer_points(const Polyhedron& p,
                                                    const Int& budget) {
  IntervalBox box = gamma_box(p);
  if (box.is_empty()) return {};
  auto vol = box.volume();
  if (!vol) throw std::length_error("poly_integer_points: unbounded polyhedron");
  if (*vol > budget) throw std::length_error("poly_integer_points: budget exceeded");

  std::vector<std::map<Var, Int>> out;
  std::map<Var, Int> point;
  const auto& dims = p.dims();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == dims.size()) {
      if (p.contains_point(point)) out.push_back(point);
      return;
    }
    IntInterval ival = box.get(dims[i]);
    for (Int v = ival.lo().value(); v <= ival.hi().value(); ++v) {
      point[dims[i]] = v;
      self(self, i + 1);
    }
    point.erase(dims[i]);
  };
  rec(rec, 0);
  return out;
}

}  // namespace cbr
