#include <random>

#include "cbr/filtering.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cbr;
using namespace cbr::testutil;

namespace {

TupleSet grid(std::vector<Var> vars, long long lo, long long hi) {
  IntervalBox b;
  for (const auto& v : vars) b.set(v, IntInterval(ExtInt(Int(lo)), ExtInt(Int(hi))));
  TupleSet s = tuple_set_from_box(b);
  TupleSet out;
  out.vars = vars;  // keep the caller's order
  for (const auto& t : s.tuples) {
    Valuation val = s.valuation(t);
    std::vector<Int> row;
    for (const auto& v : vars) row.push_back(val.at(v));
    out.tuples.insert(row);
  }
  return out;
}

ArcElement arc(std::vector<std::pair<Var, std::vector<long long>>> comps) {
  ArcElement a;
  for (auto& [v, vals] : comps) a.sets[v] = std::set<Int>(vals.begin(), vals.end());
  return a;
}

}  // namespace

TEST_CASE("constraint evaluation") {
  CHECK_FALSE(ne(cvar("x"), cvar("y")).eval({{"x", 1}, {"y", 1}}));
  CHECK(eq(cvar("z"), cvar("x") * cvar("y")).eval({{"x", 2}, {"y", 2}, {"z", 4}}));
  CHECK(le(cvar("x"), cvar("y")).eval({{"x", 0}, {"y", 0}}));
  CHECK_THROWS_AS(le(cvar("x"), cvar("y")).eval({{"x", 0}}), std::out_of_range);
  CHECK(eq(cvar("z"), cvar("x") * cvar("y")).sexpr() == "(= z (* x y))");
}

TEST_CASE("exact filter keeps exactly the satisfying tuples") {
  TupleSet d = grid({"x", "y", "z"}, 1, 2);
  TupleSet f = exact_filter(ne(cvar("x"), cvar("y")), d);
  CHECK(f.tuples.size() == 4);  // removes (1,1,1),(1,1,2),(2,2,1),(2,2,2)
  CHECK_FALSE(f.tuples.count({Int(1), Int(1), Int(1)}));
  CHECK_FALSE(f.tuples.count({Int(2), Int(2), Int(2)}));
  CHECK(f.tuples.count({Int(1), Int(2), Int(1)}));

  // tautology and contradiction
  CHECK(exact_filter(eq(cvar("x"), cvar("x")), d).tuples == d.tuples);
  CHECK(exact_filter(ne(cvar("x"), cvar("x")), d).tuples.empty());
}

TEST_CASE("solve_exact reaches the greatest fixpoint") {
  // the three-coloring triangle over {1,2} has no solution
  std::vector<Constraint> triangle{ne(cvar("x"), cvar("y")), ne(cvar("y"), cvar("z")),
                                   ne(cvar("z"), cvar("x"))};
  CHECK(solve_exact(triangle, grid({"x", "y", "z"}, 1, 2)).tuples.empty());

  // z = x + y and z = x * y over the running example box
  IntervalBox b = make_box({{"x", {-7, 10}}, {"y", {-7, 10}}, {"z", {3, 10}}});
  TupleSet d = tuple_set_from_box(b);
  std::vector<Constraint> cs{eq(cvar("z"), cvar("x") + cvar("y")),
                             eq(cvar("z"), cvar("x") * cvar("y"))};
  TupleSet sols = solve_exact(cs, d);
  REQUIRE(sols.tuples.size() == 1);
  CHECK(*sols.tuples.begin() == std::vector<Int>{2, 2, 4});

  CHECK(solve_exact({}, d).tuples == d.tuples);
}

TEST_CASE("domain filter examples") {
  ArcElement a = domain_filter(ne(cvar("x"), cvar("y")), arc({{"x", {1}}, {"y", {1, 2}}}));
  CHECK(a.sets == arc({{"x", {1}}, {"y", {2}}}).sets);

  ArcElement m = domain_filter(eq(cvar("z"), cvar("x") * cvar("y")),
                               arc({{"x", {2}}, {"y", {2}},
                                    {"z", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}}));
  CHECK(m.sets == arc({{"x", {2}}, {"y", {2}}, {"z", {4}}}).sets);

  ArcElement e = domain_filter(eq(cvar("x"), cvar("y")), arc({{"x", {}}, {"y", {1, 2}}}));
  CHECK(e.sets == arc({{"x", {}}, {"y", {}}}).sets);
}

TEST_CASE("bound filter primitive shapes") {
  // x <= y over ([0,5],[2,3]) -> ([0,3],[2,3])
  BoundElement r = bound_filter(le(cvar("x"), cvar("y")), make_box({{"x", {0, 5}}, {"y", {2, 3}}}));
  CHECK(r.get("x") == IntInterval(ExtInt(0), ExtInt(3)));
  CHECK(r.get("y") == IntInterval(ExtInt(2), ExtInt(3)));

  // x = y + z with x in [0,10], y in [1,2], z in [3,4] -> x in [4,6]
  BoundElement s = bound_filter(eq(cvar("x"), cvar("y") + cvar("z")),
                                make_box({{"x", {0, 10}}, {"y", {1, 2}}, {"z", {3, 4}}}));
  CHECK(s.get("x") == IntInterval(ExtInt(4), ExtInt(6)));
  CHECK(s.get("y") == IntInterval(ExtInt(1), ExtInt(2)));
  CHECK(s.get("z") == IntInterval(ExtInt(3), ExtInt(4)));

  // the running example box is already bound-consistent for both constraints
  IntervalBox b = make_box({{"x", {-7, 10}}, {"y", {-7, 10}}, {"z", {3, 10}}});
  CHECK(bound_filter(eq(cvar("z"), cvar("x") + cvar("y")), b) == b);
  CHECK(bound_filter(eq(cvar("z"), cvar("x") * cvar("y")), b) == b);
}

TEST_CASE("bound filter on wide boxes uses interval rules") {
  BoundFilterOptions tiny;
  tiny.exact_cap = 1;  // force the interval paths

  BoundElement r = bound_filter(lt(cvar("x"), cvar("y")),
                                make_box({{"x", {0, 100000}}, {"y", {0, 50}}}), tiny);
  CHECK(r.get("x") == IntInterval(ExtInt(0), ExtInt(49)));

  IntervalBox half;
  half.set("x", IntInterval::universe());
  half.set("y", IntInterval(ExtInt(0), ExtInt(10)));
  BoundElement s = bound_filter(eq(cvar("x"), cvar("y") + cint(100)), half, tiny);
  CHECK(s.get("x") == IntInterval(ExtInt(100), ExtInt(110)));

  // product pruning with signs
  BoundElement m = bound_filter(eq(cvar("z"), cvar("x") * cvar("y")),
                                make_box({{"x", {-1000, 1000}}, {"y", {2, 3}}, {"z", {6, 6}}}),
                                tiny);
  CHECK(m.get("x") == IntInterval(ExtInt(2), ExtInt(3)));

  // disequality trims only matching endpoints
  BoundElement n = bound_filter(ne(cvar("x"), cint(0)),
                                make_box({{"x", {0, 100000}}}), tiny);
  CHECK(n.get("x") == IntInterval(ExtInt(1), ExtInt(100000)));
}

namespace {

std::mt19937& rng() {
  static std::mt19937 r(5150);
  return r;
}

Expr random_expr(const std::vector<Var>& vars, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 4);
  std::uniform_int_distribution<int> const_d(-3, 3);
  std::uniform_int_distribution<std::size_t> var_d(0, vars.size() - 1);
  switch (kind(rng())) {
    case 0:
      return cint(const_d(rng()));
    case 1:
      return cvar(vars[var_d(rng())]);
    case 2:
      return random_expr(vars, depth - 1) + random_expr(vars, depth - 1);
    case 3:
      return random_expr(vars, depth - 1) - random_expr(vars, depth - 1);
    default:
      return random_expr(vars, depth - 1) * random_expr(vars, depth - 1);
  }
}

Constraint random_constraint(const std::vector<Var>& vars) {
  std::uniform_int_distribution<int> rel_d(0, 5);
  Expr a = random_expr(vars, 2);
  Expr b = random_expr(vars, 2);
  switch (rel_d(rng())) {
    case 0: return lt(a, b);
    case 1: return le(a, b);
    case 2: return gt(a, b);
    case 3: return ge(a, b);
    case 4: return eq(a, b);
    default: return ne(a, b);
  }
}

ArcElement random_small_arc(const std::vector<Var>& vars) {
  std::uniform_int_distribution<int> val_d(-2, 3);
  std::uniform_int_distribution<int> size_d(1, 4);
  ArcElement a;
  for (const auto& v : vars) {
    int n = size_d(rng());
    while (static_cast<int>(a.sets[v].size()) < n) a.sets[v].insert(Int(val_d(rng())));
  }
  return a;
}

}  // namespace

TEST_CASE("domain filter equals the composed abstraction oracle") {
  std::vector<Var> vars{"x", "y", "z"};
  for (int seed = 0; seed < 100; ++seed) {
    Constraint c = random_constraint(vars);
    ArcElement a = random_small_arc(vars);
    ArcElement fast = domain_filter(c, a);
    ArcElement oracle = alpha_arc(exact_filter(c, gamma_arc(a)));
    // composition collapses everything when the image is empty
    if (oracle.any_empty()) oracle = oracle.emptied();
    CHECK(fast.sets == oracle.sets);
  }
}

TEST_CASE("bound filter equals the composed domain oracle on finite boxes") {
  std::vector<Var> vars{"x", "y", "z"};
  for (int seed = 0; seed < 100; ++seed) {
    Constraint c = random_constraint(vars);
    ArcElement a = random_small_arc(vars);
    BoundElement b = alpha_inter(a);
    BoundElement fast = bound_filter(c, b);
    ArcElement filtered = domain_filter(c, gamma_inter(b));
    BoundElement oracle = alpha_inter(filtered);
    CHECK(fast == oracle);
  }
}

TEST_CASE("filters never remove solutions") {
  std::vector<Var> vars{"x", "y"};
  for (int seed = 0; seed < 100; ++seed) {
    std::vector<Constraint> cs{random_constraint(vars), random_constraint(vars)};
    ArcElement a = random_small_arc(vars);
    TupleSet sols = solve_exact(cs, gamma_arc(a));

    ArcElement arc_fix = domain_fixpoint(cs, a);
    TupleSet arc_conc = gamma_arc(arc_fix);
    CHECK(concrete_leq(sols, arc_conc));

    BoundElement bound_fix = bound_fixpoint(cs, alpha_inter(a));
    TupleSet bound_conc = gamma_arc(gamma_inter(bound_fix));
    // the weakening ladder: domain filtering is at least as strong
    CHECK(concrete_leq(sols, bound_conc));
    CHECK(concrete_leq(arc_conc, bound_conc));
  }
}

TEST_CASE("filters are contracting and monotone") {
  std::vector<Var> vars{"x", "y"};
  for (int seed = 0; seed < 50; ++seed) {
    Constraint c = random_constraint(vars);
    ArcElement a = random_small_arc(vars);
    ArcElement fa = domain_filter(c, a);
    CHECK(arc_leq(fa, a));  // contracting
    ArcElement bigger = arc_join(a, random_small_arc(vars));
    CHECK(arc_leq(fa, domain_filter(c, bigger)));  // monotone

    BoundElement b = alpha_inter(a);
    BoundElement fb = bound_filter(c, b);
    CHECK(bound_leq(fb, b));
    // monotone on boxes over the same variables
    BoundElement wider = bound_join(b, alpha_inter(bigger));
    CHECK(wider.includes(bound_filter(c, wider)));
    CHECK(bound_filter(c, wider).includes(fb));
  }
}
