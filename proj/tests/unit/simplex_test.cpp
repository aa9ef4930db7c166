#include <chrono>

#include "cbr/simplex.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cbr;
using namespace cbr::testutil;

TEST_CASE("sup of x over the corner-relaxation system is 179/19") {
  auto p = corner_trace_polyhedron();
  auto t0 = std::chrono::steady_clock::now();
  LpResult r = simplex_optimize(p.constraints(), LinearExpression::variable("x"),
                                Sense::Maximize);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(179, 19));
  CHECK(ms < 100);
  // the reported optimum is attained by the witness point
  std::map<Var, Rational> pt = r.point;
  for (const auto& c : p.constraints()) CHECK(c.satisfied_by(pt));
  CHECK(pt.at("x") == Rational(179, 19));
}

TEST_CASE("explicit bounds") {
  std::vector<LinearConstraint> cs{geq0({{"x", 1}}, 0), geq0({{"x", -1}}, 3)};
  LpResult mx = simplex_optimize(cs, LinearExpression::variable("x"), Sense::Maximize);
  CHECK(mx.status == LpStatus::Optimal);
  CHECK(mx.value == Rational(3));
  LpResult mn = simplex_optimize(cs, LinearExpression::variable("x"), Sense::Minimize);
  CHECK(mn.status == LpStatus::Optimal);
  CHECK(mn.value == Rational(0));
}

TEST_CASE("contradictory bounds are infeasible") {
  std::vector<LinearConstraint> cs{geq0({{"x", -1}}, 0), geq0({{"x", 1}}, -1)};
  LpResult r = simplex_optimize(cs, LinearExpression::variable("x"), Sense::Minimize);
  CHECK(r.status == LpStatus::Infeasible);
  CHECK(lp_infeasible(cs));
}

TEST_CASE("unbounded directions are reported") {
  std::vector<LinearConstraint> cs{geq0({{"x", 1}}, 0)};
  CHECK(simplex_optimize(cs, LinearExpression::variable("x"), Sense::Maximize).status ==
        LpStatus::Unbounded);
  CHECK(simplex_optimize(cs, LinearExpression::variable("x"), Sense::Minimize).status ==
        LpStatus::Optimal);
}

TEST_CASE("free variables and equalities") {
  // x unrestricted in sign: minimize x subject to x = y - 10, y >= 0.
  std::vector<LinearConstraint> cs{eq0({{"x", 1}, {"y", -1}}, 10), geq0({{"y", 1}}, 0)};
  LpResult r = simplex_optimize(cs, LinearExpression::variable("x"), Sense::Minimize);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(-10));
}

TEST_CASE("constant objective over the universe") {
  LinearExpression five{Rational(5)};
  LpResult r = simplex_optimize(std::vector<LinearConstraint>{}, five, Sense::Maximize);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(5));
}

TEST_CASE("degenerate systems do not cycle") {
  // Klee-Minty-ish degenerate cube corner with redundant rows.
  std::vector<LinearConstraint> cs{
      geq0({{"x", 1}}, 0),          geq0({{"y", 1}}, 0),
      geq0({{"z", 1}}, 0),          geq0({{"x", -1}}, 1),
      geq0({{"x", -1}, {"y", -1}}, 1), geq0({{"x", -1}, {"y", -1}, {"z", -1}}, 1),
      geq0({{"x", -1}, {"y", -1}}, 1)};
  LinearExpression obj = lin({{"x", 1}, {"y", 1}, {"z", 1}});
  LpResult r = simplex_optimize(cs, obj, Sense::Maximize);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(1));
}
