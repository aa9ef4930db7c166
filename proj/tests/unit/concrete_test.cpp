#include <random>

#include "cbr/concrete.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cbr;
using namespace cbr::testutil;

namespace {

TupleSet ts(std::vector<Var> vars, std::vector<std::vector<long long>> tuples) {
  TupleSet s;
  s.vars = std::move(vars);
  for (auto& t : tuples) {
    std::vector<Int> row(t.begin(), t.end());
    s.tuples.insert(row);
  }
  return s;
}

ArcElement arc(std::vector<std::pair<Var, std::vector<long long>>> comps) {
  ArcElement a;
  for (auto& [v, vals] : comps) a.sets[v] = std::set<Int>(vals.begin(), vals.end());
  return a;
}

}  // namespace

TEST_CASE("alpha_arc projects componentwise") {
  ArcElement a = alpha_arc(ts({"x", "y"}, {{1, 2}, {2, 1}}));
  CHECK(a.sets == arc({{"x", {1, 2}}, {"y", {1, 2}}}).sets);

  ArcElement e = alpha_arc(ts({"x", "y"}, {}));
  CHECK(e.sets == arc({{"x", {}}, {"y", {}}}).sets);

  ArcElement b = alpha_arc(ts({"x", "y"}, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(b.sets == arc({{"x", {0, 1}}, {"y", {1, 2}}}).sets);
}

TEST_CASE("gamma_arc is the Cartesian product") {
  TupleSet s = gamma_arc(arc({{"x", {1, 2}}, {"y", {1, 2}}}));
  CHECK(s.tuples == ts({"x", "y"}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}).tuples);

  CHECK(gamma_arc(arc({{"x", {}}, {"y", {1, 2}}})).tuples.empty());
  CHECK(gamma_arc(arc({{"x", {7}}, {"y", {8}}})).tuples.size() == 1);

  ArcElement big = arc({{"x", {}}, {"y", {}}});
  for (long long i = 0; i < 2000; ++i) {
    big.sets["x"].insert(i);
    big.sets["y"].insert(i);
  }
  CHECK_THROWS_AS(gamma_arc(big), std::length_error);
}

TEST_CASE("interval hull and expansion round trip") {
  BoundElement b = alpha_inter(arc({{"x", {1, 3, 7}}}));
  CHECK(b.get("x") == IntInterval(ExtInt(1), ExtInt(7)));
  ArcElement back = gamma_inter(b);
  CHECK(back.sets.at("x") == std::set<Int>{1, 2, 3, 4, 5, 6, 7});

  CHECK(alpha_inter(arc({{"x", {}}})).is_empty());

  BoundElement point = alpha_inter(arc({{"x", {2}}}));
  CHECK(point.get("x") == IntInterval::singleton(2));
  CHECK(gamma_inter(point).sets.at("x") == std::set<Int>{2});

  IntervalBox inf_box;
  inf_box.set("x", IntInterval::universe());
  CHECK_THROWS_AS(gamma_inter(inf_box), std::length_error);
}

TEST_CASE("lattice operations") {
  ArcElement j = arc_join(arc({{"x", {1}}, {"y", {2}}}), arc({{"x", {2}}, {"y", {3}}}));
  CHECK(j.sets == arc({{"x", {1, 2}}, {"y", {2, 3}}}).sets);

  BoundElement m = bound_meet(make_box({{"x", {0, 5}}, {"y", {2, 9}}}),
                              make_box({{"x", {3, 7}}, {"y", {0, 4}}}));
  CHECK(m.get("x") == IntInterval(ExtInt(3), ExtInt(5)));
  CHECK(m.get("y") == IntInterval(ExtInt(2), ExtInt(4)));

  TupleSet disj = concrete_meet(ts({"x"}, {{1}, {2}}), ts({"x"}, {{3}}));
  CHECK(disj.tuples.empty());

  CHECK_THROWS_AS(arc_join(arc({{"x", {1}}}), arc({{"y", {1}}})), std::invalid_argument);
  CHECK(concrete_leq(ts({"x"}, {{1}}), ts({"x"}, {{1}, {2}})));
  CHECK_FALSE(concrete_leq(ts({"x"}, {{3}}), ts({"x"}, {{1}, {2}})));
}

namespace {

std::mt19937& rng() {
  static std::mt19937 r(99173);
  return r;
}

TupleSet random_tuple_set(int max_val, std::size_t nvars, int count) {
  std::vector<Var> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars.push_back("v" + std::to_string(i));
  TupleSet s;
  s.vars = vars;
  std::uniform_int_distribution<int> d(0, max_val);
  for (int k = 0; k < count; ++k) {
    std::vector<Int> t;
    for (std::size_t i = 0; i < nvars; ++i) t.push_back(Int(d(rng())));
    s.tuples.insert(t);
  }
  return s;
}

ArcElement random_arc(int max_val, std::size_t nvars) {
  ArcElement a;
  std::uniform_int_distribution<int> d(0, max_val);
  std::uniform_int_distribution<int> size_d(0, 3);
  for (std::size_t i = 0; i < nvars; ++i) {
    auto& s = a.sets["v" + std::to_string(i)];
    int n = size_d(rng());
    for (int k = 0; k < n; ++k) s.insert(Int(d(rng())));
  }
  return a;
}

}  // namespace

TEST_CASE("Galois laws for the arc abstraction") {
  for (int seed = 0; seed < 100; ++seed) {
    TupleSet s = random_tuple_set(3, 2, 4);
    ArcElement a = random_arc(3, 2);
    // alpha(S) <= A  iff  S <= gamma(A)
    CHECK(arc_leq(alpha_arc(s), a) == concrete_leq(s, gamma_arc(a)));
    // extensivity
    CHECK(concrete_leq(s, gamma_arc(alpha_arc(s))));
    // projection of a product is the product components (when no component
    // is empty)
    if (!a.any_empty()) CHECK(alpha_arc(gamma_arc(a)).sets == a.sets);
  }
}

TEST_CASE("Galois laws for the composed bound abstraction") {
  for (int seed = 0; seed < 100; ++seed) {
    TupleSet s = random_tuple_set(3, 2, 3);
    ArcElement a = random_arc(3, 2);
    BoundElement b = alpha_inter(a);
    BoundElement ab = alpha_inter(alpha_arc(s));
    // alpha_bound(S) <= B iff S <= gamma_bound(B)
    bool lhs = bound_leq(ab, b);
    bool rhs = concrete_leq(s, gamma_arc(gamma_inter(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("monotonicity of the abstraction maps") {
  for (int seed = 0; seed < 50; ++seed) {
    TupleSet s1 = random_tuple_set(3, 2, 3);
    TupleSet s2 = concrete_join(s1, random_tuple_set(3, 2, 3));
    CHECK(arc_leq(alpha_arc(s1), alpha_arc(s2)));
    ArcElement a1 = random_arc(3, 2);
    ArcElement a2 = arc_join(a1, random_arc(3, 2));
    CHECK(concrete_leq(gamma_arc(a1), gamma_arc(a2)));
    CHECK(bound_leq(alpha_inter(a1), alpha_inter(a2)));
  }
}
