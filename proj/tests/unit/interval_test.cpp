#include "cbr/interval.hpp"
#include "doctest.h"

using namespace cbr;

TEST_CASE("extended integers") {
  CHECK(ExtInt::neg_inf() < ExtInt(0));
  CHECK(ExtInt(0) < ExtInt::pos_inf());
  CHECK(ExtInt::neg_inf() < ExtInt::pos_inf());
  CHECK(ExtInt(3) + ExtInt(4) == ExtInt(7));
  CHECK(ExtInt(3) + ExtInt::pos_inf() == ExtInt::pos_inf());
  CHECK(-ExtInt::pos_inf() == ExtInt::neg_inf());
  CHECK(ExtInt(0) * ExtInt::pos_inf() == ExtInt(0));
  CHECK(ExtInt(-2) * ExtInt::pos_inf() == ExtInt::neg_inf());
  CHECK_THROWS_AS(ExtInt::pos_inf() + ExtInt::neg_inf(), std::logic_error);
}

TEST_CASE("interval basics") {
  IntInterval i(ExtInt(0), ExtInt(5));
  CHECK_FALSE(i.is_empty());
  CHECK(i.width() == Int(6));
  CHECK(i.contains(Int(0)));
  CHECK(i.contains(Int(5)));
  CHECK_FALSE(i.contains(Int(6)));

  CHECK(IntInterval(ExtInt(3), ExtInt(1)).is_empty());
  CHECK(IntInterval::empty().is_empty());
  CHECK_FALSE(IntInterval::universe().is_finite());
  CHECK(IntInterval::universe().includes(i));

  CHECK(i.meet(IntInterval(ExtInt(2), ExtInt(9))) == IntInterval(ExtInt(2), ExtInt(5)));
  CHECK(i.join(IntInterval(ExtInt(7), ExtInt(9))) == IntInterval(ExtInt(0), ExtInt(9)));
  CHECK(i.join(IntInterval::empty()) == i);
}

TEST_CASE("box collapses to canonical empty") {
  IntervalBox b;
  b.set("x", IntInterval(ExtInt(0), ExtInt(3)));
  b.set("y", IntInterval(ExtInt(1), ExtInt(2)));
  CHECK_FALSE(b.is_empty());
  CHECK(b.volume() == Int(8));

  b.set("x", IntInterval::empty());
  CHECK(b.is_empty());
  CHECK(b.get("y").is_empty());
  CHECK(b.volume() == Int(0));
}

TEST_CASE("box meet and join") {
  IntervalBox a;
  a.set("x", IntInterval(ExtInt(0), ExtInt(5)));
  a.set("y", IntInterval(ExtInt(2), ExtInt(9)));
  IntervalBox b;
  b.set("x", IntInterval(ExtInt(3), ExtInt(7)));
  b.set("y", IntInterval(ExtInt(0), ExtInt(4)));

  IntervalBox m = a.meet(b);
  CHECK(m.get("x") == IntInterval(ExtInt(3), ExtInt(5)));
  CHECK(m.get("y") == IntInterval(ExtInt(2), ExtInt(4)));

  IntervalBox j = a.join(b);
  CHECK(j.get("x") == IntInterval(ExtInt(0), ExtInt(7)));
  CHECK(j.get("y") == IntInterval(ExtInt(0), ExtInt(9)));

  CHECK(j.includes(a));
  CHECK(j.includes(b));
  CHECK(a.includes(m));

  // disjoint components collapse the meet
  IntervalBox c;
  c.set("x", IntInterval(ExtInt(10), ExtInt(11)));
  CHECK(a.meet(c).is_empty());
}
