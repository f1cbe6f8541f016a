#include <doctest.h>

#include "weavekit/rational.hpp"
#include "weavekit/split_time.hpp"

#include <random>
#include <vector>

using namespace weavekit;

TEST_CASE("rational arithmetic and comparisons") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(abs(Rat(-5, 7)) == Rat(5, 7));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational from double is exact on dyadics") {
  CHECK(Rat::from_double(0.125) == Rat(1, 8));
  CHECK(Rat::from_double(-3.5) == Rat(-7, 2));
  CHECK(Rat::from_double(0.0) == Rat(0));
  double x = 0.1;
  Rat r = Rat::from_double(x);
  CHECK(r.to_double() == x);
}

TEST_CASE("rational associativity on random small values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  for (int i = 0; i < 2000; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("split time lexicographic comparisons") {
  CHECK(cmp(minus_of(Rat(1)), plus_of(Rat(1))) == Ordering::Less);
  CHECK(cmp(plus_of(Rat(0)), plus_of(Rat(0))) == Ordering::Equal);
  CHECK(cmp(minus_of(Rat(2)), plus_of(Rat(1))) == Ordering::Greater);
}

TEST_CASE("split time total order on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), side(0, 1);
  auto draw = [&]() {
    return SplitTime{Rat(num(rng), den(rng)), side(rng) ? Side::Plus : Side::Minus};
  };
  for (int i = 0; i < 4000; ++i) {
    SplitTime a = draw(), b = draw(), c = draw();
    // exactly one of <, ==, > holds
    int rel = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
    CHECK(rel == 1);
    // transitivity
    if (a < b && b < c) CHECK(a < c);
    if (a <= b && b <= c) CHECK(a <= c);
  }
}

TEST_CASE("quotient consistency: side tags collapse to the real order") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), side(0, 1);
  for (int i = 0; i < 4000; ++i) {
    Rat t1(num(rng), den(rng)), t2(num(rng), den(rng));
    if (t1 == t2) continue;
    SplitTime a{t1, side(rng) ? Side::Plus : Side::Minus};
    SplitTime b{t2, side(rng) ? Side::Plus : Side::Minus};
    CHECK((a < b) == (t1 < t2));
  }
}

TEST_CASE("interval containment") {
  SplitInterval I(plus_of(Rat(0)), minus_of(Rat(1)));
  CHECK(interval_contains(I, minus_of(Rat(1, 2))));
  CHECK_FALSE(interval_contains(I, minus_of(Rat(0))));
  SplitInterval D(plus_of(Rat(0)), plus_of(Rat(0)));
  CHECK(interval_contains(D, plus_of(Rat(0))));
  CHECK_THROWS(SplitInterval(plus_of(Rat(1)), minus_of(Rat(1))));
}
