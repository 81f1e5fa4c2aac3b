// test_tail.cpp — symbolic tail sequences: term arithmetic, extrema,
// exact index lookup, counting and the derived transforms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amspec/tail.hpp"

#include <stdexcept>

using namespace amspec;

namespace {

TailSequence below_one() {
  // 1 - 1/n for n >= 2: 1/2, 2/3, 3/4, ... increasing to 1.
  return TailSequence(TailRule{Rational(1), TailDirection::FromBelow, Rational(1), 1, 2});
}

TailSequence above_two() {
  // 2 + 1/n for n >= 1: 3, 5/2, 7/3, ... decreasing to 2.
  return TailSequence(TailRule{Rational(2), TailDirection::FromAbove, Rational(1), 1, 1});
}

}  // namespace

TEST_CASE("term values follow the closed form exactly") {
  const TailSequence t = below_one();
  CHECK(t.value(2) == Rational(1, 2));
  CHECK(t.value(3) == Rational(2, 3));
  CHECK(t.value(10) == Rational(9, 10));
  CHECK(t.limit() == Rational(1));
  CHECK(t.increasing());
  CHECK(t.is_plain());

  const TailSequence s = above_two();
  CHECK(s.value(1) == Rational(3));
  CHECK(s.value(2) == Rational(5, 2));
  CHECK(s.value(7) == Rational(15, 7));
  CHECK(s.limit() == Rational(2));
  CHECK_FALSE(s.increasing());

  // quadratic decay: 1/n^2 from n = 3
  const TailSequence q =
      TailSequence(TailRule{Rational(0), TailDirection::FromAbove, Rational(1), 2, 3});
  CHECK(q.value(3) == Rational(1, 9));
  CHECK(q.value(10) == Rational(1, 100));
  CHECK_THROWS_AS(q.value(2), std::invalid_argument);
}

TEST_CASE("construction validates the rule and the extension fields") {
  CHECK_THROWS_AS(TailSequence(TailRule{Rational(-1), TailDirection::FromAbove, Rational(1), 1, 1}),
                  std::invalid_argument);  // negative limit
  CHECK_THROWS_AS(TailSequence(TailRule{Rational(1), TailDirection::FromAbove, Rational(0), 1, 1}),
                  std::invalid_argument);  // zero coefficient
  CHECK_THROWS_AS(TailSequence(TailRule{Rational(1), TailDirection::FromAbove, Rational(1), 0, 1}),
                  std::invalid_argument);  // zero exponent
  CHECK_THROWS_AS(TailSequence(TailRule{Rational(1), TailDirection::FromAbove, Rational(1), 1, 0}),
                  std::invalid_argument);  // start_index 0
  // 1 - 2/n at n = 1 is negative
  CHECK_THROWS_AS(TailSequence(TailRule{Rational(1), TailDirection::FromBelow, Rational(2), 1, 1}),
                  std::invalid_argument);
  // power 0 and sign 2 are rejected
  CHECK_THROWS_AS(TailSequence(below_one().rule(), 0, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(TailSequence(below_one().rule(), 1, Rational(0), 2), std::invalid_argument);
  // negative power over a base that reaches 0: (1 - 1/n)^-1 needs start >= 2
  CHECK_THROWS_AS(TailSequence(TailRule{Rational(1), TailDirection::FromBelow, Rational(1), 1, 1},
                               -1, Rational(0), 1),
                  std::invalid_argument);
  // sign -1 with offset below the suppressed value goes negative
  CHECK_THROWS_AS(TailSequence(above_two().rule(), 1, Rational(1), -1), std::invalid_argument);
}

TEST_CASE("infimum and supremum report attainment by direction") {
  const TailSequence t = below_one();  // increasing
  CHECK(t.inf_value() == Rational(1, 2));
  CHECK(t.inf_attained());  // first term
  CHECK(t.sup_value() == Rational(1));
  CHECK_FALSE(t.sup_attained());  // the limit is only approached

  const TailSequence s = above_two();  // decreasing
  CHECK(s.inf_value() == Rational(2));
  CHECK_FALSE(s.inf_attained());
  CHECK(s.sup_value() == Rational(3));
  CHECK(s.sup_attained());
}

TEST_CASE("index_of solves value(n) == v exactly or reports absence") {
  const TailSequence t = below_one();
  // 1 - 1/n = 9/10  =>  n = 10
  CHECK(t.index_of(Rational(9, 10)) == 10);
  CHECK(t.index_of(Rational(1, 2)) == 2);
  // 1 - 1/n = 17/32  =>  n = 32/15, not an integer
  CHECK_FALSE(t.index_of(Rational(17, 32)).has_value());
  // the limit itself is never a term
  CHECK_FALSE(t.index_of(Rational(1)).has_value());
  // before the start index: 1 - 1/1 = 0 is not listed when start is 2
  CHECK_FALSE(t.index_of(Rational(0)).has_value());

  // quadratic: 1/n^2 = 1/49 => n = 7; 1/50 has no integral root
  const TailSequence q =
      TailSequence(TailRule{Rational(0), TailDirection::FromAbove, Rational(1), 2, 1});
  CHECK(q.index_of(Rational(1, 49)) == 7);
  CHECK_FALSE(q.index_of(Rational(1, 50)).has_value());

  // transformed sequence: (1 - 1/n)^-1 = n/(n-1); 4/3 is the n = 4 term
  const TailSequence r = below_one().pseudo_reciprocal();
  CHECK(r.index_of(Rational(4, 3)) == 4);
  CHECK_FALSE(r.index_of(Rational(7, 5)).has_value());
}

TEST_CASE("count_above and count_below match brute enumeration") {
  const TailSequence t = below_one();
  // increasing to 1: everything below the limit is exceeded infinitely often
  CHECK(t.count_above(Rational(3, 4), true).infinite);
  CHECK(t.count_above(Rational(1), true).count == 0);
  CHECK_FALSE(t.count_above(Rational(1), true).infinite);
  // strictly below 3/4: n in {2, 3} -> 2 terms; nonstrict adds n = 4
  const auto below_strict = t.count_below(Rational(3, 4), true);
  CHECK_FALSE(below_strict.infinite);
  CHECK(below_strict.count == 2);
  CHECK(t.count_below(Rational(3, 4), false).count == 3);
  CHECK(t.count_below(Rational(1), true).infinite);

  const TailSequence s = above_two();
  // decreasing to 2: above 9/4 strictly are n in {1, 2, 3}; n = 4 ties
  CHECK(s.count_above(Rational(9, 4), true).count == 3);
  CHECK(s.count_above(Rational(9, 4), false).count == 4);
  CHECK(s.count_above(Rational(2), true).infinite);
  CHECK(s.count_below(Rational(2), false).count == 0);
  CHECK(s.count_below(Rational(5, 2), true).infinite);

  // brute-force cross-check over the first 3000 terms with thresholds around
  // term values, both strict and not
  for (const Rational& v : {Rational(9, 10), Rational(17, 32), Rational(999, 1000)}) {
    std::int64_t above = 0, below = 0, above_eq = 0, below_eq = 0;
    for (std::int64_t n = 2; n < 3002; ++n) {
      const Rational x = t.value(n);
      above += x > v;
      above_eq += x >= v;
      below += x < v;
      below_eq += x <= v;
    }
    CHECK(t.count_above(v, true).infinite);  // v < 1, so infinitely many above
    CHECK(t.count_below(v, true).count == below);
    CHECK(t.count_below(v, false).count == below_eq);
    std::int64_t s_above = 0, s_above_eq = 0;
    const Rational w = v + 2;  // shift the threshold into (2, 3)
    for (std::int64_t n = 1; n < 3001; ++n) {
      const Rational x = s.value(n);
      s_above += x > w;
      s_above_eq += x >= w;
    }
    CHECK(s.count_above(w, true).count == s_above);
    CHECK(s.count_above(w, false).count == s_above_eq);
  }
}

TEST_CASE("with_start drops a prefix and keeps the closed form") {
  const TailSequence t = below_one().with_start(5);
  CHECK(t.start_index() == 5);
  CHECK(t.value(5) == Rational(4, 5));
  CHECK(t.inf_value() == Rational(4, 5));
  CHECK(t.limit() == Rational(1));
  CHECK_THROWS_AS(below_one().with_start(1), std::invalid_argument);
}

TEST_CASE("pseudo_reciprocal inverts values and is an involution") {
  const TailSequence t = below_one();
  const TailSequence r = t.pseudo_reciprocal();
  // (1 - 1/n)^-1 = n/(n-1): 2, 3/2, 4/3, ... decreasing to 1
  CHECK(r.value(2) == Rational(2));
  CHECK(r.value(3) == Rational(3, 2));
  CHECK(r.limit() == Rational(1));
  CHECK_FALSE(r.increasing());
  CHECK(r.power() == -1);
  CHECK(r.pseudo_reciprocal() == t);

  // offset or a zero infimum blocks inversion
  const TailSequence with_offset(above_two().rule(), 1, Rational(1), 1);
  CHECK_THROWS_AS(with_offset.pseudo_reciprocal(), std::domain_error);
  const TailSequence to_zero(TailRule{Rational(0), TailDirection::FromAbove, Rational(1), 1, 1});
  CHECK_THROWS_AS(to_zero.pseudo_reciprocal(), std::domain_error);
}

TEST_CASE("squared doubles the power") {
  const TailSequence t = below_one().squared();
  CHECK(t.value(2) == Rational(1, 4));
  CHECK(t.value(3) == Rational(4, 9));
  CHECK(t.limit() == Rational(1));
  CHECK(t.power() == 2);
  CHECK(t.increasing());
  // squaring the reciprocal gives power -2: (n/(n-1))^2
  const TailSequence r = below_one().pseudo_reciprocal().squared();
  CHECK(r.power() == -2);
  CHECK(r.value(2) == Rational(4));
  CHECK(r.value(3) == Rational(9, 4));
  CHECK_THROWS_AS(TailSequence(above_two().rule(), 1, Rational(1), 1).squared(),
                  std::domain_error);
}

TEST_CASE("compact-part form offset + sign carries beta - value exactly") {
  // 1 - (1 - 1/n) = 1/n for n >= 2, decreasing to 0
  const TailSequence k(below_one().rule(), 1, Rational(1), -1);
  CHECK(k.value(2) == Rational(1, 2));
  CHECK(k.value(10) == Rational(1, 10));
  CHECK(k.limit() == Rational(0));
  CHECK_FALSE(k.increasing());
  CHECK(k.inf_value() == Rational(0));
  CHECK_FALSE(k.inf_attained());
  CHECK_FALSE(k.is_plain());
  // index lookup still works through the transform: 1 - (1 - 1/n) = 1/7
  CHECK(k.index_of(Rational(1, 7)) == 7);
  CHECK_FALSE(k.index_of(Rational(2, 13)).has_value());
}
