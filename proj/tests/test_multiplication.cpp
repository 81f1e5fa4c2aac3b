// test_multiplication.cpp — multiplication operators on measure spaces:
// essential bounds, attainment, diagonal equivalence and level exhaustion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amspec/multiplication.hpp"

#include <stdexcept>

using namespace amspec;

namespace {

TailSequence below_one_from_2() {
  // 1 - 1/n for n >= 2
  return TailSequence(TailRule{Rational(1), TailDirection::FromBelow, Rational(1), 1, 2});
}

MeasureCell atom(const char* label, const Rational& value) {
  return {label, CellKind::Atom, Rational(1), Scalar(value, {1.0, 0.0})};
}

MeasureCell diffuse(const char* label, const Rational& weight, const Scalar& symbol) {
  return {label, CellKind::Diffuse, weight, symbol};
}

// one atom at 2, a diffuse piece with |f| = 1, and the atom tail 1 - 1/n
MeasureSpaceModel mixed() {
  return make_measure_model(
      {atom("a2", Rational(2)), diffuse("u", Rational(3), Scalar(Rational(1), {0.0, 1.0}))},
      {{below_one_from_2(), {1.0, 0.0}}});
}

}  // namespace

TEST_CASE("validation needs labelled cells with positive weight") {
  CHECK_THROWS_AS(make_measure_model({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_measure_model({atom("", Rational(1))}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_measure_model({atom("a", Rational(1)), atom("a", Rational(2))}, {}),
                  std::invalid_argument);  // duplicate label
  CHECK_THROWS_AS(
      make_measure_model({{"w", CellKind::Atom, Rational(0), Scalar(Rational(1), {1.0, 0.0})}}, {}),
      std::invalid_argument);  // zero weight
  CHECK_THROWS_AS(make_measure_model({}, {{below_one_from_2(), {0.5, 0.5}}}),
                  std::invalid_argument);  // non-unit phase
}

TEST_CASE("essential bounds of |f| scan cells and tail extrema") {
  const MeasureSpaceModel m = mixed();
  CHECK(ess_inf_abs(m) == Rational(1, 2));  // first tail term
  CHECK(ess_sup_abs(m) == Rational(2));     // the atom
  CHECK(min_modulus_mult(m) == Rational(1, 2));

  const MultAttainment att = is_min_attaining_mult(m);
  CHECK(att.min_modulus == Rational(1, 2));
  CHECK(att.attained);
  CHECK(att.witness == "tail[0] n=2");

  // unattained: a single tail decreasing to 2
  const MeasureSpaceModel open = make_measure_model(
      {}, {{TailSequence(TailRule{Rational(2), TailDirection::FromAbove, Rational(1), 1, 1}),
            {1.0, 0.0}}});
  CHECK(min_modulus_mult(open) == Rational(2));
  CHECK_FALSE(is_min_attaining_mult(open).attained);

  // a cell witness is preferred and reported by label
  const MeasureSpaceModel at_cell =
      make_measure_model({atom("low", Rational(1, 2))}, {{below_one_from_2(), {1.0, 0.0}}});
  CHECK(is_min_attaining_mult(at_cell).witness == "low");
}

TEST_CASE("to_diagonal matches the measure model functionals") {
  const MeasureSpaceModel m = mixed();
  const NormalDiagonalModel d = to_diagonal(m);
  REQUIRE(d.cells.size() == 2);
  CHECK(d.cells[0].value == Scalar(Rational(2), {1.0, 0.0}));
  CHECK(d.cells[0].mult == Multiplicity::finite(1));
  CHECK(d.cells[1].value == Scalar(Rational(1), {0.0, 1.0}));
  CHECK(d.cells[1].mult == Multiplicity::infinite());
  REQUIRE(d.tails.size() == 1);
  CHECK(d.tails[0].seq == below_one_from_2());

  CHECK(min_modulus(d) == min_modulus_mult(m));
  CHECK(is_min_attaining(d).attained == is_min_attaining_mult(m).attained);
  CHECK(classify_am_normal(d).is_am == classify_am_mult(m).is_am);
}

TEST_CASE("AM exhaustion peels ascending attained levels until the budget") {
  const MultAMClassification am = classify_am_mult(mixed());
  CHECK(am.is_am);  // essential moduli {1}, increasing tail
  CHECK(am.reason == AMReason::OK);

  // the tail keeps attaining below the diffuse level 1, so the peel never
  // terminates and stops at the budget of 32 rounds
  REQUIRE(am.trace.levels.size() == 32);
  CHECK(am.trace.levels[0].value == Rational(1, 2));
  CHECK(am.trace.levels[0].members == std::vector<std::string>{"tail[0] n=2"});
  CHECK(am.trace.levels[1].value == Rational(2, 3));
  CHECK(am.trace.levels[1].members == std::vector<std::string>{"tail[0] n=3"});
  CHECK(am.trace.levels[2].value == Rational(3, 4));
  CHECK(am.trace.levels[31].value == Rational(32, 33));
  CHECK(am.trace.truncated);
  CHECK_FALSE(am.trace.complete);
  CHECK(am.trace.failure.empty());
}

TEST_CASE("AN exhaustion reports the first unattained level") {
  const MultANClassification an = classify_an_mult(mixed());
  CHECK_FALSE(an.is_an);  // the increasing tail leaves eigenvalues below m_e
  CHECK(an.reason == ANReason::InfinitelyManyEigenvaluesBelowMe);

  // descending: the atom at 2, then the diffuse piece at 1; after that only
  // the tail remains, whose supremum 1 is approached but never attained
  REQUIRE(an.trace.levels.size() == 2);
  CHECK(an.trace.levels[0].value == Rational(2));
  CHECK(an.trace.levels[0].members == std::vector<std::string>{"a2"});
  CHECK(an.trace.levels[1].value == Rational(1));
  CHECK(an.trace.levels[1].members == std::vector<std::string>{"u"});
  CHECK(an.trace.failure == "the level at 1 is only approached, never attained");
  CHECK_FALSE(an.trace.complete);
  CHECK_FALSE(an.trace.truncated);
}

TEST_CASE("a purely diffuse symbol is AM and AN with a complete trace") {
  const MeasureSpaceModel m =
      make_measure_model({diffuse("u", Rational(5), Scalar(Rational(3), {1.0, 0.0}))}, {});
  const MultAMClassification am = classify_am_mult(m);
  CHECK(am.is_am);
  REQUIRE(am.trace.levels.size() == 1);
  CHECK(am.trace.levels[0].value == Rational(3));
  CHECK(am.trace.levels[0].members == std::vector<std::string>{"u"});
  CHECK(am.trace.complete);
  CHECK_FALSE(am.trace.truncated);
  const MultANClassification an = classify_an_mult(m);
  CHECK(an.is_an);
  CHECK(an.trace.complete);
}

TEST_CASE("two diffuse levels break the essential singleton") {
  const MeasureSpaceModel m = make_measure_model(
      {diffuse("lo", Rational(1), Scalar(Rational(1), {1.0, 0.0})),
       diffuse("hi", Rational(1), Scalar(Rational(2), {1.0, 0.0}))}, {});
  const MultAMClassification am = classify_am_mult(m);
  CHECK_FALSE(am.is_am);
  CHECK(am.reason == AMReason::EssentialSpectrumNotSingleton);
  // the trace itself still peels both levels and completes
  REQUIRE(am.trace.levels.size() == 2);
  CHECK(am.trace.levels[0].value == Rational(1));
  CHECK(am.trace.levels[1].value == Rational(2));
  CHECK(am.trace.complete);
  CHECK(classify_an_mult(m).reason == ANReason::EssentialSpectrumNotSingleton);
}

TEST_CASE("finite measure models cannot be classified") {
  const MeasureSpaceModel fin = make_measure_model({atom("a", Rational(1))}, {});
  CHECK_THROWS_WITH_AS(classify_am_mult(fin),
                       "classification requires an infinite-dimensional model",
                       std::invalid_argument);
  CHECK_THROWS_AS(classify_an_mult(fin), std::invalid_argument);
}
