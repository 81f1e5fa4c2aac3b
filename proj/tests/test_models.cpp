// test_models.cpp — diagonal model construction, canonical enumeration,
// functionals, derived operators and coordinate restrictions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amspec/models.hpp"

#include <stdexcept>

using namespace amspec;

namespace {

TailSequence below(const Rational& limit, std::int64_t start = 1) {
  return TailSequence(TailRule{limit, TailDirection::FromBelow, Rational(1), 1, start});
}

TailSequence above(const Rational& limit, std::int64_t start = 1) {
  return TailSequence(TailRule{limit, TailDirection::FromAbove, Rational(1), 1, start});
}

// cells (5, x2), (3, inf); tails 1 - 1/n from n = 2 and 2 + 1/n from n = 1
PositiveDiagonalModel mixed_model() {
  return make_positive_model({{Rational(5), Multiplicity::finite(2)},
                              {Rational(3), Multiplicity::infinite()}},
                             {below(Rational(1), 2), above(Rational(2))});
}

}  // namespace

TEST_CASE("a tail starting at zero splits into a cell plus a shifted tail") {
  // 1 - 1/n from n = 1 has first term 0
  const PositiveDiagonalModel m = make_positive_model({}, {below(Rational(1))});
  REQUIRE(m.cells.size() == 1);
  CHECK(m.cells[0].value == Rational(0));
  CHECK(m.cells[0].mult == Multiplicity::finite(1));
  REQUIRE(m.tails.size() == 1);
  CHECK(m.tails[0].start_index() == 2);
  CHECK(m.tails[0].value(2) == Rational(1, 2));
  // the same split happens for normal models, with a zero scalar cell
  const NormalDiagonalModel n = make_normal_model({}, {{below(Rational(1)), {0.0, 1.0}}});
  REQUIRE(n.cells.size() == 1);
  CHECK(n.cells[0].value == Scalar());
  CHECK(n.tails[0].seq.start_index() == 2);
}

TEST_CASE("model validation rejects structural defects") {
  CHECK_THROWS_AS(make_positive_model({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_positive_model({{Rational(-1), Multiplicity::finite(1)}}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_shifted_model(0, mixed_model()), std::invalid_argument);
  // non-unit tail phase
  CHECK_THROWS_AS(make_normal_model({}, {{above(Rational(1)), {0.5, 0.5}}}),
                  std::invalid_argument);
}

TEST_CASE("canonical enumeration lists finite cells then round-robins the streams") {
  const PositiveDiagonalModel m = mixed_model();
  // prefix 5, 5; then per round one term of: infinite cell 3, tail0, tail1
  const std::vector<Rational> expect = {Rational(5),    Rational(5),    Rational(3),
                                        Rational(1, 2), Rational(3),    Rational(3),
                                        Rational(2, 3), Rational(5, 2), Rational(3),
                                        Rational(3, 4)};
  CHECK(entries(m, 10) == expect);
  CHECK(cell_first_index(m, 0) == 0);
  CHECK(cell_first_index(m, 1) == 2);
  CHECK(tail_term_index(m, 0, 2) == 3);
  CHECK(tail_term_index(m, 0, 3) == 6);
  CHECK(tail_term_index(m, 1, 1) == 4);
  CHECK(tail_term_index(m, 1, 2) == 7);
  CHECK_THROWS_AS(tail_term_index(m, 0, 1), std::invalid_argument);
}

TEST_CASE("finite dimension counts cells and rejects infinite models") {
  const PositiveDiagonalModel fin =
      make_positive_model({{Rational(2), Multiplicity::finite(3)},
                           {Rational(1), Multiplicity::finite(1)}}, {});
  CHECK(finite_dimensional(fin));
  CHECK(finite_dimension(fin) == 4);
  CHECK(entries(fin, 4) == std::vector<Rational>{Rational(2), Rational(2), Rational(2), Rational(1)});
  CHECK_THROWS_AS(entries(fin, 5), std::invalid_argument);
  CHECK_FALSE(finite_dimensional(mixed_model()));
  CHECK_THROWS_AS(finite_dimension(mixed_model()), std::logic_error);
}

TEST_CASE("norm and minimum modulus scan cells and tail extrema") {
  const PositiveDiagonalModel m = mixed_model();
  CHECK(operator_norm(m) == Rational(5));
  CHECK(min_modulus(m) == Rational(1, 2));
  const MinAttainment att = is_min_attaining(m);
  CHECK(att.min_modulus == Rational(1, 2));
  CHECK(att.attained);
  CHECK(att.witness_index == 3);  // tail0 term n = 2 in canonical order

  // an unattained minimum: single tail decreasing to 2
  const PositiveDiagonalModel open = make_positive_model({}, {above(Rational(2))});
  CHECK(min_modulus(open) == Rational(2));
  CHECK_FALSE(is_min_attaining(open).attained);
  CHECK(operator_norm(open) == Rational(3));  // first term 2 + 1/1
}

TEST_CASE("range is closed exactly when no tail accumulates at zero") {
  CHECK(range_closed(mixed_model()));
  const PositiveDiagonalModel open = make_positive_model({}, {above(Rational(0))});  // 1/n
  CHECK_FALSE(range_closed(open));
  // a zero cell does not open the range
  const PositiveDiagonalModel kernel =
      make_positive_model({{Rational(0), Multiplicity::infinite()}}, {});
  CHECK(range_closed(kernel));
}

TEST_CASE("pseudoinverse inverts entrywise and is an exact involution") {
  const PositiveDiagonalModel m = make_positive_model({}, {below(Rational(1))});
  const PositiveDiagonalModel p = pseudoinverse(m);
  // kernel cell stays, tail becomes n/(n-1) decreasing to 1
  REQUIRE(p.cells.size() == 1);
  CHECK(p.cells[0].value == Rational(0));
  CHECK(p.tails[0].value(2) == Rational(2));
  CHECK(p.tails[0].value(5) == Rational(5, 4));
  CHECK(p.tails[0].limit() == Rational(1));
  CHECK(pseudoinverse(p) == m);

  const PositiveDiagonalModel open = make_positive_model({}, {above(Rational(0))});
  CHECK_THROWS_WITH_AS(pseudoinverse(open),
                       "pseudoinverse: unbounded inverse, the diagonal accumulates at 0 "
                       "(range not closed)",
                       std::domain_error);
}

TEST_CASE("square maps cells and tails to their exact squares") {
  const PositiveDiagonalModel s = square(mixed_model());
  CHECK(s.cells[0].value == Rational(25));
  CHECK(s.cells[1].value == Rational(9));
  CHECK(s.tails[0].value(2) == Rational(1, 4));
  CHECK(s.tails[1].value(1) == Rational(9));
  CHECK(s.tails[1].limit() == Rational(4));
}

TEST_CASE("gram pair of a shifted model is D^2 and D^2 plus a k-dim kernel") {
  const ShiftedDiagonalModel t = make_shifted_model(2, mixed_model());
  const GramPair g = gram_pair(t);
  CHECK(g.tstar_t == square(mixed_model()));
  REQUIRE(g.t_tstar.cells.size() == 3);
  CHECK(g.t_tstar.cells[2].value == Rational(0));
  CHECK(g.t_tstar.cells[2].mult == Multiplicity::finite(2));
  CHECK(g.t_tstar.tails == g.tstar_t.tails);
}

TEST_CASE("adjoint and pseudoinverse of shifted models swap the shift side") {
  const ShiftedDiagonalModel t = make_shifted_model(1, make_positive_model({}, {below(Rational(1))}));
  const CoShiftedDiagonalModel a = adjoint(t);
  CHECK(a.shift_order == 1);
  CHECK(a.diag == t.diag);
  CHECK(adjoint(a) == t);
  const CoShiftedDiagonalModel p = pseudoinverse(t);
  CHECK(p.diag == pseudoinverse(t.diag));
  CHECK(pseudoinverse(p) == ShiftedDiagonalModel{1, t.diag});
  CHECK(min_modulus(t) == Rational(0));
  CHECK(operator_norm(t) == Rational(1));
}

TEST_CASE("normal models expose modulus, adjoint and min attainment") {
  const NormalDiagonalModel n = make_normal_model(
      {{Scalar(Rational(2), {0.0, 1.0}), Multiplicity::finite(1)}},
      {{below(Rational(1), 2), {-1.0, 0.0}}});
  const PositiveDiagonalModel mod = modulus(n);
  CHECK(mod.cells[0].value == Rational(2));
  CHECK(mod.tails[0] == n.tails[0].seq);
  CHECK(min_modulus(n) == Rational(1, 2));
  CHECK(is_min_attaining(n).attained);
  const NormalDiagonalModel adj = adjoint(n);
  CHECK(adj.cells[0].value.phase == std::complex<double>(0.0, -1.0));
  CHECK(adj.cells[0].value.modulus == Rational(2));
  CHECK(adjoint(adj) == n);
  // pseudoinverse conjugates phases and inverts moduli
  const NormalDiagonalModel p = pseudoinverse(n);
  CHECK(p.cells[0].value.modulus == Rational(1, 2));
  CHECK(p.cells[0].value.phase == std::complex<double>(0.0, -1.0));
  CHECK(pseudoinverse(p) == n);
}

TEST_CASE("truncate produces finite sections in canonical order") {
  const PositiveDiagonalModel m = mixed_model();
  const FiniteMatrix a = truncate(m, 6);
  REQUIRE(a.rows() == 6);
  CHECK(a(0, 0).real() == 5.0);
  CHECK(a(3, 3).real() == 0.5);
  CHECK(a(5, 5).real() == 3.0);
  CHECK(a(1, 0) == std::complex<double>(0.0, 0.0));

  // a shifted section puts d_i at (i + k, i); the last k columns vanish
  const ShiftedDiagonalModel t = make_shifted_model(1, m);
  const FiniteMatrix b = truncate(t, 4);
  CHECK(b(1, 0).real() == 5.0);
  CHECK(b(3, 2).real() == 3.0);
  CHECK(b(0, 0) == std::complex<double>(0.0, 0.0));
  // the co-shifted section is exactly the adjoint
  const FiniteMatrix c = truncate(adjoint(t), 4);
  CHECK((c - b.adjoint()).norm() == 0.0);
}

TEST_CASE("direct sums concatenate components") {
  const PositiveDiagonalModel a = make_positive_model({{Rational(7), Multiplicity::finite(1)}}, {});
  const PositiveDiagonalModel s = direct_sum(a, mixed_model());
  CHECK(s.cells.size() == 3);
  CHECK(s.tails.size() == 2);
  CHECK(operator_norm(s) == Rational(7));
  CHECK(min_modulus(s) == Rational(1, 2));
}

TEST_CASE("restrict_model keeps cells, tail suffixes or individual terms") {
  const PositiveDiagonalModel m = mixed_model();

  RestrictionSpec spec;
  spec.cell_keep = {Multiplicity::finite(1), std::nullopt};
  spec.tail_keep.resize(2);
  spec.tail_keep[0].kind = RestrictionSpec::TailKeep::Kind::From;
  spec.tail_keep[0].from = 4;
  spec.tail_keep[1].kind = RestrictionSpec::TailKeep::Kind::Indices;
  spec.tail_keep[1].indices = {1, 3};

  const PositiveDiagonalModel r = restrict_model(m, spec);
  // kept: one 5, tail0 from n = 4, tail1 terms 3 and 7/3 as cells
  REQUIRE(r.cells.size() == 3);
  CHECK(r.cells[0].value == Rational(5));
  CHECK(r.cells[0].mult == Multiplicity::finite(1));
  CHECK(r.cells[1].value == Rational(3));
  CHECK(r.cells[2].value == Rational(7, 3));
  REQUIRE(r.tails.size() == 1);
  CHECK(r.tails[0].start_index() == 4);
  CHECK(min_modulus(r) == Rational(3, 4));

  // shape mismatch and over-keeping are rejected
  RestrictionSpec bad;
  bad.cell_keep = {Multiplicity::finite(1)};
  CHECK_THROWS_AS(restrict_model(m, bad), std::invalid_argument);
  RestrictionSpec over;
  over.cell_keep = {Multiplicity::finite(3), std::nullopt};  // cell 0 has mult 2
  over.tail_keep.resize(2);
  CHECK_THROWS_AS(restrict_model(m, over), std::invalid_argument);
  RestrictionSpec early;
  early.cell_keep = {std::nullopt, std::nullopt};
  early.tail_keep.resize(2);
  early.tail_keep[0].kind = RestrictionSpec::TailKeep::Kind::Indices;
  early.tail_keep[0].indices = {1};  // tail0 starts at 2
  CHECK_THROWS_AS(restrict_model(m, early), std::invalid_argument);
}
