// test_classify.cpp — AM/AN verdicts with canonical beta*I - K + F
// decompositions, duality, adjoint transfer, normal spectral decompositions
// and non-attaining restrictions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amspec/classify.hpp"
#include "amspec/oracle.hpp"

#include <stdexcept>

using namespace amspec;

namespace {

TailSequence below(const Rational& limit, std::int64_t start = 1) {
  return TailSequence(TailRule{limit, TailDirection::FromBelow, Rational(1), 1, start});
}

TailSequence above(const Rational& limit, std::int64_t start = 1) {
  return TailSequence(TailRule{limit, TailDirection::FromAbove, Rational(1), 1, start});
}

PositiveDiagonalModel diag_below_one() {
  return make_positive_model({}, {below(Rational(1))});
}

}  // namespace

TEST_CASE("diag(1 - 1/n) is AM with the frozen decomposition, not AN") {
  const PositiveDiagonalModel m = diag_below_one();
  CHECK(essential_values(m) == std::vector<Rational>{Rational(1)});

  const AMClassification am = classify_am_positive(m);
  CHECK(am.is_am);
  CHECK(am.reason == AMReason::OK);
  REQUIRE(am.decomposition.has_value());
  CHECK(am.decomposition->beta == Rational(1));
  // K = diag(1, 1/2, 1/3, ...): the split kernel cell inverts to 1 and the
  // increasing tail turns into the plain decay 1/n from n = 2
  CHECK(am.decomposition->compact_part ==
        make_positive_model({{Rational(1), Multiplicity::finite(1)}}, {above(Rational(0), 2)}));
  // F vanishes: nothing sits above beta
  CHECK(am.decomposition->finite_part ==
        make_positive_model({{Rational(0), Multiplicity::finite(1)},
                             {Rational(0), Multiplicity::infinite()}}, {}));

  const ANClassification an = classify_an_positive(m);
  CHECK_FALSE(an.is_an);
  CHECK(an.reason == ANReason::InfinitelyManyEigenvaluesBelowMe);

  // the mirrored tail is AN but not AM
  const PositiveDiagonalModel w = make_positive_model({}, {above(Rational(1))});
  CHECK_FALSE(classify_am_positive(w).is_am);
  CHECK(classify_am_positive(w).reason == AMReason::InfinitelyManyEigenvaluesAboveMe);
  CHECK(classify_an_positive(w).is_an);
}

TEST_CASE("beta = 0: eigenvalues above the essential point go into F") {
  const PositiveDiagonalModel m =
      make_positive_model({{Rational(0), Multiplicity::infinite()},
                           {Rational(3), Multiplicity::finite(2)}}, {});
  const AMClassification am = classify_am_positive(m);
  CHECK(am.is_am);
  REQUIRE(am.decomposition.has_value());
  CHECK(am.decomposition->beta == Rational(0));
  CHECK(am.decomposition->compact_part ==
        make_positive_model({{Rational(0), Multiplicity::infinite()},
                             {Rational(0), Multiplicity::finite(2)}}, {}));
  CHECK(am.decomposition->finite_part ==
        make_positive_model({{Rational(0), Multiplicity::infinite()},
                             {Rational(3), Multiplicity::finite(2)}}, {}));
  CHECK(classify_an_positive(m).is_an);
}

TEST_CASE("two essential values block both AM and AN") {
  const PositiveDiagonalModel m = make_positive_model({}, {below(Rational(1), 2), above(Rational(2))});
  CHECK(essential_values(m) == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(classify_am_positive(m).reason == AMReason::EssentialSpectrumNotSingleton);
  CHECK_FALSE(classify_am_positive(m).decomposition.has_value());
  CHECK(classify_an_positive(m).reason == ANReason::EssentialSpectrumNotSingleton);
}

TEST_CASE("classification refuses finite-dimensional models") {
  const PositiveDiagonalModel fin =
      make_positive_model({{Rational(2), Multiplicity::finite(3)}}, {});
  CHECK_THROWS_WITH_AS(classify_am_positive(fin),
                       "classification requires an infinite-dimensional model",
                       std::invalid_argument);
  CHECK_THROWS_AS(classify_an_positive(fin), std::invalid_argument);
}

TEST_CASE("duality: AM iff closed range and AN pseudoinverse") {
  const DualityReport am_case = check_duality_am_an(diag_below_one());
  CHECK(am_case.am);
  CHECK(am_case.closed_range);
  REQUIRE(am_case.an_of_pseudoinverse.has_value());
  CHECK(*am_case.an_of_pseudoinverse);
  CHECK(am_case.consistent);

  // 1 + 1/n: not AM, closed range, pseudoinverse increasing hence not AN
  const DualityReport not_am = check_duality_am_an(make_positive_model({}, {above(Rational(1))}));
  CHECK_FALSE(not_am.am);
  CHECK(not_am.closed_range);
  CHECK_FALSE(*not_am.an_of_pseudoinverse);
  CHECK(not_am.consistent);

  // open range: 1/n accumulates at zero, no pseudoinverse verdict at all
  const DualityReport open = check_duality_am_an(make_positive_model({}, {above(Rational(0))}));
  CHECK_FALSE(open.am);  // its essential value is 0 but the tail decreases
  CHECK_FALSE(open.closed_range);
  CHECK_FALSE(open.an_of_pseudoinverse.has_value());
  CHECK(open.consistent);
}

TEST_CASE("adjoint transfer: both Gram operators of S D classify alike") {
  const ShiftedDiagonalModel t = make_shifted_model(1, diag_below_one());
  const AdjointTransferReport r = classify_am_adjoint_transfer(t);
  CHECK(r.ess_gram == std::vector<Rational>{Rational(1)});
  CHECK(r.ess_gram_adj == std::vector<Rational>{Rational(1)});
  CHECK(r.ess_equal);
  CHECK(r.gram.is_am);
  CHECK(r.gram_adj.is_am);
  CHECK(r.verdicts_agree);
  // T*T = D^2 carries the squared tail; its compact part is 1 - (1 - 1/n)^2
  REQUIRE(r.gram.decomposition.has_value());
  const TailSequence k = r.gram.decomposition->compact_part.tails.at(0);
  CHECK(k.power() == 2);
  CHECK(k.offset() == Rational(1));
  CHECK(k.sign() == -1);
  CHECK(k.value(2) == Rational(3, 4));  // 1 - 1/4
  // TT* has one extra kernel dimension, landing in F
  CHECK(r.gram_adj.decomposition->finite_part.cells.size() ==
        r.gram.decomposition->finite_part.cells.size() + 1);

  // a two-limit diagonal transfers its failure to both sides
  const ShiftedDiagonalModel bad =
      make_shifted_model(2, make_positive_model({}, {below(Rational(1), 2), above(Rational(2))}));
  const AdjointTransferReport rb = classify_am_adjoint_transfer(bad);
  CHECK(rb.ess_gram == (std::vector<Rational>{Rational(1), Rational(4)}));
  CHECK_FALSE(rb.gram.is_am);
  CHECK_FALSE(rb.gram_adj.is_am);
  CHECK(rb.verdicts_agree);
}

TEST_CASE("normal spectral decomposition groups cells by modulus") {
  // 2i and -2 share modulus 2; the tail below 1 stays a family of singletons
  const NormalDiagonalModel m = make_normal_model(
      {{Scalar(Rational(2), {0.0, 1.0}), Multiplicity::finite(1)},
       {Scalar(Rational(2), {-1.0, 0.0}), Multiplicity::finite(1)}},
      {{below(Rational(1), 2), {1.0, 0.0}}});
  CHECK(classify_am_normal(m).is_am);
  const SpectralDecomposition d = spectral_decomposition_normal(m);

  REQUIRE(d.fixed.size() == 1);
  CHECK(d.fixed[0].beta == Rational(2));
  REQUIRE(d.fixed[0].cells.size() == 2);
  CHECK(d.fixed[0].cells[0].cell_slot == 0);
  CHECK(d.fixed[0].cells[0].phase == std::complex<double>(0.0, 1.0));
  CHECK(d.fixed[0].cells[1].cell_slot == 1);
  CHECK(d.fixed[0].cells[1].phase == std::complex<double>(-1.0, 0.0));
  CHECK(d.fixed[0].tail_terms.empty());

  REQUIRE(d.families.size() == 1);
  CHECK(d.families[0].tail_slot == 0);
  CHECK(d.families[0].seq == below(Rational(1), 2));
  CHECK(d.families[0].extracted.empty());

  CHECK(reconstruct(d) == m);
}

TEST_CASE("a tail term tying a cell modulus is extracted into the fixed block") {
  // cell modulus 3/2; the increasing tail 2 - 1/n hits 3/2 at n = 2
  const NormalDiagonalModel m = make_normal_model(
      {{Scalar(Rational(3, 2), {1.0, 0.0}), Multiplicity::finite(1)}},
      {{below(Rational(2)), {1.0, 0.0}}});
  const SpectralDecomposition d = spectral_decomposition_normal(m);
  REQUIRE(d.fixed.size() == 1);
  CHECK(d.fixed[0].beta == Rational(3, 2));
  REQUIRE(d.fixed[0].tail_terms.size() == 1);
  CHECK(d.fixed[0].tail_terms[0].tail_slot == 0);
  CHECK(d.fixed[0].tail_terms[0].index == 2);
  CHECK(d.families[0].extracted == std::vector<std::int64_t>{2});
  CHECK(reconstruct(d) == m);
}

TEST_CASE("non-AM normal models refuse to decompose") {
  const NormalDiagonalModel m = make_normal_model({}, {{above(Rational(2)), {1.0, 0.0}}});
  CHECK_THROWS_WITH_AS(spectral_decomposition_normal(m),
                       "spectral_decomposition_normal: model is not AM "
                       "(InfinitelyManyEigenvaluesAboveMe)",
                       std::domain_error);
}

TEST_CASE("reconstruct validates its slot bookkeeping") {
  const NormalDiagonalModel m = make_normal_model(
      {{Scalar(Rational(2), {1.0, 0.0}), Multiplicity::finite(1)}},
      {{below(Rational(1), 2), {1.0, 0.0}}});
  const SpectralDecomposition d = spectral_decomposition_normal(m);

  SpectralDecomposition bad = d;
  bad.fixed[0].cells[0].cell_slot = 5;
  CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);

  bad = d;
  bad.families[0].tail_slot = 3;
  CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);

  bad = d;
  bad.fixed[0].tail_terms.push_back({0, 4, {1.0, 0.0}});  // not extracted
  CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);
}

TEST_CASE("a PSD block direct-summed with an AM diagonal stays AM") {
  FiniteMatrix s(2, 2);
  s << 2.0, 1.0, 1.0, 2.0;  // eigenvalues 1 and 3
  const AMClassification am = direct_sum_am(s, diag_below_one());
  CHECK(am.is_am);
  REQUIRE(am.decomposition.has_value());
  CHECK(am.decomposition->beta == Rational(1));
  // the eigenvalue near 3 sits above beta: F gains one cell of size about 2
  double top = 0;
  for (const auto& c : am.decomposition->finite_part.cells)
    top = std::max(top, to_double(c.value));
  CHECK(top == doctest::Approx(2.0).epsilon(1e-12));

  FiniteMatrix neg(2, 2);
  neg << 0.0, 2.0, 2.0, 0.0;  // eigenvalues -2 and 2
  CHECK_THROWS_WITH_AS(direct_sum_am(neg, diag_below_one()),
                       "direct_sum_am: the finite block is not positive semidefinite",
                       std::invalid_argument);
}

TEST_CASE("non_attaining_restriction finds a decreasing tail or nothing") {
  // AM model: every coordinate restriction attains, so no witness exists
  CHECK_FALSE(non_attaining_restriction(diag_below_one()).has_value());

  const PositiveDiagonalModel m = make_positive_model(
      {{Rational(5), Multiplicity::finite(1)}}, {below(Rational(1), 2), above(Rational(2))});
  const auto spec = non_attaining_restriction(m);
  REQUIRE(spec.has_value());
  CHECK(spec->cell_keep == std::vector<std::optional<Multiplicity>>{std::nullopt});
  CHECK(spec->tail_keep[0].kind == RestrictionSpec::TailKeep::Kind::Drop);
  CHECK(spec->tail_keep[1].kind == RestrictionSpec::TailKeep::Kind::From);

  const PositiveDiagonalModel r = restrict_model(m, *spec);
  const MinAttainment att = is_min_attaining(r);
  CHECK(att.min_modulus == Rational(2));
  CHECK_FALSE(att.attained);
}
