// generators.hpp — Seeded random model and matrix generators shared by the
// property suites and tests.

#pragma once

#include "amspec/models.hpp"
#include "amspec/multiplication.hpp"

#include <random>

namespace amspec {

using Rng = std::mt19937_64;

// Uniform numerator/denominator rational in [lo, hi] with denominator up to
// max_den.
Rational random_rational(Rng& rng, long lo, long hi, long max_den);
std::complex<double> random_unit_phase(Rng& rng);

// A plain monotone tail converging to `limit` (limit > 0 when increasing).
TailSequence random_tail(Rng& rng, bool increasing, const Rational& limit);

PositiveDiagonalModel random_am_positive_model(Rng& rng);
// Broad mix: AM models, both failure reasons, beta = 0, open ranges.
PositiveDiagonalModel random_positive_model(Rng& rng);

NormalDiagonalModel random_normal_am_model(Rng& rng);
NormalDiagonalModel random_normal_model(Rng& rng);

ShiftedDiagonalModel random_shifted_model(Rng& rng);

MeasureSpaceModel random_measure_model(Rng& rng);

RestrictionSpec random_restriction(Rng& rng, const PositiveDiagonalModel& m);

FiniteMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double scale = 1.0);
FiniteMatrix random_hermitian_psd(Rng& rng, Eigen::Index n, double scale = 1.0);
FiniteMatrix random_normal_matrix(Rng& rng, Eigen::Index n, double scale = 1.0);

}  // namespace amspec
