// spectrum.hpp — Exact spectrum reports for diagonal models: point spectrum
// as finitely many symbolic families, continuous/essential/discrete parts as
// exact scalar sets.

#pragma once

#include "amspec/models.hpp"

#include <variant>
#include <vector>

namespace amspec {

// A single eigenvalue with its multiplicity.
struct PointValue {
  Scalar value;
  Multiplicity mult;
  bool operator==(const PointValue& other) const = default;
};

// A countable eigenvalue family phase * seq(n), n >= start. Every term has
// multiplicity term_mult. Indices in `excluded` are terms that were folded
// elsewhere (into the essential part or a PointValue) and do not belong to
// this family's own listing.
struct PointTail {
  TailSequence seq;
  std::complex<double> phase{1.0, 0.0};
  std::int64_t term_mult = 1;
  std::vector<std::int64_t> excluded;
  bool operator==(const PointTail& other) const = default;
};

using PointFamily = std::variant<PointValue, PointTail>;

struct SpectrumReport {
  std::vector<PointFamily> point;     // eigenvalues with multiplicity
  std::vector<Scalar> continuous;     // spectrum values that are not eigenvalues
  std::vector<Scalar> essential;      // infinite-mult eigenvalues, limit points, continuous part
  std::vector<PointFamily> discrete;  // isolated finite-multiplicity eigenvalues
  bool operator==(const SpectrumReport& other) const = default;
};

SpectrumReport spectrum_of_diagonal(const PositiveDiagonalModel& m);
SpectrumReport spectrum_of_diagonal(const NormalDiagonalModel& m);

// sigma(A + B) with multiplicity merge; parts are rederived canonically.
SpectrumReport spectrum_of_direct_sum(const SpectrumReport& a, const SpectrumReport& b);

// Exact set disjointness of the two full spectra.
bool spectra_disjoint(const SpectrumReport& a, const SpectrumReport& b);

// Spectral mapping under inversion; requires 0 outside the spectrum.
SpectrumReport map_spectrum_inverse(const SpectrumReport& r);

// Spectral mapping under the Moore-Penrose inverse: nonzero values invert,
// zero stays. Requires that 0 is not an accumulation point of the spectrum.
SpectrumReport map_spectrum_pseudoinverse(const SpectrumReport& r);

Rational min_modulus_from_spectrum(const SpectrumReport& r);
Rational essential_min_modulus(const SpectrumReport& r);  // throws when essential is empty
Rational essential_min_modulus(const PositiveDiagonalModel& m);
Rational essential_min_modulus(const NormalDiagonalModel& m);

// Eigenvalue lookup across all point families.
struct EigenCount {
  bool infinite = false;
  std::int64_t count = 0;  // total finite multiplicity when !infinite
};
EigenCount eigen_multiplicity(const std::vector<PointFamily>& point, const Scalar& v);
bool is_eigenvalue(const SpectrumReport& r, const Scalar& v);

// Canonical form: merged families, deterministic ordering in every part.
SpectrumReport canonicalized(const SpectrumReport& r);
bool spectrum_equal(const SpectrumReport& a, const SpectrumReport& b);

// Internal consistency of the four parts; throws std::logic_error with a
// description of the first violated invariant.
void check_report_invariants(const SpectrumReport& r);

}  // namespace amspec
