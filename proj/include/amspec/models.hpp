// models.hpp — Structured Hilbert-space operator models: positive and normal
// diagonals, and weighted-shift compositions. All spectral data stays exact.

#pragma once

#include "amspec/scalar.hpp"
#include "amspec/tail.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace amspec {

using FiniteMatrix = Eigen::MatrixXcd;

// ---------------------------------------------------------------------------
// Positive diagonal models
// ---------------------------------------------------------------------------

struct PositiveCell {
  Rational value;      // >= 0
  Multiplicity mult;
  bool operator==(const PositiveCell& other) const = default;
};

// diag(d_1, d_2, ...) with d_n >= 0, described by finitely many cells plus
// finitely many symbolic tails. The canonical basis enumeration lists the
// finite-multiplicity cells first (declaration order), then interleaves the
// infinite streams (infinite cells, then tails) round-robin.
struct PositiveDiagonalModel {
  std::vector<PositiveCell> cells;
  std::vector<TailSequence> tails;
  bool operator==(const PositiveDiagonalModel& other) const = default;
};

// Builds a validated model. A tail whose first term is zero is split into an
// explicit (0, 1) cell plus the same tail restarted one index later, so every
// stored tail term is strictly positive. That normalization is what makes
// pseudoinversion an exact involution on representations.
PositiveDiagonalModel make_positive_model(std::vector<PositiveCell> cells,
                                          std::vector<TailSequence> tails);
void validate_model(const PositiveDiagonalModel& m);  // throws std::invalid_argument

// ---------------------------------------------------------------------------
// Normal diagonal models
// ---------------------------------------------------------------------------

struct NormalCell {
  Scalar value;
  Multiplicity mult;
  bool operator==(const NormalCell& other) const = default;
};

// A tail of entries phase * seq(n): common unit phase, exact moduli.
struct NormalTail {
  TailSequence seq;
  std::complex<double> phase{1.0, 0.0};
  bool operator==(const NormalTail& other) const = default;
};

struct NormalDiagonalModel {
  std::vector<NormalCell> cells;
  std::vector<NormalTail> tails;
  bool operator==(const NormalDiagonalModel& other) const = default;
};

NormalDiagonalModel make_normal_model(std::vector<NormalCell> cells,
                                      std::vector<NormalTail> tails);
void validate_model(const NormalDiagonalModel& m);
NormalDiagonalModel as_normal(const PositiveDiagonalModel& m);

// ---------------------------------------------------------------------------
// Shifted diagonal models
// ---------------------------------------------------------------------------

// T = S^k D: e_n -> d_n e_{n+k}, with S the unilateral shift, k >= 1 and D a
// positive diagonal. Not normal; the Gram pair T*T, TT* differs by a finite
// zero block.
struct ShiftedDiagonalModel {
  std::int64_t shift_order = 1;
  PositiveDiagonalModel diag;
  bool operator==(const ShiftedDiagonalModel& other) const = default;
};

ShiftedDiagonalModel make_shifted_model(std::int64_t shift_order, PositiveDiagonalModel diag);
void validate_model(const ShiftedDiagonalModel& m);

// D (S*)^k: e_{n+k} -> d_n e_n, killing the first k basis vectors. This is the
// shape of adjoints and pseudoinverses of shifted models; keeping the tag
// lets pseudoinversion round-trip exactly.
struct CoShiftedDiagonalModel {
  std::int64_t shift_order = 1;
  PositiveDiagonalModel diag;
  bool operator==(const CoShiftedDiagonalModel& other) const = default;
};

// ---------------------------------------------------------------------------
// Enumeration and truncation
// ---------------------------------------------------------------------------

bool finite_dimensional(const PositiveDiagonalModel& m);
bool finite_dimensional(const NormalDiagonalModel& m);
std::int64_t finite_dimension(const PositiveDiagonalModel& m);  // throws if infinite

// First n entries of the canonical enumeration (throws when a finite model is
// shorter than n).
std::vector<Rational> entries(const PositiveDiagonalModel& m, std::int64_t n);
std::vector<Scalar> entries(const NormalDiagonalModel& m, std::int64_t n);

// Canonical index bookkeeping (0-based): where a cell block starts and where
// tail terms land.
std::int64_t cell_first_index(const PositiveDiagonalModel& m, std::size_t cell);
std::int64_t tail_term_index(const PositiveDiagonalModel& m, std::size_t tail, std::int64_t n);
std::int64_t cell_first_index(const NormalDiagonalModel& m, std::size_t cell);
std::int64_t tail_term_index(const NormalDiagonalModel& m, std::size_t tail, std::int64_t n);

FiniteMatrix truncate(const PositiveDiagonalModel& m, std::int64_t n);
FiniteMatrix truncate(const NormalDiagonalModel& m, std::int64_t n);
FiniteMatrix truncate(const ShiftedDiagonalModel& m, std::int64_t n);
FiniteMatrix truncate(const CoShiftedDiagonalModel& m, std::int64_t n);

// ---------------------------------------------------------------------------
// Basic functionals
// ---------------------------------------------------------------------------

Rational operator_norm(const PositiveDiagonalModel& m);
Rational operator_norm(const NormalDiagonalModel& m);
Rational operator_norm(const ShiftedDiagonalModel& m);

// Minimum modulus m(T) = inf |entries|.
Rational min_modulus(const PositiveDiagonalModel& m);
Rational min_modulus(const NormalDiagonalModel& m);
Rational min_modulus(const ShiftedDiagonalModel& m);

struct MinAttainment {
  Rational min_modulus;
  bool attained = false;
  std::optional<std::int64_t> witness_index;  // canonical index when attained
};
MinAttainment is_min_attaining(const PositiveDiagonalModel& m);
MinAttainment is_min_attaining(const NormalDiagonalModel& m);

// Range closure: for diagonals this is exactly "no tail accumulates at 0".
bool range_closed(const PositiveDiagonalModel& m);
bool range_closed(const NormalDiagonalModel& m);
bool range_closed(const ShiftedDiagonalModel& m);

// ---------------------------------------------------------------------------
// Derived operators
// ---------------------------------------------------------------------------

PositiveDiagonalModel adjoint(const PositiveDiagonalModel& m);  // identity
NormalDiagonalModel adjoint(const NormalDiagonalModel& m);
CoShiftedDiagonalModel adjoint(const ShiftedDiagonalModel& m);
ShiftedDiagonalModel adjoint(const CoShiftedDiagonalModel& m);

// Moore-Penrose inverses; throw std::domain_error when the range is not
// closed (0 an accumulation point of the diagonal moduli).
PositiveDiagonalModel pseudoinverse(const PositiveDiagonalModel& m);
NormalDiagonalModel pseudoinverse(const NormalDiagonalModel& m);
CoShiftedDiagonalModel pseudoinverse(const ShiftedDiagonalModel& m);
ShiftedDiagonalModel pseudoinverse(const CoShiftedDiagonalModel& m);

// Entrywise square; tails must be plain enough to square symbolically.
PositiveDiagonalModel square(const PositiveDiagonalModel& m);

// (T*T, TT*) for a shifted model: D^2 and D^2 oplus a rank-k zero block.
struct GramPair {
  PositiveDiagonalModel tstar_t;
  PositiveDiagonalModel t_tstar;
};
GramPair gram_pair(const ShiftedDiagonalModel& m);

PositiveDiagonalModel modulus(const NormalDiagonalModel& m);
PositiveDiagonalModel modulus(const ShiftedDiagonalModel& m);

PositiveDiagonalModel direct_sum(const PositiveDiagonalModel& a, const PositiveDiagonalModel& b);
NormalDiagonalModel direct_sum(const NormalDiagonalModel& a, const NormalDiagonalModel& b);

// ---------------------------------------------------------------------------
// Restrictions to coordinate subspaces
// ---------------------------------------------------------------------------

// Restrictions of a diagonal to a span of basis vectors are again diagonal
// models; this spec says what survives, component by component.
struct RestrictionSpec {
  // One entry per cell: kept multiplicity, or nullopt to drop the cell.
  std::vector<std::optional<Multiplicity>> cell_keep;

  struct TailKeep {
    enum class Kind { Drop, From, Indices };
    Kind kind = Kind::Drop;
    std::int64_t from = 0;                // Kind::From: keep indices >= from
    std::vector<std::int64_t> indices;    // Kind::Indices: keep these terms only
  };
  std::vector<TailKeep> tail_keep;
};

PositiveDiagonalModel restrict_model(const PositiveDiagonalModel& m, const RestrictionSpec& spec);

}  // namespace amspec
