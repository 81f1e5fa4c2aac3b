// classify.hpp — AM/AN classification, duality and adjoint transfer checks,
// canonical beta*I - K + F decompositions and normal spectral decompositions.

#pragma once

#include "amspec/models.hpp"
#include "amspec/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amspec {

// A positive diagonal is AM exactly when its essential spectrum is a single
// point beta and only finitely many eigenvalues (with multiplicity) sit above
// beta. The reasons name which half fails.
enum class AMReason { OK, EssentialSpectrumNotSingleton, InfinitelyManyEigenvaluesAboveMe };
enum class ANReason { OK, EssentialSpectrumNotSingleton, InfinitelyManyEigenvaluesBelowMe };

std::string to_string(AMReason r);
std::string to_string(ANReason r);

// T = beta*I - K + F with K positive compact, ||K|| <= beta, F positive of
// finite rank and KF = FK = 0. Both parts are diagonal models aligned with
// the original entry for entry: cell i of K/F matches cell i of the model,
// K's tail i matches the model's tail i and F carries one infinite zero cell
// for all tail positions.
struct AMDecomposition {
  Rational beta;
  PositiveDiagonalModel compact_part;
  PositiveDiagonalModel finite_part;
};

struct AMClassification {
  bool is_am = false;
  AMReason reason = AMReason::OK;
  std::optional<AMDecomposition> decomposition;  // present exactly when is_am
};

struct ANClassification {
  bool is_an = false;
  ANReason reason = ANReason::OK;
};

// sigma_ess as exact values; cheap structural computation.
std::vector<Rational> essential_values(const PositiveDiagonalModel& m);

AMClassification classify_am_positive(const PositiveDiagonalModel& m);
ANClassification classify_an_positive(const PositiveDiagonalModel& m);

// AM(T) against closed range plus AN(T-pseudoinverse).
struct DualityReport {
  bool am = false;
  bool closed_range = false;
  std::optional<bool> an_of_pseudoinverse;  // present exactly when closed_range
  bool consistent = false;                  // am == (closed_range && AN(T+))
};
DualityReport check_duality_am_an(const PositiveDiagonalModel& m);

// For a shifted model T = S^k D: classify both Gram operators T*T and TT*.
// Their essential spectra agree away from 0, and 0 only enters through D
// itself, so the verdicts must coincide.
struct AdjointTransferReport {
  std::vector<Rational> ess_gram;      // sigma_ess(T*T)
  std::vector<Rational> ess_gram_adj;  // sigma_ess(TT*)
  bool ess_equal = false;
  AMClassification gram;
  AMClassification gram_adj;
  bool verdicts_agree = false;
};
AdjointTransferReport classify_am_adjoint_transfer(const ShiftedDiagonalModel& m);

// Normal models classify through their modulus; the decomposition refers to
// |T|.
AMClassification classify_am_normal(const NormalDiagonalModel& m);

// Spectral decomposition of a normal AM model: T = sum of beta * U_beta over
// the distinct entry moduli. Moduli carried by cells become fixed blocks
// (collecting any tail term that happens to tie them); the remaining tail
// terms stay grouped as families, each term a singleton block of its own.
struct SpectralDecomposition {
  struct CellMember {
    std::size_t cell_slot = 0;
    std::complex<double> phase{1.0, 0.0};
    Multiplicity mult = Multiplicity::finite(1);
    bool operator==(const CellMember& other) const = default;
  };
  struct TailTermMember {
    std::size_t tail_slot = 0;
    std::int64_t index = 1;  // term index n within the tail
    std::complex<double> phase{1.0, 0.0};
    bool operator==(const TailTermMember& other) const = default;
  };
  struct FixedBlock {
    Rational beta;
    std::vector<CellMember> cells;
    std::vector<TailTermMember> tail_terms;
    bool operator==(const FixedBlock& other) const = default;
  };
  struct TailFamilyBlock {
    std::size_t tail_slot = 0;
    TailSequence seq;
    std::complex<double> phase{1.0, 0.0};
    std::vector<std::int64_t> extracted;  // term indices listed in fixed blocks
    bool operator==(const TailFamilyBlock& other) const = default;
  };
  std::vector<FixedBlock> fixed;          // ascending beta
  std::vector<TailFamilyBlock> families;  // by tail slot
  bool operator==(const SpectralDecomposition& other) const = default;
};

// Throws std::domain_error when the model is not AM.
SpectralDecomposition spectral_decomposition_normal(const NormalDiagonalModel& m);

// Exact inverse of the decomposition; validates slot bookkeeping.
NormalDiagonalModel reconstruct(const SpectralDecomposition& d);

// Finite Hermitian PSD block S direct-summed with an AM model: classify the
// sum. S's eigenvalues land in K or F depending on their side of beta.
AMClassification direct_sum_am(const FiniteMatrix& s, const PositiveDiagonalModel& m);

// A coordinate subspace on which the restriction fails to attain its minimum
// modulus: the span of one tail decreasing to its infimum. Empty when every
// tail attains (in particular for AM models).
std::optional<RestrictionSpec> non_attaining_restriction(const PositiveDiagonalModel& m);

}  // namespace amspec
