// multiplication.hpp — Multiplication operators M_f on L^2 of a sigma-finite
// measure space, described by finitely many labelled cells (atoms or diffuse
// pieces on which |f| is constant) plus countable atom tails.

#pragma once

#include "amspec/classify.hpp"
#include "amspec/models.hpp"

#include <string>
#include <vector>

namespace amspec {

enum class CellKind { Atom, Diffuse };

struct MeasureCell {
  std::string label;
  CellKind kind = CellKind::Atom;
  Rational weight;  // measure of the cell, > 0
  Scalar symbol;    // value of f on the cell
  bool operator==(const MeasureCell& other) const = default;
};

// Countably many atoms (unit weight) carrying f = phase * seq(n).
struct MeasureTail {
  TailSequence seq;
  std::complex<double> phase{1.0, 0.0};
  bool operator==(const MeasureTail& other) const = default;
};

struct MeasureSpaceModel {
  std::vector<MeasureCell> cells;
  std::vector<MeasureTail> tails;
  bool operator==(const MeasureSpaceModel& other) const = default;
};

MeasureSpaceModel make_measure_model(std::vector<MeasureCell> cells,
                                     std::vector<MeasureTail> tails);
void validate_model(const MeasureSpaceModel& m);

// Essential bounds of |f| (every cell has positive measure, so each counts).
Rational ess_inf_abs(const MeasureSpaceModel& m);
Rational ess_sup_abs(const MeasureSpaceModel& m);

// m(M_f) = ess inf |f|.
Rational min_modulus_mult(const MeasureSpaceModel& m);

struct MultAttainment {
  Rational min_modulus;
  bool attained = false;
  std::string witness;  // cell label or "tail[j] n=.." when attained
};
MultAttainment is_min_attaining_mult(const MeasureSpaceModel& m);

// Unitarily equivalent diagonal model: atoms become multiplicity-1 cells,
// diffuse pieces infinite-multiplicity cells, atom tails stay tails.
NormalDiagonalModel to_diagonal(const MeasureSpaceModel& m);

// Layered exhaustion: peel the attained level sets of |f| in order. The list
// stops at a fixed budget when tails keep attaining level after level.
struct ExhaustionTrace {
  struct Level {
    Rational value;
    std::vector<std::string> members;
    bool operator==(const Level& other) const = default;
  };
  std::vector<Level> levels;
  bool complete = false;   // everything was peeled
  bool truncated = false;  // budget reached while tails kept attaining
  std::string failure;     // first level whose infimum is not attained, if any
};

struct MultAMClassification {
  bool is_am = false;
  AMReason reason = AMReason::OK;
  ExhaustionTrace trace;  // ascending levels from ess inf |f|
};
MultAMClassification classify_am_mult(const MeasureSpaceModel& m);

struct MultANClassification {
  bool is_an = false;
  ANReason reason = ANReason::OK;
  ExhaustionTrace trace;  // descending levels from ess sup |f|
};
MultANClassification classify_an_mult(const MeasureSpaceModel& m);

}  // namespace amspec
