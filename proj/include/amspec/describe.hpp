// describe.hpp — JSON operator descriptions (schema_version "1"): parsing with
// schema/invariant diagnostics and deterministic emission.

#pragma once

#include "amspec/generators.hpp"
#include "amspec/models.hpp"
#include "amspec/multiplication.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amspec {

using Json = nlohmann::ordered_json;

// Structurally malformed document: wrong types, missing fields, unknown kinds.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed document describing an invalid model (negative entry, bad tail).
struct ModelInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DescriptionKind {
  PositiveDiagonal,
  NormalDiagonal,
  ShiftedDiagonal,
  DirectSum,
  Multiplication,
  FiniteMatrixBlock,
};
std::string to_string(DescriptionKind k);

struct OperatorDescription {
  DescriptionKind kind = DescriptionKind::PositiveDiagonal;
  std::string name;
  std::string notes;
  std::optional<PositiveDiagonalModel> positive;
  std::optional<NormalDiagonalModel> normal;
  std::optional<ShiftedDiagonalModel> shifted;
  std::optional<MeasureSpaceModel> measure;
  std::optional<FiniteMatrix> matrix;
  std::vector<OperatorDescription> summands;  // DirectSum only
};

// Scalar pieces. Rationals emit as canonical "p" / "p/q" strings and parse
// from strings or exact double values.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& ctx);
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& ctx);
Json multiplicity_to_json(const Multiplicity& m);
Multiplicity multiplicity_from_json(const Json& j, const std::string& ctx);
Json phase_to_json(const std::complex<double>& z);
std::complex<double> phase_from_json(const Json& j, const std::string& ctx);
Json tail_to_json(const TailSequence& t);
TailSequence tail_from_json(const Json& j, const std::string& ctx);

// Model payloads.
Json emit_model(const PositiveDiagonalModel& m);
Json emit_model(const NormalDiagonalModel& m);
Json emit_model(const ShiftedDiagonalModel& m);
Json emit_model(const MeasureSpaceModel& m);
Json emit_matrix(const FiniteMatrix& a);
PositiveDiagonalModel positive_model_from_json(const Json& j);
NormalDiagonalModel normal_model_from_json(const Json& j);
ShiftedDiagonalModel shifted_model_from_json(const Json& j);
MeasureSpaceModel measure_model_from_json(const Json& j);
FiniteMatrix matrix_from_json(const Json& j);

// Whole documents.
OperatorDescription parse_description(const Json& doc);
OperatorDescription parse_description_text(const std::string& text);
OperatorDescription parse_description_file(const std::string& path);
Json emit_description(const OperatorDescription& d);

// Random description spanning every kind; used by the round-trip suite.
OperatorDescription random_description(Rng& rng);

}  // namespace amspec
