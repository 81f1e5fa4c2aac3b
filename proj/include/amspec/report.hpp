// report.hpp — Classification pipeline: one description in, one deterministic
// JSON report out, with finite-section numeric cross-checks.

#pragma once

#include "amspec/classify.hpp"
#include "amspec/describe.hpp"
#include "amspec/multiplication.hpp"

#include <cstdint>

namespace amspec {

struct PipelineOptions {
  std::int64_t truncation = 512;  // finite-section size for numeric checks
  double tolerance = 1e-10;       // exact-vs-numeric comparison slack
  bool emit_witness = false;      // include attainment witnesses
  bool timing = false;            // append wall-clock timing (non-deterministic)
};

// Spectrum/classification emitters shared by reports, suites and tests.
Json emit_spectrum(const SpectrumReport& r);
Json emit_am(const AMClassification& c);
Json emit_an(const ANClassification& c);
Json emit_trace(const ExhaustionTrace& t);
Json emit_restriction(const RestrictionSpec& spec);

// Full pipeline for one described operator. Reports are byte-deterministic
// for fixed options with timing off. Structural problems throw SchemaError;
// invalid models throw ModelInvariantError; expected analytic failures
// (unbounded pseudoinverse and the like) land in the report as fields.
Json run_pipeline(const OperatorDescription& d, const PipelineOptions& opt = {});

}  // namespace amspec
