// suites.hpp — Named randomized property suites behind the CLI `suite`
// command; each verifies one slice of the exact layer against independent
// recomputation or the numeric oracle.

#pragma once

#include "amspec/describe.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace amspec {

struct SuiteResult {
  std::string name;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::vector<std::string> notes;     // one line per failure (bounded)
  Json counterexamples = Json::array();  // bounded dump of failing inputs
  double seconds = 0;
  bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();

// Runs `trials` independent cases of the named suite; throws SchemaError for
// unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::int64_t trials);

}  // namespace amspec
