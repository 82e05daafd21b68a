#pragma once

// Batch commands over parsed documents.  Every command produces a JSON
// report with "schema": 1; scalars are written as strings ("3/7",
// "2 mod 5") and the output is byte-stable for a fixed input and seed.

#include "quivkit/dsl.hpp"
#include "quivkit/vquiver.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace quivkit::cli {

/// gq, cpa, psi, phi, counit, factor-delta, check-suite.
const std::vector<std::string>& commands();

struct Outcome {
  nlohmann::ordered_json report;
  bool passed = true;
  /// Graphviz text for the declared quivers (and, for gq, the Gabriel quivers).
  std::string dot;
};

/// Elaborates the document and runs one command.  Elaboration failures are
/// thrown as dsl::DslError at the offending declaration; failures of the
/// command itself are recorded in the report.
Outcome run(const dsl::Document& doc, const std::string& command, std::uint64_t seed);

/// Elaboration only; throws dsl::DslError on the first bad declaration.
void elaborate(const dsl::Document& doc);

/// QUIVKIT_SEED if set and numeric, otherwise a fixed default.
std::uint64_t seed_from_env();

/// min(2 + longest simple path, 8).
int default_level(const VQuiver& vq);

}  // namespace quivkit::cli
