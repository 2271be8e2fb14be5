#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "glrect/formats.hpp"
#include "glrect/oeis.hpp"
#include "glrect/sequence.hpp"

namespace glrect {

struct JobSpec {
  Family family = Family::GenDer;
  /// Required for gen-der (two rows) and glr3 (three rows); ignored otherwise.
  std::optional<ShiftSpec> shifts;
  /// Number of terms; for triangle-oracle the largest side.
  unsigned count = 1;
  OutputFormat format = OutputFormat::Plain;
  /// Terms with n <= oracle_depth are recomputed by brute force.
  unsigned oracle_depth = 0;
  bool total = false;
  std::optional<std::string> oeis_id;
  OeisOptions oeis;
  EngineOptions engine;
  /// Empty: the caller prints JobResult::output.
  std::filesystem::path output_path;
};

struct JobResult {
  SequenceRecord record;
  std::string output;
  std::optional<OeisReport> oeis;
};

/// Largest n the family's brute-force oracle accepts.
unsigned oracle_limit(Family family);

/// Throws std::invalid_argument on an inconsistent spec.
void validate(const JobSpec& spec);

/// Runs the pipeline, cross-checks reduced terms with n <= oracle_depth
/// against the oracle (throws OracleMismatch with a dump of the tiles and
/// P_n on disagreement), compares with OEIS when asked, applies --total and
/// writes the formatted output.
JobResult run_job(const JobSpec& spec);

}  // namespace glrect
