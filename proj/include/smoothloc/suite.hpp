#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "smoothloc/corpus.hpp"
#include "smoothloc/report.hpp"

namespace smoothloc {

/// One line of a verification report.
struct SuiteRecord {
  /// "frame:C4", "semilattice:J3_2", "morphisms:C3->C4", "joinhoms:J2_1", ...
  std::string id;
  std::string check;
  /// "pass", "fail", "finite-trivial" or "skipped".
  std::string status;
  std::string witness;
  std::string note;
  double millis = 0;

  bool failed() const { return status == "fail"; }
};

/// Check groups that run_suite knows about, in report order.
const std::vector<std::string>& registered_modules();

struct SuiteOptions {
  CorpusSpec corpus;
  /// Subset of registered_modules(); empty selects all of them.
  std::vector<std::string> modules;
  /// Worker threads; 0 lets the scheduler decide.
  int threads = 0;
};

struct SuiteReport {
  std::vector<SuiteRecord> records;
  std::string manifest;
  std::size_t frames = 0;
  std::size_t semilattices = 0;
  std::size_t morphisms = 0;
  std::size_t wdb_violations = 0;
  std::size_t join_homs = 0;

  std::size_t failures() const;
};

/// Generates the corpus and runs the selected checks on every object.
/// Records appear in object order regardless of scheduling. Throws Error
/// for an unknown module name and SpecTooLarge from the generators.
SuiteReport run_suite(const SuiteOptions& options);

/// A CheckOutcome's status string.
std::string status_of(const CheckOutcome& outcome);

/// JSON-lines, one record per line; without timing the text depends only
/// on the options.
std::string to_jsonl(const SuiteReport& report, bool with_timing = true);

/// Throws IOFailure when the file cannot be written.
void write_report(const SuiteReport& report, const std::filesystem::path& path, bool with_timing = true);

}  // namespace smoothloc
