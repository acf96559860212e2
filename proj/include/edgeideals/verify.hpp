#pragma once

#include <iosfwd>
#include <map>
#include <optional>

#include "edgeideals/instance_io.hpp"

namespace edgeideals {

struct SuiteOptions {
  ReportOptions report;
  RecordOptions record;
  int jobs = 1;  ///< worker threads; output order is input order regardless
  bool emit_records = true;
  bool emit_csv = false;
};

struct SuiteTotals {
  std::uint64_t instances = 0;
  std::uint64_t pass = 0, fail = 0, skipped = 0, informative = 0;
  std::uint64_t errors = 0;     ///< per-instance errors (localized, run continues)
  std::uint64_t edgeless = 0;   ///< instances reported informatively only
  std::map<int, std::uint64_t> gap_sdepth_hist;  ///< sdepth(S/I) - depth(S/I)
  std::map<int, std::uint64_t> gap_reg_hist;     ///< reg(S/I) - sreg(S/I)
  std::uint64_t conjecture_violations = 0;       ///< negative gaps (reported, never failing)

  /// Nonzero exactly when a proved inequality failed.
  int exit_code() const { return fail > 0 ? 2 : 0; }
};

/// Runs bound_report on every instance; emits one record line per instance in
/// input order (and/or CSV rows), aggregates verdicts and conjecture gaps.
/// Edgeless instances get an informative record: the edge ideal is zero, the
/// domination term is dropped from the bound, and no verdict is recorded.
/// Per-instance errors are localized: the record carries an "error" field.
SuiteTotals run_suite(const std::vector<ParsedInstance>& instances, const SuiteOptions& options,
                      std::ostream* records, std::ostream* csv);

/// Human-readable summary block (pass/fail/skip counts and gap histograms).
std::string summarize(const SuiteTotals& totals);

}  // namespace edgeideals
