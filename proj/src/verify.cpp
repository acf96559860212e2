#include "edgeideals/verify.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace edgeideals {

namespace {

struct InstanceOutcome {
  std::string record;
  std::string csv;
  std::optional<BoundReport> report;
  bool edgeless = false;
  bool error = false;
};

std::string edgeless_record(const ParsedInstance& instance) {
  nlohmann::json doc;
  doc["id"] = instance.id;
  doc["n"] = instance.clutter.n();
  doc["edges"] = nlohmann::json::array();
  doc["graph"] = true;
  doc["all_trivial"] = true;
  doc["informative"] = "edgeless: edge ideal is zero; depth(S/0) = n and the domination "
                       "bound degenerates to n";
  doc["invariants"] = {{"depth", instance.clutter.n()}};
  doc["bounds"] = {{"bound_domination", instance.clutter.n()}};
  doc["checks"] = nlohmann::json::array();
  return doc.dump();
}

std::string error_record(const ParsedInstance& instance, const std::string& what) {
  nlohmann::json doc;
  doc["id"] = instance.id;
  doc["n"] = instance.clutter.n();
  doc["error"] = what;
  return doc.dump();
}

InstanceOutcome process(const ParsedInstance& instance, const SuiteOptions& options) {
  InstanceOutcome out;
  if (instance.clutter.edge_count() == 0) {
    out.edgeless = true;
    out.record = edgeless_record(instance);
    out.csv = instance.id + "," + std::to_string(instance.clutter.n()) +
              ",0,1,1,,,,,"
              ",,,,,,,,,,,,,,,0,0,0,1,,";
    return out;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    BoundReport report = bound_report(instance.clutter, options.report, instance.id);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    out.record = report_record(report, instance.clutter, options.record, ms);
    out.csv = report_csv_row(report);
    out.report = std::move(report);
  } catch (const std::exception& e) {
    out.error = true;
    out.record = error_record(instance, e.what());
    out.csv = instance.id + ",,,,,,,,,,,,,,,,,,,,,,,,,0,0,0,0,,";
  }
  return out;
}

void accumulate(SuiteTotals& totals, const InstanceOutcome& outcome) {
  ++totals.instances;
  if (outcome.edgeless) {
    ++totals.edgeless;
    ++totals.informative;
    return;
  }
  if (outcome.error) {
    ++totals.errors;
    return;
  }
  const BoundReport& report = *outcome.report;
  for (const InequalityCheck& check : report.checks) {
    switch (check.verdict) {
      case Verdict::Pass: ++totals.pass; break;
      case Verdict::Fail: ++totals.fail; break;
      case Verdict::Skipped: ++totals.skipped; break;
      case Verdict::Informative: ++totals.informative; break;
    }
  }
  if (report.gap_sdepth_minus_depth.has_value()) {
    ++totals.gap_sdepth_hist[*report.gap_sdepth_minus_depth];
    if (*report.gap_sdepth_minus_depth < 0) ++totals.conjecture_violations;
  }
  if (report.gap_reg_minus_sreg.has_value()) {
    ++totals.gap_reg_hist[*report.gap_reg_minus_sreg];
    if (*report.gap_reg_minus_sreg < 0) ++totals.conjecture_violations;
  }
}

}  // namespace

SuiteTotals run_suite(const std::vector<ParsedInstance>& instances, const SuiteOptions& options,
                      std::ostream* records, std::ostream* csv) {
  SuiteTotals totals;
  if (csv != nullptr && options.emit_csv) *csv << report_csv_header() << '\n';

  std::vector<InstanceOutcome> outcomes(instances.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) outcomes[i] = process(instances[i], options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= instances.size()) return;
          outcomes[i] = process(instances[i], options);
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }

  // input order, regardless of worker schedule
  for (const InstanceOutcome& outcome : outcomes) {
    if (records != nullptr && options.emit_records) *records << outcome.record << '\n';
    if (csv != nullptr && options.emit_csv) *csv << outcome.csv << '\n';
    accumulate(totals, outcome);
  }
  return totals;
}

std::string summarize(const SuiteTotals& totals) {
  std::ostringstream out;
  out << "instances: " << totals.instances << " (edgeless: " << totals.edgeless
      << ", errors: " << totals.errors << ")\n";
  out << "checks: pass " << totals.pass << ", fail " << totals.fail << ", skipped "
      << totals.skipped << ", informative " << totals.informative << "\n";
  out << "conjecture gaps (evidence, not proof):\n";
  out << "  sdepth(S/I) - depth(S/I):";
  for (const auto& [gap, count] : totals.gap_sdepth_hist) {
    out << " [" << gap << "]x" << count;
  }
  out << "\n  reg(S/I) - sreg(S/I):";
  for (const auto& [gap, count] : totals.gap_reg_hist) {
    out << " [" << gap << "]x" << count;
  }
  out << "\n  violations: " << totals.conjecture_violations << "\n";
  return out.str();
}

}  // namespace edgeideals
