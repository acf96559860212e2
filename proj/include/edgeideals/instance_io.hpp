#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edgeideals/bounds.hpp"
#include "edgeideals/clutter.hpp"

namespace edgeideals {

/// One instance of the line-delimited file format: a JSON object per line
/// with fields n (required), edges (required, 1-indexed lists), id and
/// labels (optional).
struct ParsedInstance {
  std::string id;
  Clutter clutter;
  bool minimalized = false;  ///< edges were not an antichain and were minimalized
};

struct ParseOptions {
  bool strict_antichain = false;  ///< antichain violations become hard errors
};

/// Throws std::runtime_error with the line and field on malformed input.
ParsedInstance parse_instance_line(const std::string& line, std::size_t line_number,
                                   const ParseOptions& options = {});

std::vector<ParsedInstance> read_instances(std::istream& in, const ParseOptions& options = {});
std::vector<ParsedInstance> read_instance_file(const std::string& path,
                                               const ParseOptions& options = {});

/// Canonical single-line serialization; parse(serialize(c)) == c.
std::string serialize_instance(const std::string& id, const Clutter& c);

struct RecordOptions {
  bool witnesses = false;
  bool timings = false;  ///< timings break byte-for-byte determinism; off by default
};

/// One JSON report line per instance.
std::string report_record(const BoundReport& report, const Clutter& c,
                          const RecordOptions& options = {}, double elapsed_ms = 0.0);

std::string report_csv_header();
std::string report_csv_row(const BoundReport& report);

}  // namespace edgeideals
