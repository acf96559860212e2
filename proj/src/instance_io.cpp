#include "edgeideals/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace edgeideals {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("instance line " + std::to_string(line) + ": " + what);
}

}  // namespace

ParsedInstance parse_instance_line(const std::string& line, std::size_t line_number,
                                   const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(line_number, std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) fail(line_number, "expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(line_number, "field 'n' missing or not an integer");
  }
  const int n = doc["n"].get<int>();
  if (n < 0 || n > kMaxVertices) {
    fail(line_number, "field 'n' outside 0.." + std::to_string(kMaxVertices));
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail(line_number, "field 'edges' missing or not a list");
  }
  std::vector<VertexSet> edges;
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_array()) fail(line_number, "field 'edges' must hold lists of vertex indices");
    std::vector<int> indices;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) fail(line_number, "vertex index is not an integer");
      indices.push_back(v.get<int>());
    }
    if (indices.empty()) fail(line_number, "empty edge");
    VertexSet set;
    try {
      set = VertexSet::from_indices(indices);
    } catch (const std::invalid_argument& e) {
      fail(line_number, e.what());
    }
    if (set.size() != static_cast<int>(indices.size())) fail(line_number, "repeated vertex in edge");
    if (!set.subset_of(VertexSet::full(n))) {
      fail(line_number, "edge " + set.to_string() + " outside 1.." + std::to_string(n));
    }
    edges.push_back(set);
  }

  std::string id;
  if (doc.contains("id")) {
    if (!doc["id"].is_string()) fail(line_number, "field 'id' must be a string");
    id = doc["id"].get<std::string>();
  } else {
    id = "line" + std::to_string(line_number);
  }

  const Clutter minimalized = Clutter::minimal(n, edges);
  const bool was_minimalized = minimalized.edge_count() != edges.size();
  if (was_minimalized && options.strict_antichain) {
    fail(line_number, "edges are not an antichain");
  }
  return ParsedInstance{std::move(id), minimalized, was_minimalized};
}

std::vector<ParsedInstance> read_instances(std::istream& in, const ParseOptions& options) {
  std::vector<ParsedInstance> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_instance_line(line, number, options));
  }
  return out;
}

std::vector<ParsedInstance> read_instance_file(const std::string& path,
                                               const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return read_instances(in, options);
}

namespace {

json edges_json(const Clutter& c) {
  json edges = json::array();
  for (VertexSet e : c.edges()) edges.push_back(e.indices());
  return edges;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Informative: return "informative";
  }
  return "?";
}

template <typename T>
json opt_json(const std::optional<T>& v) {
  if (v.has_value()) return json(*v);
  return json(nullptr);
}

json intervals_json(const std::vector<Interval>& intervals) {
  json out = json::array();
  for (const Interval& iv : intervals) {
    out.push_back(json{{"lower", iv.lower.indices()}, {"upper", iv.upper.indices()}});
  }
  return out;
}

}  // namespace

std::string serialize_instance(const std::string& id, const Clutter& c) {
  json doc;
  doc["id"] = id;
  doc["n"] = c.n();
  doc["edges"] = edges_json(c);
  return doc.dump();
}

std::string report_record(const BoundReport& report, const Clutter& c,
                          const RecordOptions& options, double elapsed_ms) {
  json doc;
  doc["id"] = report.id;
  doc["n"] = report.n;
  doc["edges"] = edges_json(c);
  doc["graph"] = report.graph;
  doc["all_trivial"] = report.all_trivial;

  json inv;
  inv["sdepth_quotient"] = opt_json(report.sdepth_quotient);
  inv["sdepth_ideal"] = opt_json(report.sdepth_ideal);
  inv["sreg_quotient"] = opt_json(report.sreg_quotient);
  inv["sreg_ideal"] = opt_json(report.sreg_ideal);
  inv["depth"] = opt_json(report.depth);
  inv["projdim"] = opt_json(report.projdim);
  inv["reg"] = opt_json(report.reg);
  inv["size"] = opt_json(report.size);
  inv["cosize"] = opt_json(report.cosize);
  doc["invariants"] = inv;

  json bounds;
  bounds["domination_index"] = opt_json(report.domination_index);
  bounds["bound_domination"] = opt_json(report.bound_domination);
  bounds["bound_free_vertex_matching"] = opt_json(report.bound_free_vertex_matching);
  bounds["matching_maximum"] = opt_json(report.matching_maximum);
  bounds["matching_minimax"] = opt_json(report.matching_minimax);
  bounds["collage_weight"] = opt_json(report.collage_weight);
  bounds["induced_matching"] = opt_json(report.induced_matching);
  bounds["cochord"] = opt_json(report.cochord);
  bounds["cochord_exact"] = opt_json(report.cochord_exact);
  bounds["cochordal"] = opt_json(report.cochordal);
  bounds["clique_partition"] = opt_json(report.clique_partition);
  doc["bounds"] = bounds;

  json checks = json::array();
  for (const InequalityCheck& check : report.checks) {
    json c2;
    c2["id"] = check.id;
    c2["relation"] = check.relation;
    c2["lhs"] = opt_json(check.lhs);
    c2["rhs"] = opt_json(check.rhs);
    c2["verdict"] = verdict_name(check.verdict);
    checks.push_back(std::move(c2));
  }
  doc["checks"] = checks;

  json conj;
  conj["sdepth_minus_depth"] = opt_json(report.gap_sdepth_minus_depth);
  conj["reg_minus_sreg"] = opt_json(report.gap_reg_minus_sreg);
  doc["conjectures"] = conj;

  if (options.witnesses) {
    doc["witness_quotient"] = intervals_json(report.witness_quotient);
    doc["witness_ideal"] = intervals_json(report.witness_ideal);
  }
  if (options.timings) doc["time_ms"] = elapsed_ms;
  return doc.dump();
}

namespace {

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v.has_value()) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "1" : "0";
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string report_csv_header() {
  return "id,n,edges,graph,all_trivial,sdepth_quotient,sdepth_ideal,sreg_quotient,sreg_ideal,"
         "depth,projdim,reg,size,cosize,domination_index,bound_domination,"
         "bound_free_vertex_matching,matching_maximum,matching_minimax,collage_weight,"
         "induced_matching,cochord,cochord_exact,cochordal,clique_partition,"
         "pass,fail,skipped,informative,gap_sdepth_minus_depth,gap_reg_minus_sreg";
}

std::string report_csv_row(const BoundReport& report) {
  std::size_t pass = 0, failed = 0, skipped = 0, informative = 0;
  for (const InequalityCheck& check : report.checks) {
    switch (check.verdict) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Fail: ++failed; break;
      case Verdict::Skipped: ++skipped; break;
      case Verdict::Informative: ++informative; break;
    }
  }
  std::ostringstream row;
  row << report.id << ',' << report.n << ',' << report.edge_count << ','
      << (report.graph ? 1 : 0) << ',' << (report.all_trivial ? 1 : 0) << ','
      << cell(report.sdepth_quotient) << ',' << cell(report.sdepth_ideal) << ','
      << cell(report.sreg_quotient) << ',' << cell(report.sreg_ideal) << ','
      << cell(report.depth) << ',' << cell(report.projdim) << ',' << cell(report.reg) << ','
      << cell(report.size) << ',' << cell(report.cosize) << ','
      << cell(report.domination_index) << ',' << cell(report.bound_domination) << ','
      << cell(report.bound_free_vertex_matching) << ',' << cell(report.matching_maximum) << ','
      << cell(report.matching_minimax) << ',' << cell(report.collage_weight) << ','
      << cell(report.induced_matching) << ',' << cell(report.cochord) << ','
      << cell(report.cochord_exact) << ',' << cell(report.cochordal) << ','
      << cell(report.clique_partition) << ',' << pass << ',' << failed << ',' << skipped << ','
      << informative << ',' << cell(report.gap_sdepth_minus_depth) << ','
      << cell(report.gap_reg_minus_sreg);
  return row.str();
}

}  // namespace edgeideals
