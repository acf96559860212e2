#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeideals/clutter.hpp"
#include "edgeideals/homology.hpp"
#include "edgeideals/sdepth.hpp"

namespace edgeideals {

/// Index of edgewise domination: the least number of edges F such that every
/// vertex of the reduced clutter not lying in an edge of F and not lying in a
/// trivial edge has a neighbor inside an edge of F. A clutter with only
/// trivial edges has index 0 (every vertex is exempt). Rejects edgeless
/// clutters.
int edgewise_domination_index(const Clutter& c);

struct MatchingNumbers {
  int maximum;  ///< largest set of pairwise disjoint edges
  int minimax;  ///< smallest maximal matching
};
MatchingNumbers matching_numbers(const Clutter& c);

/// Largest matching whose vertex set induces exactly the matching; rejects
/// non-graphs.
int induced_matching_number(const Clutter& c);

/// Chordality via repeated simplicial-vertex elimination; rejects non-graphs.
bool is_chordal_graph(const Clutter& g);
/// Whether the complement graph is chordal; rejects non-graphs.
bool is_cochordal_graph(const Clutter& g);

struct CochordCover {
  int value;
  bool exact;  ///< exact set cover up to the edge limit, greedy beyond
};
/// Minimum number of co-chordal subgraphs covering the edges; exact for
/// |E| <= exact_edge_limit. Rejects non-graphs; an edgeless graph has cover
/// number 0.
CochordCover cochordal_cover_number(const Clutter& g, std::size_t exact_edge_limit = 12);

struct TwoCollage {
  int weight;                      ///< sum of (|e|-1) over the chosen edges
  std::vector<std::size_t> edges;  ///< indices into the edge list
};
/// Cheapest edge subset such that every edge, after deleting one vertex, fits
/// inside a chosen edge. Rejects edgeless clutters.
TwoCollage min_two_collage(const Clutter& c);

/// epsilon(C) + n - |V(C^red)| (lower bound for depth and sdepth of S/I).
int domination_bound(const Clutter& c);
/// |V| - |E| + |E'| - beta(C') where C' keeps the edges without free
/// vertices and beta is its matching number (upper bound for sreg(S/I)).
int free_vertex_matching_bound(const Clutter& c);
/// Least s such that the vertices split into an independent set and s
/// cliques (upper bound for sreg(S/I)); rejects non-graphs and n > 12.
int clique_partition_bound(const Clutter& g);
/// Vertex sets of the maximal cliques (for the clique-deletion bound).
std::vector<VertexSet> maximal_cliques(const Clutter& g);

enum class Verdict { Pass, Fail, Skipped, Informative };

struct InequalityCheck {
  std::string id;
  std::string relation;  ///< "<=" or ">="
  std::optional<long long> lhs;
  std::optional<long long> rhs;
  Verdict verdict;
};

struct ReportOptions {
  FieldSpec field = FieldSpec::q();
  SearchLimits limits = default_limits();
  bool graph_checks = true;
  bool clique_deletion = true;
  bool witnesses = false;  ///< record the sdepth witness partitions
  std::size_t cochord_exact_edges = 12;
};

/// One instance's invariants, bound values, and per-inequality verdicts.
/// Every verdict is recomputable from the recorded values; Indeterminate
/// engine outcomes propagate as absent values and Skipped verdicts.
struct BoundReport {
  std::string id;
  int n = 0;
  std::size_t edge_count = 0;
  bool graph = false;
  bool all_trivial = false;

  std::optional<int> sdepth_quotient, sdepth_ideal;
  std::optional<int> sreg_quotient, sreg_ideal;
  std::optional<int> depth, projdim, reg;
  std::optional<int> size, cosize;

  std::optional<int> domination_index;
  std::optional<int> bound_domination;
  std::optional<int> bound_free_vertex_matching;
  std::optional<int> matching_maximum, matching_minimax;
  std::optional<int> collage_weight;
  std::optional<int> induced_matching;      // graphs
  std::optional<int> cochord;               // graphs
  std::optional<bool> cochord_exact;        // graphs
  std::optional<bool> cochordal;            // graphs
  std::optional<int> clique_partition;      // graphs

  std::vector<InequalityCheck> checks;

  std::optional<int> gap_sdepth_minus_depth;  // conjecture, reported only
  std::optional<int> gap_reg_minus_sreg;      // conjecture, reported only

  std::vector<Interval> witness_quotient;  // when ReportOptions::witnesses
  std::vector<Interval> witness_ideal;

  bool any_failure() const;
  bool any_skip() const;
};

/// Runs the full pipeline on a clutter with at least one edge.
BoundReport bound_report(const Clutter& c, const ReportOptions& options = {},
                         const std::string& id = "");

}  // namespace edgeideals
