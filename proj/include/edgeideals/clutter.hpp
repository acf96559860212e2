#pragma once

#include <cstddef>
#include <vector>

#include "edgeideals/vertex_set.hpp"

namespace edgeideals {

/// A clutter: a finite vertex set {1..n} together with an antichain of
/// nonempty edges (no edge contains another). Immutable after construction;
/// edges are kept deduplicated in canonical order.
class Clutter {
 public:
  /// Validating constructor: throws if n is out of range, an edge is empty or
  /// out of range, or the edge list is not an antichain.
  Clutter(int n, std::vector<VertexSet> edges);

  /// Keeps only the minimal members of `sets` (empty sets must not appear).
  static Clutter minimal(int n, const std::vector<VertexSet>& sets);

  int n() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Union of all edges (the non-isolated vertices).
  VertexSet vertex_support() const;
  bool is_graph() const;           // every edge has exactly two vertices
  bool all_edges_trivial() const;  // every edge is a singleton
  bool has_nontrivial_edge() const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  struct Unchecked {};
  Clutter(int n, std::vector<VertexSet> edges, Unchecked);

  int n_;
  std::vector<VertexSet> edges_;
};

struct ReduceResult {
  Clutter reduced;
  VertexSet isolated;               ///< isolated vertices of the input
  std::vector<int> original_label;  ///< original_label[i] = input index of new vertex i+1
};

/// Removes the isolated vertices and reindexes the rest densely.
ReduceResult reduce(const Clutter& c);

/// Minimal members of E(C) union {a}; same vertex set. Rejects empty a.
Clutter add_set(const Clutter& c, VertexSet a);

struct ContractResult {
  Clutter contracted;  ///< on the vertex set V minus A, reindexed densely
  bool improper;       ///< true when some edge contracted to the empty set
  std::vector<int> original_label;
};

/// Minimal members of {e minus A : e in E(C)} on the vertex set V minus A.
/// An edge contracted to the empty set flags the result improper instead of
/// throwing. Rejects empty A.
ContractResult contract(const Clutter& c, VertexSet a);

/// Vertices sharing at least one edge with v (v excluded). Rejects v outside 1..n.
VertexSet neighbors(const Clutter& c, int v);

/// Indices of the edges containing a free vertex (a vertex in no other edge).
std::vector<std::size_t> free_vertex_edges(const Clutter& c);

/// Relabels vertices by a permutation: perm[i] is the new index of vertex i+1.
Clutter relabel(const Clutter& c, const std::vector<int>& perm);

}  // namespace edgeideals
