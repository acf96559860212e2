#pragma once

#include <cstdint>
#include <vector>

#include "edgeideals/clutter.hpp"
#include "edgeideals/vertex_set.hpp"

namespace edgeideals {

/// Squarefree monomial ideal, represented by the antichain of its minimal
/// generator supports. An empty generator list is the zero ideal; the unit
/// ideal (an empty generator support) is rejected at construction.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(int n, std::vector<VertexSet> gens);

  static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }
  static SquarefreeIdeal minimal(int n, const std::vector<VertexSet>& sets);

  int n() const { return n_; }
  const std::vector<VertexSet>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_principal() const { return gens_.size() == 1; }

  /// Membership of the squarefree monomial with support sigma.
  bool contains(VertexSet sigma) const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int n_;
  std::vector<VertexSet> gens_;
};

/// The edge ideal of a clutter: generators are the edges verbatim.
SquarefreeIdeal edge_ideal(const Clutter& c);
/// Inverse of edge_ideal.
Clutter clutter_of(const SquarefreeIdeal& ideal);

/// Alexander dual: the generators of the dual are the minimal transversals of
/// the generator supports (minimal vertex covers of the associated clutter).
/// Computed as the intersection of the variable primes of the generators.
/// Rejects the zero ideal.
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal);

SquarefreeIdeal ideal_sum(const std::vector<SquarefreeIdeal>& ideals);
SquarefreeIdeal ideal_intersection(const std::vector<SquarefreeIdeal>& ideals);

/// Lyubeznik size: v + n - h - 1 where the Q_i are the primary components
/// (for squarefree ideals the variable primes of the dual's generators),
/// v is the least number of components whose sum equals the sum of all,
/// and h is the height of the total sum. Rejects the zero ideal.
int ideal_size(const SquarefreeIdeal& ideal);

/// Cosize: deg lcm(generators) - w where w is the least number of generators
/// whose lcm equals the lcm of all. Rejects the zero ideal.
int ideal_cosize(const SquarefreeIdeal& ideal);

/// Direct-sum classification of the squarefree part of an ideal relative to a
/// chosen primary component (the splitter). Every squarefree monomial w in I
/// factors as w = u * v with u supported in the splitter's variables and v
/// outside; w's label is the unique subset tau of component indices with
/// u in the intersection of the primed components outside tau, u outside the
/// sum of the primed components in tau, and v in the double-primed components
/// of tau.
struct SplitClassification {
  int splitter;                 ///< 1-based component index used as splitter
  int component_count;          ///< s = number of primary components
  std::vector<VertexSet> components;
  /// One entry per squarefree monomial of the ideal, in canonical order.
  struct Entry {
    VertexSet monomial;
    std::uint32_t label;  ///< tau as a bitmask over component indices (bit j = component j+1)
  };
  std::vector<Entry> entries;
};

/// Computes the classification and verifies that each squarefree monomial
/// receives exactly one admissible label (exhaustively over all 2^s labels
/// when s <= exhaustive_limit), and that the full label set never occurs.
/// Throws if any monomial receives zero or multiple labels.
SplitClassification split_decompose(const SquarefreeIdeal& ideal, int splitter,
                                    int exhaustive_limit = 12);

}  // namespace edgeideals
