#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "edgeideals/ideal.hpp"

namespace edgeideals {

/// Coefficient field for homology ranks: the rationals (exact fraction-free
/// elimination) or a prime field.
struct FieldSpec {
  bool rationals = true;
  std::uint32_t prime = 0;

  static FieldSpec q() { return FieldSpec{}; }
  static FieldSpec mod(std::uint32_t p);
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Simplicial complex on {1..n}, stored as facets plus a face bitmap.
class SimplicialComplex {
 public:
  /// Builds the complex generated downward by the given faces.
  SimplicialComplex(int n, const std::vector<VertexSet>& faces);

  int n() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool face(std::uint32_t mask) const { return (bits_[mask >> 6] >> (mask & 63u)) & 1u; }
  bool downward_closed() const;

 private:
  int n_;
  std::vector<VertexSet> facets_;
  std::vector<std::uint64_t> bits_;
};

/// Faces are the supports of the squarefree monomials outside the ideal.
SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal);

/// Multigraded Betti numbers of S/I over the chosen field, via reduced
/// homology of induced subcomplexes of the Stanley-Reisner complex:
/// beta_{i,sigma} = dim H~_{|sigma|-i-1}(complex restricted to sigma).
class BettiTable {
 public:
  BettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  int entry(int i, VertexSet sigma) const;
  const std::map<std::pair<int, std::uint32_t>, int>& entries() const { return entries_; }

  int projdim() const;                      ///< max i with a nonzero entry
  int regularity() const;                   ///< max |sigma| - i over nonzero entries
  void add(int i, std::uint32_t sigma, int value);

 private:
  int n_;
  FieldSpec field_;
  std::map<std::pair<int, std::uint32_t>, int> entries_;
};

/// Rejects the zero ideal (see homological_invariants for its convention).
BettiTable betti_table(const SquarefreeIdeal& ideal, FieldSpec field = FieldSpec::q());

struct HomologicalInvariants {
  int projdim;
  int depth;  ///< n - projdim (Auslander-Buchsbaum)
  int reg;
};

/// Invariants of S/I; the zero ideal returns (0, n, 0) by convention.
HomologicalInvariants homological_invariants(const SquarefreeIdeal& ideal,
                                             FieldSpec field = FieldSpec::q());

/// Reduced homology ranks of a complex restricted to sigma, indexed from
/// degree -1 (entry [0] is H~_{-1}) up to degree |sigma| - 1. Exposed for the
/// test oracles.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& complex, VertexSet sigma,
                                        FieldSpec field);

}  // namespace edgeideals
