#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "edgeideals/generator.hpp"
#include "edgeideals/homology.hpp"
#include "edgeideals/sdepth.hpp"

using namespace edgeideals;

namespace {

VertexSet vs(std::initializer_list<int> idx) { return VertexSet::from_indices(std::vector<int>(idx)); }

SquarefreeIdeal make(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<VertexSet> list;
  for (const auto& g : gens) list.push_back(VertexSet::from_indices(std::vector<int>(g)));
  return SquarefreeIdeal(n, list);
}

SquarefreeIdeal maximal_ideal(int n) {
  std::vector<VertexSet> gens;
  for (int v = 1; v <= n; ++v) gens.push_back(VertexSet().with(v));
  return SquarefreeIdeal(n, gens);
}

SquarefreeIdeal random_ideal(Rng& rng, int n) {
  GenConfig config;
  config.mode = GenConfig::Mode::MixedProb;
  config.n = n;
  config.size_probs.assign(static_cast<std::size_t>(n), 0.0);
  if (n >= 1) config.size_probs[0] = 0.08;
  if (n >= 2) config.size_probs[1] = 0.35;
  if (n >= 3) config.size_probs[2] = 0.2;
  return edge_ideal(random_clutter(config, rng));
}

// 6-vertex triangulation of the real projective plane, encoded through its
// minimal non-faces; homology differs between Q and F_2.
SquarefreeIdeal projective_plane_ideal() {
  const std::vector<std::vector<int>> facets = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6},
                                                {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6},
                                                {3, 4, 5}, {3, 4, 6}};
  std::vector<VertexSet> nonfaces;
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    if (std::popcount(mask) != 3) continue;
    bool facet = false;
    for (const auto& f : facets) {
      if (VertexSet::from_indices(f) == VertexSet(mask)) facet = true;
    }
    if (!facet) nonfaces.push_back(VertexSet(mask));
  }
  return SquarefreeIdeal(6, nonfaces);
}

}  // namespace

TEST_CASE("stanley-reisner complexes") {
  const SimplicialComplex c1 = stanley_reisner(make(2, {{1, 2}}));
  CHECK(c1.face(0b00));
  CHECK(c1.face(0b01));
  CHECK(c1.face(0b10));
  CHECK_FALSE(c1.face(0b11));
  CHECK(c1.downward_closed());
  CHECK(c1.facets() == std::vector<VertexSet>{vs({1}), vs({2})});

  const SimplicialComplex full = stanley_reisner(SquarefreeIdeal::zero(3));
  CHECK(full.facets() == std::vector<VertexSet>{vs({1, 2, 3})});

  const SimplicialComplex point = stanley_reisner(maximal_ideal(2));
  CHECK(point.facets() == std::vector<VertexSet>{VertexSet()});
}

TEST_CASE("betti numbers of small resolutions") {
  // one generator: Koszul complex on one element
  const BettiTable t1 = betti_table(make(2, {{1, 2}}));
  CHECK(t1.entry(0, VertexSet()) == 1);
  CHECK(t1.entry(1, vs({1, 2})) == 1);
  CHECK(t1.projdim() == 1);
  CHECK(t1.regularity() == 1);

  // complete intersection of two quadrics
  const BettiTable t2 = betti_table(make(4, {{1, 2}, {3, 4}}));
  CHECK(t2.entry(1, vs({1, 2})) == 1);
  CHECK(t2.entry(1, vs({3, 4})) == 1);
  CHECK(t2.entry(2, vs({1, 2, 3, 4})) == 1);
  CHECK(t2.projdim() == 2);
  CHECK(t2.regularity() == 2);

  // residue field: full Koszul resolution
  const BettiTable t3 = betti_table(maximal_ideal(3));
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CHECK(t3.entry(std::popcount(mask), VertexSet(mask)) == 1);
  }
  CHECK(t3.projdim() == 3);
  CHECK(t3.regularity() == 0);
}

TEST_CASE("homological invariants") {
  const auto h1 = homological_invariants(make(2, {{1, 2}}));
  CHECK(h1.projdim == 1);
  CHECK(h1.depth == 1);
  CHECK(h1.reg == 1);

  const auto h2 = homological_invariants(maximal_ideal(3));
  CHECK(h2.projdim == 3);
  CHECK(h2.depth == 0);
  CHECK(h2.reg == 0);

  const auto h3 = homological_invariants(SquarefreeIdeal::zero(4));
  CHECK(h3.projdim == 0);
  CHECK(h3.depth == 4);
  CHECK(h3.reg == 0);

  // reg(S/I(2K2)) = 2 >= induced matching
  const auto h4 = homological_invariants(make(4, {{1, 2}, {3, 4}}));
  CHECK(h4.reg == 2);
}

TEST_CASE("first syzygies sit at the minimal generators") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const SquarefreeIdeal ideal = random_ideal(rng, 6);
    if (ideal.is_zero()) continue;
    const BettiTable table = betti_table(ideal);
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
      const bool generator =
          std::find(ideal.gens().begin(), ideal.gens().end(), VertexSet(mask)) !=
          ideal.gens().end();
      CHECK((table.entry(1, VertexSet(mask)) > 0) == generator);
    }
    // entries only at unions of generator supports
    for (const auto& [key, value] : table.entries()) {
      const VertexSet sigma(key.second);
      VertexSet reachable;
      for (VertexSet g : ideal.gens()) {
        if (g.subset_of(sigma)) reachable = reachable | g;
      }
      CHECK(reachable == sigma);
    }
  }
}

TEST_CASE("cones have no reduced homology") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    // variable 6 appears in no generator, so every subcomplex through it is a cone
    const SquarefreeIdeal ideal = random_ideal(rng, 5);
    if (ideal.is_zero()) continue;
    const SquarefreeIdeal wider(6, ideal.gens());
    const SimplicialComplex complex = stanley_reisner(wider);
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
      if (!(mask >> 5 & 1u)) continue;
      for (int h : reduced_homology_ranks(complex, VertexSet(mask), FieldSpec::q())) {
        CHECK(h == 0);
      }
    }
  }
}

TEST_CASE("terai duality cross-check") {
  Rng rng(43);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 30; ++trial) {
    const SquarefreeIdeal ideal = random_ideal(rng, 6);
    if (ideal.is_zero()) continue;
    ++checked;
    const auto primal = homological_invariants(ideal);
    const auto dual = homological_invariants(alexander_dual(ideal));
    CHECK(primal.projdim - 1 == dual.reg);
    CHECK(primal.depth + primal.projdim == 6);  // Auslander-Buchsbaum by construction
  }
  CHECK(checked == 30);
}

TEST_CASE("projective plane distinguishes characteristics") {
  const SquarefreeIdeal rp2 = projective_plane_ideal();
  CHECK(rp2.gens().size() == 10);
  const auto over_q = homological_invariants(rp2, FieldSpec::q());
  const auto over_f2 = homological_invariants(rp2, FieldSpec::mod(2));
  const auto over_f3 = homological_invariants(rp2, FieldSpec::mod(3));
  CHECK(over_q.depth == 3);   // Cohen-Macaulay over Q
  CHECK(over_f2.depth == 2);  // torsion shows up mod 2
  CHECK(over_q.reg == 2);
  CHECK(over_f2.reg == 3);
  CHECK(over_f3.depth == over_q.depth);
  CHECK_THROWS_AS(FieldSpec::mod(4), std::invalid_argument);
}

TEST_CASE("characteristic-free instances agree across fields") {
  for (const SquarefreeIdeal& ideal :
       {make(4, {{1, 2}, {3, 4}}), make(3, {{1, 2}, {2, 3}}), maximal_ideal(4),
        make(6, {{1, 2}, {3, 4}, {5, 6}})}) {
    const auto q = homological_invariants(ideal, FieldSpec::q());
    const auto f2 = homological_invariants(ideal, FieldSpec::mod(2));
    const auto f3 = homological_invariants(ideal, FieldSpec::mod(3));
    CHECK(q.projdim == f2.projdim);
    CHECK(q.projdim == f3.projdim);
    CHECK(q.reg == f2.reg);
    CHECK(q.reg == f3.reg);
  }
}
