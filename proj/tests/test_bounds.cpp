#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "edgeideals/bounds.hpp"
#include "edgeideals/enumerate.hpp"
#include "edgeideals/generator.hpp"

using namespace edgeideals;

namespace {

VertexSet vs(std::initializer_list<int> idx) { return VertexSet::from_indices(std::vector<int>(idx)); }

Clutter make(int n, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<VertexSet> list;
  for (const auto& e : edges) list.push_back(VertexSet::from_indices(std::vector<int>(e)));
  return Clutter(n, list);
}

Clutter m_k2(int m) {
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) edges.push_back(vs({2 * i + 1, 2 * i + 2}));
  return Clutter(2 * m, edges);
}

Clutter cycle(int n) {
  std::vector<VertexSet> edges;
  for (int i = 1; i < n; ++i) edges.push_back(vs({i, i + 1}));
  edges.push_back(vs({1, n}));
  return Clutter(n, edges);
}

// straight from the definition: try every edge subset in ascending size
int brute_domination(const Clutter& c) {
  const auto& edges = c.edges();
  VertexSet trivial;
  for (VertexSet e : edges) {
    if (e.size() == 1) trivial = trivial | e;
  }
  const VertexSet support = c.vertex_support();
  for (std::size_t size = 0; size <= edges.size(); ++size) {
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      VertexSet in_f;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (mask >> i & 1u) in_f = in_f | edges[i];
      }
      bool dominant = true;
      for (int v : support.indices()) {
        if (in_f.contains(v) || trivial.contains(v)) continue;
        if (!neighbors(c, v).intersects(in_f)) {
          dominant = false;
          break;
        }
      }
      if (dominant) return static_cast<int>(size);
    }
  }
  return static_cast<int>(edges.size());
}

// chordal iff no subset induces a cycle of length >= 4
bool brute_chordal(const Clutter& g) {
  const int n = g.n();
  const auto degree_in = [&](int v, std::uint32_t mask) {
    int d = 0;
    for (VertexSet e : g.edges()) {
      if (e.contains(v) && e.subset_of(VertexSet(mask))) ++d;
    }
    return d;
  };
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    // induced cycle: connected, every vertex of degree exactly 2
    bool all_degree_two = true;
    int edge_count = 0;
    for (VertexSet e : g.edges()) {
      if (e.subset_of(VertexSet(mask))) ++edge_count;
    }
    for (int v : VertexSet(mask).indices()) {
      if (degree_in(v, mask) != 2) {
        all_degree_two = false;
        break;
      }
    }
    if (!all_degree_two || edge_count != std::popcount(mask)) continue;
    // connectivity of the induced subgraph
    std::uint32_t seen = VertexSet(mask).bits() & (0u - VertexSet(mask).bits());
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexSet e : g.edges()) {
        if (!e.subset_of(VertexSet(mask))) continue;
        const std::uint32_t bits = e.bits();
        if ((bits & seen) != 0 && (bits & ~seen) != 0) {
          seen |= bits;
          grew = true;
        }
      }
    }
    if (seen == VertexSet(mask).bits()) return false;
  }
  return true;
}

Clutter random_graph(Rng& rng, int n, double p) {
  GenConfig config;
  config.mode = GenConfig::Mode::UniformProb;
  config.n = n;
  config.d = 2;
  config.p = p;
  return random_clutter(config, rng);
}

}  // namespace

TEST_CASE("edgewise domination index") {
  CHECK(edgewise_domination_index(make(2, {{1, 2}})) == 1);
  CHECK(edgewise_domination_index(make(3, {{1, 2}, {2, 3}})) == 1);
  CHECK(edgewise_domination_index(m_k2(2)) == 2);
  CHECK(edgewise_domination_index(make(3, {{1}, {2}, {3}})) == 0);  // only trivial edges
  CHECK_THROWS_AS(edgewise_domination_index(Clutter(2, {})), std::invalid_argument);

  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    GenConfig config;
    config.mode = GenConfig::Mode::MixedProb;
    config.n = 5;
    config.size_probs = {0.12, 0.35, 0.2, 0.0, 0.0};
    const Clutter c = random_clutter(config, rng);
    if (c.edge_count() == 0 || c.edge_count() > 10) continue;
    const int eps = edgewise_domination_index(c);
    CHECK(eps == brute_domination(c));
    CHECK(eps <= static_cast<int>(c.edge_count()));
    if (c.has_nontrivial_edge()) CHECK(eps >= 1);
  }
}

TEST_CASE("matching numbers") {
  for (int m = 1; m <= 4; ++m) {
    const MatchingNumbers mn = matching_numbers(m_k2(m));
    CHECK(mn.maximum == m);
    CHECK(mn.minimax == m);
  }
  const MatchingNumbers path = matching_numbers(make(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(path.maximum == 2);
  CHECK(path.minimax == 1);
  const MatchingNumbers triangle = matching_numbers(make(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(triangle.maximum == 1);
  CHECK(triangle.minimax == 1);
  const MatchingNumbers none = matching_numbers(Clutter(3, {}));
  CHECK(none.maximum == 0);
  CHECK(none.minimax == 0);
}

TEST_CASE("induced matching") {
  CHECK(induced_matching_number(m_k2(2)) == 2);
  CHECK(induced_matching_number(make(3, {{1, 2}, {2, 3}})) == 1);
  const Clutter k4 = make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(induced_matching_number(k4) == 1);
  CHECK_THROWS_AS(induced_matching_number(make(3, {{1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("chordality") {
  CHECK(is_chordal_graph(m_k2(2)));                 // complement of C4
  CHECK_FALSE(is_chordal_graph(cycle(4)));
  CHECK_FALSE(is_chordal_graph(cycle(5)));
  CHECK(is_chordal_graph(make(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK(is_cochordal_graph(cycle(4)));

  Rng rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const Clutter g = random_graph(rng, 6, 0.45);
    CHECK(is_chordal_graph(g) == brute_chordal(g));
  }
}

TEST_CASE("cochordal cover number") {
  CHECK(cochordal_cover_number(cycle(4)).value == 1);
  CHECK(cochordal_cover_number(cycle(5)).value == 2);
  CHECK(cochordal_cover_number(make(4, {{1, 2}, {2, 3}, {3, 4}})).value == 1);
  CHECK(cochordal_cover_number(Clutter(3, {})).value == 0);

  // greedy beyond the exact limit still covers
  const CochordCover forced_greedy = cochordal_cover_number(cycle(5), 2);
  CHECK_FALSE(forced_greedy.exact);
  CHECK(forced_greedy.value >= 2);

  // greedy never beats the exact optimum
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const Clutter g = random_graph(rng, 5, 0.5);
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    const CochordCover exact = cochordal_cover_number(g, 10);
    const CochordCover greedy = cochordal_cover_number(g, 0);
    CHECK(exact.exact);
    CHECK(greedy.value >= exact.value);
  }
}

TEST_CASE("two-collages") {
  CHECK(min_two_collage(make(3, {{1, 2, 3}})).weight == 2);
  CHECK(min_two_collage(make(4, {{1, 2, 3}, {1, 2, 4}})).weight == 2);
  for (int m = 1; m <= 4; ++m) {
    CHECK(min_two_collage(m_k2(m)).weight == m);
  }
  CHECK_THROWS_AS(min_two_collage(Clutter(2, {})), std::invalid_argument);
}

TEST_CASE("composite bounds") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(free_vertex_matching_bound(m_k2(m)) == m);
  }
  CHECK(free_vertex_matching_bound(make(3, {{1, 2}, {2, 3}})) == 1);
  CHECK(domination_bound(m_k2(2)) == 2);
  // isolated vertices enter through n - |V^red|
  CHECK(domination_bound(make(4, {{1, 2}})) == 1 + 4 - 2);
}

TEST_CASE("clique partition bound") {
  const Clutter k4 = make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(clique_partition_bound(k4) == 1);
  CHECK(clique_partition_bound(m_k2(2)) == 2);  // no single clique leaves an independent rest
  CHECK(clique_partition_bound(cycle(5)) == 2);
}

TEST_CASE("bound report on named instances") {
  // 2K2: every proved inequality passes, the sreg gap is 1
  const BoundReport r1 = bound_report(m_k2(2), {}, "2k2");
  CHECK_FALSE(r1.any_failure());
  CHECK(r1.sreg_quotient == 1);
  CHECK(r1.reg == 2);
  CHECK(r1.gap_reg_minus_sreg == 1);
  CHECK(r1.induced_matching == 2);

  // K2: sreg = cosize = 1
  const BoundReport r2 = bound_report(m_k2(1), {}, "k2");
  CHECK_FALSE(r2.any_failure());
  CHECK(r2.sreg_quotient == 1);
  CHECK(r2.cosize == 1);

  // all-trivial clutter: sreg = 0
  const BoundReport r3 = bound_report(make(4, {{1}, {3}}), {}, "trivial");
  CHECK_FALSE(r3.any_failure());
  CHECK(r3.sreg_quotient == 0);
  CHECK(r3.all_trivial);
}

TEST_CASE("proved inequalities hold on random instances") {
  Rng rng(54);
  int graphs = 0, clutters = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Clutter g = random_graph(rng, 6, 0.4);
    if (g.edge_count() == 0) continue;
    ++graphs;
    CHECK_FALSE(bound_report(g, {}, "g").any_failure());
  }
  for (int trial = 0; trial < 25; ++trial) {
    GenConfig config;
    config.mode = GenConfig::Mode::MixedProb;
    config.n = 6;
    config.size_probs = {0.06, 0.3, 0.18, 0.0, 0.0, 0.0};
    const Clutter c = random_clutter(config, rng);
    if (c.edge_count() == 0) continue;
    ++clutters;
    CHECK_FALSE(bound_report(c, {}, "c").any_failure());
  }
  CHECK(graphs >= 20);
  CHECK(clutters >= 15);
}
