#include "edgeideals/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "edgeideals/set_cover.hpp"

namespace edgeideals {

namespace {

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> keep;
  keep.reserve(sets.size());
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet k : keep) {
      if (k.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(s);
  }
  return keep;
}

}  // namespace

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<VertexSet> gens) : n_(n), gens_(std::move(gens)) {
  // Same shape constraints as a clutter; delegate the checks.
  Clutter check(n_, gens_);
  gens_ = check.edges();
}

SquarefreeIdeal SquarefreeIdeal::minimal(int n, const std::vector<VertexSet>& sets) {
  Clutter c = Clutter::minimal(n, sets);
  return SquarefreeIdeal(n, c.edges());
}

bool SquarefreeIdeal::contains(VertexSet sigma) const {
  for (VertexSet g : gens_) {
    if (g.subset_of(sigma)) return true;
  }
  return false;
}

SquarefreeIdeal edge_ideal(const Clutter& c) { return SquarefreeIdeal(c.n(), c.edges()); }

Clutter clutter_of(const SquarefreeIdeal& ideal) { return Clutter(ideal.n(), ideal.gens()); }

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("alexander_dual: zero ideal");
  // Intersection of the variable primes of the generators, built by
  // incremental lcm closure with minimalization after each step.
  std::vector<VertexSet> current;
  for (int v : ideal.gens().front().indices()) current.push_back(VertexSet().with(v));
  for (std::size_t i = 1; i < ideal.gens().size(); ++i) {
    std::vector<VertexSet> next;
    next.reserve(current.size() * static_cast<std::size_t>(ideal.gens()[i].size()));
    for (VertexSet c : current) {
      for (int v : ideal.gens()[i].indices()) next.push_back(c.with(v));
    }
    current = minimal_sets(std::move(next));
  }
  return SquarefreeIdeal(ideal.n(), std::move(current));
}

SquarefreeIdeal ideal_sum(const std::vector<SquarefreeIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("ideal_sum: no operands");
  const int n = ideals.front().n();
  std::vector<VertexSet> all;
  for (const auto& ideal : ideals) {
    if (ideal.n() != n) throw std::invalid_argument("ideal_sum: ambient mismatch");
    all.insert(all.end(), ideal.gens().begin(), ideal.gens().end());
  }
  return SquarefreeIdeal(n, minimal_sets(std::move(all)));
}

SquarefreeIdeal ideal_intersection(const std::vector<SquarefreeIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("ideal_intersection: no operands");
  const int n = ideals.front().n();
  for (const auto& ideal : ideals) {
    if (ideal.n() != n) throw std::invalid_argument("ideal_intersection: ambient mismatch");
  }
  std::vector<VertexSet> current = ideals.front().gens();
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    if (current.empty() || ideals[i].is_zero()) {
      current.clear();
      break;
    }
    std::vector<VertexSet> next;
    next.reserve(current.size() * ideals[i].gens().size());
    for (VertexSet a : current) {
      for (VertexSet b : ideals[i].gens()) next.push_back(a | b);
    }
    current = minimal_sets(std::move(next));
  }
  return SquarefreeIdeal(n, std::move(current));
}

int ideal_size(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("ideal_size: zero ideal");
  // Primary components of a squarefree ideal are the variable primes of the
  // dual's generators. Products/sums of primes are prime, so radicals drop out.
  const SquarefreeIdeal dual = alexander_dual(ideal);
  std::uint32_t total = 0;
  std::vector<std::uint64_t> supports;
  supports.reserve(dual.gens().size());
  for (VertexSet g : dual.gens()) {
    supports.push_back(g.bits());
    total |= g.bits();
  }
  const auto cover = min_set_cover(total, supports);
  const int v = static_cast<int>(cover->size());
  const int h = std::popcount(total);
  return v + ideal.n() - h - 1;
}

int ideal_cosize(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("ideal_cosize: zero ideal");
  std::uint32_t total = 0;
  std::vector<std::uint64_t> supports;
  supports.reserve(ideal.gens().size());
  for (VertexSet g : ideal.gens()) {
    supports.push_back(g.bits());
    total |= g.bits();
  }
  const auto cover = min_set_cover(total, supports);
  const int w = static_cast<int>(cover->size());
  return std::popcount(total) - w;
}

namespace {

// Membership conditions of Construction "I = direct sum of I_tau" for a
// candidate label tau: u must lie in every primed component outside tau,
// avoid the primed components inside tau, and v must lie in every
// double-primed component of tau.
bool label_admissible(VertexSet u, VertexSet v, VertexSet splitter_vars,
                      const std::vector<VertexSet>& components, std::uint32_t tau) {
  for (std::size_t j = 0; j < components.size(); ++j) {
    const VertexSet primed = components[j] & splitter_vars;
    const VertexSet double_primed = components[j] - splitter_vars;
    if (tau >> j & 1u) {
      if (u.intersects(primed)) return false;
      if (!v.intersects(double_primed)) return false;
    } else {
      if (!u.intersects(primed)) return false;
    }
  }
  return true;
}

}  // namespace

SplitClassification split_decompose(const SquarefreeIdeal& ideal, int splitter,
                                    int exhaustive_limit) {
  if (ideal.is_zero()) throw std::invalid_argument("split_decompose: zero ideal");
  const SquarefreeIdeal dual = alexander_dual(ideal);
  const auto& components = dual.gens();  // canonical order keeps splitter indices stable
  const int s = static_cast<int>(components.size());
  if (splitter < 1 || splitter > s) {
    throw std::invalid_argument("split_decompose: splitter index outside 1.." + std::to_string(s));
  }
  if (s > 32) throw std::invalid_argument("split_decompose: more than 32 primary components");
  const VertexSet splitter_vars = components[static_cast<std::size_t>(splitter - 1)];
  const std::uint32_t full_label = (s == 32) ? ~0u : ((1u << s) - 1u);

  SplitClassification out;
  out.splitter = splitter;
  out.component_count = s;
  out.components = components;

  const std::uint32_t subsets = 1u << ideal.n();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const VertexSet w(mask);
    if (!ideal.contains(w)) continue;
    const VertexSet u = w & splitter_vars;
    const VertexSet v = w - splitter_vars;

    std::uint32_t tau = 0;
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (!u.intersects(components[j] & splitter_vars)) tau |= (1u << j);
    }
    if (!label_admissible(u, v, splitter_vars, components, tau)) {
      throw std::runtime_error("split_decompose: no admissible label for " + w.to_string());
    }
    if (tau == full_label) {
      throw std::runtime_error("split_decompose: full label assigned to " + w.to_string());
    }
    if (s <= exhaustive_limit) {
      for (std::uint32_t other = 0; other <= full_label; ++other) {
        if (other == tau) continue;
        if (label_admissible(u, v, splitter_vars, components, other)) {
          throw std::runtime_error("split_decompose: multiple labels for " + w.to_string());
        }
      }
    }
    out.entries.push_back(SplitClassification::Entry{w, tau});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.monomial, b.monomial); });
  return out;
}

}  // namespace edgeideals
