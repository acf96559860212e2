#include "edgeideals/clutter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edgeideals {

namespace {

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void check_range(int n, const std::vector<VertexSet>& edges) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
  const VertexSet all = VertexSet::full(n);
  for (VertexSet e : edges) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    if (!e.subset_of(all)) {
      throw std::invalid_argument("edge " + e.to_string() + " not inside {1.." +
                                  std::to_string(n) + "}");
    }
  }
}

}  // namespace

Clutter::Clutter(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  check_range(n_, edges_);
  sort_canonical(edges_);
  // Antichain: after card-ascending sort a violation is an earlier edge inside a later one.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[i].subset_of(edges_[j])) {
        throw std::invalid_argument("edge " + edges_[i].to_string() + " contained in " +
                                    edges_[j].to_string());
      }
    }
  }
}

Clutter::Clutter(int n, std::vector<VertexSet> edges, Unchecked) : n_(n), edges_(std::move(edges)) {}

Clutter Clutter::minimal(int n, const std::vector<VertexSet>& sets) {
  check_range(n, sets);
  std::vector<VertexSet> work(sets);
  sort_canonical(work);
  std::vector<VertexSet> keep;
  keep.reserve(work.size());
  for (VertexSet s : work) {
    bool dominated = false;
    for (VertexSet k : keep) {
      if (k.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(s);
  }
  return Clutter(n, std::move(keep), Unchecked{});
}

VertexSet Clutter::vertex_support() const {
  VertexSet s;
  for (VertexSet e : edges_) s = s | e;
  return s;
}

bool Clutter::is_graph() const {
  if (edges_.empty()) return true;
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 2; });
}

bool Clutter::all_edges_trivial() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 1; });
}

bool Clutter::has_nontrivial_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() >= 2; });
}

ReduceResult reduce(const Clutter& c) {
  const VertexSet support = c.vertex_support();
  const VertexSet isolated = VertexSet::full(c.n()) - support;
  std::vector<int> label = support.indices();
  std::vector<int> new_of(static_cast<std::size_t>(kMaxVertices) + 1, 0);
  for (std::size_t i = 0; i < label.size(); ++i) new_of[static_cast<std::size_t>(label[i])] = static_cast<int>(i) + 1;

  std::vector<VertexSet> edges;
  edges.reserve(c.edge_count());
  for (VertexSet e : c.edges()) {
    VertexSet mapped;
    for (int v : e.indices()) mapped = mapped.with(new_of[static_cast<std::size_t>(v)]);
    edges.push_back(mapped);
  }
  return ReduceResult{Clutter(static_cast<int>(label.size()), std::move(edges)), isolated,
                      std::move(label)};
}

Clutter add_set(const Clutter& c, VertexSet a) {
  if (a.empty()) throw std::invalid_argument("add_set: empty set");
  if (!a.subset_of(VertexSet::full(c.n()))) throw std::invalid_argument("add_set: set out of range");
  std::vector<VertexSet> sets = c.edges();
  sets.push_back(a);
  return Clutter::minimal(c.n(), sets);
}

ContractResult contract(const Clutter& c, VertexSet a) {
  if (a.empty()) throw std::invalid_argument("contract: empty set");
  const VertexSet rest = VertexSet::full(c.n()) - a;
  std::vector<int> label = rest.indices();
  std::vector<int> new_of(static_cast<std::size_t>(kMaxVertices) + 1, 0);
  for (std::size_t i = 0; i < label.size(); ++i) new_of[static_cast<std::size_t>(label[i])] = static_cast<int>(i) + 1;

  bool improper = false;
  std::vector<VertexSet> sets;
  sets.reserve(c.edge_count());
  for (VertexSet e : c.edges()) {
    const VertexSet cut = e - a;
    if (cut.empty()) {
      // The empty set is then the unique minimal member: the contracted ideal
      // is the unit ideal and keeps no proper edges.
      improper = true;
      sets.clear();
      break;
    }
    VertexSet mapped;
    for (int v : cut.indices()) mapped = mapped.with(new_of[static_cast<std::size_t>(v)]);
    sets.push_back(mapped);
  }
  return ContractResult{Clutter::minimal(static_cast<int>(label.size()), sets), improper,
                        std::move(label)};
}

VertexSet neighbors(const Clutter& c, int v) {
  if (v < 1 || v > c.n()) throw std::invalid_argument("neighbors: vertex out of range");
  VertexSet out;
  for (VertexSet e : c.edges()) {
    if (e.contains(v)) out = out | e;
  }
  return out.without(v);
}

std::vector<std::size_t> free_vertex_edges(const Clutter& c) {
  // degree per vertex
  std::vector<int> degree(static_cast<std::size_t>(c.n()) + 1, 0);
  for (VertexSet e : c.edges()) {
    for (int v : e.indices()) ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    for (int v : c.edges()[i].indices()) {
      if (degree[static_cast<std::size_t>(v)] == 1) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Clutter relabel(const Clutter& c, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(c.n())) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<VertexSet> edges;
  edges.reserve(c.edge_count());
  for (VertexSet e : c.edges()) {
    VertexSet mapped;
    for (int v : e.indices()) mapped = mapped.with(perm[static_cast<std::size_t>(v - 1)]);
    if (mapped.size() != e.size()) throw std::invalid_argument("relabel: not a permutation");
    edges.push_back(mapped);
  }
  return Clutter(c.n(), std::move(edges));
}

}  // namespace edgeideals
