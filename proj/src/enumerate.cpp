#include "edgeideals/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgeideals {

namespace {

struct Enumerator {
  int n;
  std::vector<VertexSet> pool;  // nonempty subsets in canonical order
  std::vector<VertexSet> chosen;
  const std::function<void(const Clutter&)>* visit = nullptr;
  std::uint64_t count = 0;

  void emit() {
    ++count;
    if (visit != nullptr) (*visit)(Clutter(n, chosen));
  }

  // Pool is sorted by cardinality, so a later candidate can only violate the
  // antichain by containing an earlier choice.
  void rec(std::size_t start) {
    for (std::size_t i = start; i < pool.size(); ++i) {
      bool ok = true;
      for (VertexSet e : chosen) {
        if (e.subset_of(pool[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(pool[i]);
      emit();
      rec(i + 1);
      chosen.pop_back();
    }
  }
};

Enumerator make(int n, const std::function<void(const Clutter&)>* visit) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("for_each_clutter: n out of range");
  Enumerator e;
  e.n = n;
  e.visit = visit;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t m = 1; m < subsets; ++m) e.pool.push_back(VertexSet(m));
  std::sort(e.pool.begin(), e.pool.end(), canonical_less);
  return e;
}

}  // namespace

void for_each_clutter(int n, bool include_edgeless,
                      const std::function<void(const Clutter&)>& visit) {
  Enumerator e = make(n, &visit);
  if (include_edgeless) visit(Clutter(n, {}));
  e.rec(0);
}

std::uint64_t count_clutters(int n, bool include_edgeless) {
  Enumerator e = make(n, nullptr);
  e.rec(0);
  return e.count + (include_edgeless ? 1 : 0);
}

}  // namespace edgeideals
