#include "edgeideals/set_cover.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace edgeideals {

namespace {

struct CoverSearch {
  const std::vector<std::uint64_t>& sets;
  const std::vector<int>& weights;
  int best_weight = std::numeric_limits<int>::max();
  std::size_t best_count = 0;
  std::vector<std::size_t> best;
  std::vector<std::size_t> chosen;

  CoverSearch(const std::vector<std::uint64_t>& s, const std::vector<int>& w)
      : sets(s), weights(w) {}

  // Admissible lower bound on the residual weight.
  int residual_bound(std::uint64_t uncovered) const {
    if (uncovered == 0) return 0;
    int max_cover = 0;
    int min_w = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::uint64_t hit = sets[i] & uncovered;
      if (hit == 0) continue;
      max_cover = std::max(max_cover, std::popcount(hit));
      min_w = std::min(min_w, weights[i]);
    }
    if (max_cover == 0) return std::numeric_limits<int>::max();
    const int needed = (std::popcount(uncovered) + max_cover - 1) / max_cover;
    return needed * min_w;
  }

  void run(std::uint64_t uncovered, int weight) {
    if (uncovered == 0) {
      if (weight < best_weight || (weight == best_weight && chosen.size() < best_count)) {
        best_weight = weight;
        best_count = chosen.size();
        best = chosen;
      }
      return;
    }
    const int bound = residual_bound(uncovered);
    if (bound == std::numeric_limits<int>::max()) return;  // uncoverable element
    if (weight + bound > best_weight) return;
    if (weight + bound == best_weight && chosen.size() + 1 >= best_count) return;

    // Branch on the uncovered element with the fewest covering sets.
    std::uint64_t pick = 0;
    std::size_t pick_options = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t rest = uncovered; rest != 0; rest &= rest - 1) {
      const std::uint64_t elem = rest & (0ull - rest);
      std::size_t options = 0;
      for (std::uint64_t s : sets) {
        if (s & elem) ++options;
      }
      if (options < pick_options) {
        pick_options = options;
        pick = elem;
        if (options <= 1) break;
      }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((sets[i] & pick) == 0) continue;
      chosen.push_back(i);
      run(uncovered & ~sets[i], weight + weights[i]);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> min_weight_set_cover(
    std::uint64_t universe, const std::vector<std::uint64_t>& sets,
    const std::vector<int>& weights) {
  CoverSearch search(sets, weights);
  search.run(universe, 0);
  if (search.best_weight == std::numeric_limits<int>::max()) return std::nullopt;
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

std::optional<std::vector<std::size_t>> min_set_cover(std::uint64_t universe,
                                                      const std::vector<std::uint64_t>& sets) {
  const std::vector<int> ones(sets.size(), 1);
  return min_weight_set_cover(universe, sets, ones);
}

}  // namespace edgeideals
