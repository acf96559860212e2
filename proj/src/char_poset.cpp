#include "edgeideals/char_poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace edgeideals {

CharPoset CharPoset::of(const SquarefreeIdeal& ideal, PosetMode mode) {
  if (mode == PosetMode::Ideal && ideal.is_zero()) {
    throw std::invalid_argument("char_poset: zero ideal has no ideal-mode poset");
  }
  CharPoset p;
  p.n_ = ideal.n();
  p.mode_ = mode;
  const std::uint32_t subsets = 1u << ideal.n();
  p.bits_.assign((subsets + 63u) / 64u, 0);
  p.by_rank_.assign(static_cast<std::size_t>(ideal.n()) + 1, {});
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const bool inside = ideal.contains(VertexSet(mask));
    if (inside == (mode == PosetMode::Ideal)) {
      p.bits_[mask >> 6] |= (std::uint64_t{1} << (mask & 63u));
      p.by_rank_[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
      ++p.count_;
    }
  }
  // Canonical order within a rank: lexicographic on ascending index lists.
  for (auto& level : p.by_rank_) {
    std::sort(level.begin(), level.end(), [](std::uint32_t a, std::uint32_t b) {
      return canonical_less(VertexSet(a), VertexSet(b));
    });
  }
  return p;
}

int CharPoset::max_rank() const {
  for (int r = static_cast<int>(by_rank_.size()) - 1; r >= 0; --r) {
    if (!by_rank_[static_cast<std::size_t>(r)].empty()) return r;
  }
  return -1;
}

bool CharPoset::closure_holds() const {
  const std::uint32_t subsets = 1u << n_;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (!member(mask)) continue;
    for (int v = 0; v < n_; ++v) {
      const std::uint32_t bit = 1u << v;
      if (mode_ == PosetMode::Ideal) {
        if (!(mask & bit) && !member(mask | bit)) return false;
      } else {
        if ((mask & bit) && !member(mask & ~bit)) return false;
      }
    }
  }
  return true;
}

}  // namespace edgeideals
