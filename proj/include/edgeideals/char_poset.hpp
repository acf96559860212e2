#pragma once

#include <cstdint>
#include <vector>

#include "edgeideals/ideal.hpp"

namespace edgeideals {

enum class PosetMode {
  Ideal,     ///< members are the squarefree multidegrees inside the ideal
  Quotient,  ///< members are the squarefree multidegrees outside the ideal
};

/// The characteristic poset of a squarefree ideal: the set of squarefree
/// multidegrees lying inside (Ideal mode, upward closed) or outside
/// (Quotient mode, downward closed) the ideal, stratified by rank.
class CharPoset {
 public:
  /// Ideal mode requires a nonzero ideal; Quotient mode a proper one
  /// (every SquarefreeIdeal is proper, so only the zero check applies).
  static CharPoset of(const SquarefreeIdeal& ideal, PosetMode mode);

  int n() const { return n_; }
  PosetMode mode() const { return mode_; }
  bool member(std::uint32_t mask) const {
    return (bits_[mask >> 6] >> (mask & 63u)) & 1u;
  }
  std::size_t size() const { return count_; }
  /// Members of the given rank in canonical (lexicographic) order.
  const std::vector<std::uint32_t>& rank_members(int rank) const {
    return by_rank_[static_cast<std::size_t>(rank)];
  }
  int max_rank() const;

  /// Closure property of the mode (up-closed for Ideal, down-closed for
  /// Quotient); construction guarantees it, tests assert it.
  bool closure_holds() const;

 private:
  int n_ = 0;
  PosetMode mode_ = PosetMode::Ideal;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::uint32_t>> by_rank_;
};

}  // namespace edgeideals
