#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace edgeideals {

/// Exact minimum set cover of `universe` (a bitmask, up to 64 elements) by
/// the given sets. Branch and bound, most-constrained element first;
/// deterministic. Returns the chosen set indices, or nullopt when the
/// universe is not coverable.
std::optional<std::vector<std::size_t>> min_set_cover(std::uint64_t universe,
                                                      const std::vector<std::uint64_t>& sets);

/// Weighted variant: minimizes the total weight (weights are nonnegative);
/// among equal-weight optima prefers fewer sets.
std::optional<std::vector<std::size_t>> min_weight_set_cover(
    std::uint64_t universe, const std::vector<std::uint64_t>& sets,
    const std::vector<int>& weights);

}  // namespace edgeideals
