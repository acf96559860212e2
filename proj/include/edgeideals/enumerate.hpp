#pragma once

#include <functional>

#include "edgeideals/clutter.hpp"

namespace edgeideals {

/// Visits every clutter on exactly n vertices (every antichain of nonempty
/// subsets of {1..n}), including the edgeless one when include_edgeless is
/// set. Edges arrive in canonical order; the visit order is deterministic.
void for_each_clutter(int n, bool include_edgeless,
                      const std::function<void(const Clutter&)>& visit);

/// Number of clutters on n vertices (antichains of nonempty subsets).
std::uint64_t count_clutters(int n, bool include_edgeless);

}  // namespace edgeideals
