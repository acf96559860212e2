#pragma once

#include <cstdint>
#include <vector>

#include "edgeideals/char_poset.hpp"
#include "edgeideals/ideal.hpp"

namespace edgeideals {

/// A subset range [lower, upper] of the characteristic poset.
struct Interval {
  VertexSet lower;
  VertexSet upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A list of pairwise disjoint intervals covering a characteristic poset;
/// the witness object for a Stanley depth value.
class IntervalPartition {
 public:
  IntervalPartition() = default;
  explicit IntervalPartition(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

  const std::vector<Interval>& intervals() const { return intervals_; }
  /// min |upper| over the intervals (n for the empty partition).
  int value(int n) const;
  /// Disjointness, exact coverage, and in-poset containment of every interval.
  bool valid_for(const CharPoset& poset) const;

 private:
  std::vector<Interval> intervals_;
};

struct SearchLimits {
  /// Backtracking node budget; exceeded searches end Indeterminate instead of
  /// returning a wrong value. The default is sized so that every poset on
  /// n <= 10 vertices completes exactly.
  std::uint64_t node_budget = 400'000'000ULL;
};

/// Reads the node budget from the environment (EDGEIDEALS_BUDGET) when set,
/// otherwise returns the built-in default.
SearchLimits default_limits();

enum class Outcome { Computed, Indeterminate };

struct DecisionResult {
  Outcome outcome = Outcome::Computed;
  bool feasible = false;
  IntervalPartition partition;  ///< set when feasible
  std::uint64_t nodes = 0;
};

/// Decides whether the poset admits an interval partition with every upper
/// end of size at least d (0 <= d <= n), returning a witness when it does.
/// Exhaustive backtracking over candidate intervals: upper ends of elements
/// below rank d are normalized to rank exactly d (shrinking an interval keeps
/// it inside an up- or down-closed poset), elements of rank >= d stay
/// singletons unless absorbed. The most constrained uncovered element is
/// covered first; ties and candidate order are deterministic, so witnesses
/// are reproducible.
DecisionResult sdepth_decision(const CharPoset& poset, int d,
                               const SearchLimits& limits = default_limits());

struct SdepthResult {
  Outcome outcome = Outcome::Computed;
  int value = -1;
  IntervalPartition witness;
  std::uint64_t nodes = 0;
};

/// Stanley depth of the ideal (Ideal mode) or its quotient ring (Quotient
/// mode): the largest d for which sdepth_decision succeeds, found by descent
/// from the trivial upper bound.
SdepthResult stanley_depth(const SquarefreeIdeal& ideal, PosetMode mode,
                           const SearchLimits& limits = default_limits());

/// Stanley regularity through Alexander duality: in Quotient mode
/// n - stanley_depth(dual, Ideal); in Ideal mode n - stanley_depth(dual, Quotient).
/// The witness is the partition of the dual computation.
SdepthResult stanley_regularity(const SquarefreeIdeal& ideal, PosetMode mode,
                                const SearchLimits& limits = default_limits());

/// Test oracle: the exact maximum over all interval partitions of the
/// minimum upper-end size, by unnormalized recursion over every partition
/// (upper ends of any rank, no search-order heuristics). Restricted to
/// n <= 5; rejects ideals without generators.
int brute_oracle_sdepth(const SquarefreeIdeal& ideal, PosetMode mode);

}  // namespace edgeideals
