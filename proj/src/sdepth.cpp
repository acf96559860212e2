#include "edgeideals/sdepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace edgeideals {

int IntervalPartition::value(int n) const {
  int v = n;
  for (const Interval& iv : intervals_) v = std::min(v, iv.upper.size());
  return v;
}

bool IntervalPartition::valid_for(const CharPoset& poset) const {
  const std::uint32_t subsets = 1u << poset.n();
  std::vector<char> covered(subsets, 0);
  std::size_t total = 0;
  for (const Interval& iv : intervals_) {
    if (!iv.lower.subset_of(iv.upper)) return false;
    const std::uint32_t lo = iv.lower.bits();
    const std::uint32_t diff = iv.upper.bits() & ~lo;
    std::uint32_t sub = diff;
    while (true) {
      const std::uint32_t mask = lo | sub;
      if (!poset.member(mask)) return false;
      if (covered[mask]) return false;
      covered[mask] = 1;
      ++total;
      if (sub == 0) break;
      sub = (sub - 1) & diff;
    }
  }
  return total == poset.size();
}

SearchLimits default_limits() {
  SearchLimits limits;
  if (const char* env = std::getenv("EDGEIDEALS_BUDGET")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) limits.node_budget = parsed;
  }
  return limits;
}

namespace {

struct BudgetExceeded {};

// Backtracking exact-cover search for a partition with all upper ends of
// rank >= d. Elements of rank < d must be covered by intervals topped at
// rank exactly d; everything else defaults to singletons.
class DecisionSearch {
 public:
  DecisionSearch(const CharPoset& poset, int d, std::uint64_t budget)
      : poset_(poset), n_(poset.n()), d_(d), budget_(budget) {
    full_ = VertexSet::full(n_).bits();
    covered_.assign((std::size_t{1} << n_) / 64 + 1, 0);
    for (int r = 0; r < d_ && r <= n_; ++r) {
      const auto& level = poset_.rank_members(r);
      low_.insert(low_.end(), level.begin(), level.end());
    }
    uncovered_low_ = low_.size();
  }

  bool run() { return search(); }
  std::uint64_t nodes() const { return nodes_; }

  IntervalPartition partition() const {
    std::vector<Interval> intervals;
    intervals.reserve(chosen_.size());
    for (const auto& [lo, hi] : chosen_) intervals.push_back({VertexSet(lo), VertexSet(hi)});
    for (int r = 0; r <= n_; ++r) {
      for (std::uint32_t m : poset_.rank_members(r)) {
        if (!covered_at(m)) intervals.push_back({VertexSet(m), VertexSet(m)});
      }
    }
    return IntervalPartition(std::move(intervals));
  }

 private:
  bool covered_at(std::uint32_t mask) const {
    return (covered_[mask >> 6] >> (mask & 63u)) & 1u;
  }
  void set_covered(std::uint32_t mask) { covered_[mask >> 6] |= (std::uint64_t{1} << (mask & 63u)); }
  void clear_covered(std::uint32_t mask) {
    covered_[mask >> 6] &= ~(std::uint64_t{1} << (mask & 63u));
  }

  // Valid top above sigma: rank d, inside the poset together with its whole
  // range, and the whole range still uncovered. Closure makes the range
  // membership automatic: sigma is a member (Ideal mode, upward closed) or
  // the top is (Quotient mode, downward closed).
  bool top_valid(std::uint32_t sigma, std::uint32_t top) const {
    if (poset_.mode() == PosetMode::Quotient && !poset_.member(top)) return false;
    const std::uint32_t diff = top & ~sigma;
    std::uint32_t sub = diff;
    while (true) {
      if (covered_at(sigma | sub)) return false;
      if (sub == 0) break;
      sub = (sub - 1) & diff;
    }
    return true;
  }

  // All rank-d tops above sigma, in ascending lexicographic order of the
  // added index tuple (deterministic).
  void candidate_tops(std::uint32_t sigma, std::vector<std::uint32_t>& out) const {
    out.clear();
    std::vector<int> avail;
    for (std::uint32_t rest = full_ & ~sigma; rest != 0; rest &= rest - 1) {
      avail.push_back(std::countr_zero(rest));
    }
    const int need = d_ - std::popcount(sigma);
    std::vector<int> pick(static_cast<std::size_t>(need));
    enumerate_combos(sigma, avail, pick, 0, 0, out);
  }

  void enumerate_combos(std::uint32_t sigma, const std::vector<int>& avail, std::vector<int>& pick,
                        std::size_t depth, std::size_t start, std::vector<std::uint32_t>& out) const {
    if (depth == pick.size()) {
      std::uint32_t top = sigma;
      for (int b : pick) top |= (1u << b);
      if (top_valid(sigma, top)) out.push_back(top);
      return;
    }
    const std::size_t remaining = pick.size() - depth;
    for (std::size_t i = start; i + remaining <= avail.size(); ++i) {
      pick[depth] = avail[i];
      enumerate_combos(sigma, avail, pick, depth + 1, i + 1, out);
    }
  }

  void cover_interval(std::uint32_t sigma, std::uint32_t top, std::vector<std::uint32_t>& undo) {
    const std::uint32_t diff = top & ~sigma;
    std::uint32_t sub = diff;
    while (true) {
      const std::uint32_t mask = sigma | sub;
      set_covered(mask);
      undo.push_back(mask);
      if (std::popcount(mask) < d_) --uncovered_low_;
      if (sub == 0) break;
      sub = (sub - 1) & diff;
    }
  }

  void uncover(const std::vector<std::uint32_t>& undo) {
    for (std::uint32_t mask : undo) {
      clear_covered(mask);
      if (std::popcount(mask) < d_) ++uncovered_low_;
    }
  }

  // In any partition, an element with no uncovered member strictly below it
  // must be the bottom of its own interval, so branching over its rank-d tops
  // is exhaustive. Non-minimal elements may sit mid-interval and must not be
  // forced to be bottoms.
  bool minimal_uncovered(std::uint32_t sigma) const {
    std::uint32_t sub = sigma;
    while (sub != 0) {
      sub = (sub - 1) & sigma;
      if (poset_.member(sub) && !covered_at(sub)) return false;
      if (sub == 0) break;
    }
    return true;
  }

  bool search() {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    if (uncovered_low_ == 0) return true;

    // Most constrained minimal uncovered low element; ties resolved by rank
    // then canonical order (the order low_ was built in).
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    std::uint32_t best_sigma = 0;
    std::vector<std::uint32_t> tops;
    std::vector<std::uint32_t> best_tops;
    for (std::uint32_t sigma : low_) {
      if (covered_at(sigma) || !minimal_uncovered(sigma)) continue;
      candidate_tops(sigma, tops);
      if (tops.size() < best_count) {
        best_count = tops.size();
        best_sigma = sigma;
        best_tops = tops;
        if (best_count == 0) return false;
        if (best_count == 1) break;
      }
    }

    std::vector<std::uint32_t> undo;
    for (std::uint32_t top : best_tops) {
      undo.clear();
      cover_interval(best_sigma, top, undo);
      chosen_.emplace_back(best_sigma, top);
      if (search()) return true;
      chosen_.pop_back();
      uncover(undo);
    }
    return false;
  }

  const CharPoset& poset_;
  int n_;
  int d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint32_t full_ = 0;
  std::vector<std::uint64_t> covered_;
  std::vector<std::uint32_t> low_;
  std::size_t uncovered_low_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen_;
};

}  // namespace

DecisionResult sdepth_decision(const CharPoset& poset, int d, const SearchLimits& limits) {
  if (d < 0 || d > poset.n()) throw std::invalid_argument("sdepth_decision: d outside 0..n");
  DecisionResult result;
  DecisionSearch search(poset, d, limits.node_budget);
  try {
    result.feasible = search.run();
    result.nodes = search.nodes();
    if (result.feasible) result.partition = search.partition();
  } catch (const BudgetExceeded&) {
    result.outcome = Outcome::Indeterminate;
    result.feasible = false;
    result.nodes = search.nodes();
  }
  return result;
}

SdepthResult stanley_depth(const SquarefreeIdeal& ideal, PosetMode mode,
                           const SearchLimits& limits) {
  const CharPoset poset = CharPoset::of(ideal, mode);
  SdepthResult out;
  int upper = (mode == PosetMode::Ideal) ? poset.n() : poset.max_rank();
  if (mode == PosetMode::Quotient && !ideal.is_zero()) {
    // sdepth(S/I) <= dim(S/P) for every associated prime P; the associated
    // primes of a squarefree quotient are the variable primes of the dual's
    // generators.
    const SquarefreeIdeal dual = alexander_dual(ideal);
    int max_cover = 0;
    for (VertexSet g : dual.gens()) max_cover = std::max(max_cover, g.size());
    upper = std::min(upper, ideal.n() - max_cover);
  }
  for (int d = upper; d >= 0; --d) {
    DecisionResult dec = sdepth_decision(poset, d, limits);
    out.nodes += dec.nodes;
    if (dec.outcome == Outcome::Indeterminate) {
      out.outcome = Outcome::Indeterminate;
      return out;
    }
    if (dec.feasible) {
      out.value = d;
      out.witness = dec.partition;
      return out;
    }
  }
  // Unreachable: d = 0 always succeeds on a nonempty poset, and the poset is
  // nonempty for every admissible input.
  throw std::logic_error("stanley_depth: no partition found at d = 0");
}

SdepthResult stanley_regularity(const SquarefreeIdeal& ideal, PosetMode mode,
                                const SearchLimits& limits) {
  const SquarefreeIdeal dual = alexander_dual(ideal);
  SdepthResult inner = stanley_depth(
      dual, mode == PosetMode::Quotient ? PosetMode::Ideal : PosetMode::Quotient, limits);
  if (inner.outcome == Outcome::Computed) inner.value = ideal.n() - inner.value;
  return inner;
}

namespace {

// Oracle recursion: cover the least uncovered member with every superset top
// whose whole range is an uncovered subset of the poset, and take the exact
// max over branches of min(|top|, completion). Memoized on the covered set;
// the value depends on nothing else.
class BruteSearch {
 public:
  BruteSearch(const CharPoset& poset) : poset_(poset), n_(poset.n()) {
    for (int r = 0; r <= n_; ++r) {
      const auto& level = poset_.rank_members(r);
      members_.insert(members_.end(), level.begin(), level.end());
    }
  }

  int run() { return go(0); }

 private:
  int go(std::uint32_t covered) {
    std::uint32_t sigma = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t m : members_) {
      if (!(covered >> m & 1u)) {
        sigma = m;
        break;
      }
    }
    if (sigma == std::numeric_limits<std::uint32_t>::max()) {
      return std::numeric_limits<int>::max();
    }
    auto found = memo_.find(covered);
    if (found != memo_.end()) return found->second;

    int best = -1;
    const std::uint32_t avail = VertexSet::full(n_).bits() & ~sigma;
    std::uint32_t extra = 0;
    while (true) {
      const std::uint32_t top = sigma | extra;
      std::uint32_t range = 0;
      bool ok = true;
      std::uint32_t sub = extra;
      while (true) {
        const std::uint32_t mask = sigma | sub;
        if (!poset_.member(mask) || (covered >> mask & 1u)) {
          ok = false;
          break;
        }
        range |= (1u << mask);
        if (sub == 0) break;
        sub = (sub - 1) & extra;
      }
      if (ok) {
        const int val = std::min(std::popcount(top), go(covered | range));
        best = std::max(best, val);
      }
      if (extra == avail) break;
      extra = (extra - avail) & avail;  // next submask of avail, ascending
    }
    memo_.emplace(covered, best);
    return best;
  }

  const CharPoset& poset_;
  int n_;
  std::vector<std::uint32_t> members_;
  std::unordered_map<std::uint32_t, int> memo_;
};

}  // namespace

int brute_oracle_sdepth(const SquarefreeIdeal& ideal, PosetMode mode) {
  if (ideal.n() > 5) throw std::invalid_argument("brute_oracle_sdepth: n > 5");
  if (ideal.is_zero()) throw std::invalid_argument("brute_oracle_sdepth: no generators");
  const CharPoset poset = CharPoset::of(ideal, mode);
  BruteSearch search(poset);
  return search.run();
}

}  // namespace edgeideals
