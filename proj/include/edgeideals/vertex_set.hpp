#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeideals {

/// Hard cap on the ambient vertex count: every vertex subset fits one
/// machine word and the 2^n subset lattice stays addressable.
inline constexpr int kMaxVertices = 16;

/// Subset of the vertex range {1..n}, stored as a bitmask (vertex i <-> bit i-1).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  /// Builds a set from 1-based indices; throws on indices outside 1..kMaxVertices.
  static VertexSet from_indices(const std::vector<int>& indices) {
    std::uint32_t bits = 0;
    for (int v : indices) {
      if (v < 1 || v > kMaxVertices) {
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " outside 1.." + std::to_string(kMaxVertices));
      }
      bits |= (1u << (v - 1));
    }
    return VertexSet(bits);
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n == 0 ? 0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1u << (v - 1))); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1u << (v - 1))); }

  /// Smallest member index (1-based); set must be nonempty.
  constexpr int min_index() const { return std::countr_zero(bits_) + 1; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : indices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical order on vertex sets: cardinality first, then lexicographic on
/// the ascending index sequences ({1,4} before {2,3}). Equality-stable: makes
/// edge lists, generator lists and serialized files bit-stable.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint32_t lowest = diff & (0u - diff);
  return (a.bits() & lowest) != 0;
}

}  // namespace edgeideals
