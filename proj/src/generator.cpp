#include "edgeideals/generator.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace edgeideals {

std::uint64_t Rng::next() {
  // splitmix64: tiny, fully specified, stable across platforms
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  // Lemire reduction; the slight bias is irrelevant here and the result is
  // deterministic across platforms.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

namespace {

std::vector<VertexSet> subsets_of_size(int n, int d) {
  std::vector<VertexSet> out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (std::popcount(m) == d) out.push_back(VertexSet(m));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

Clutter random_clutter(const GenConfig& config, Rng& rng) {
  if (config.n < 0 || config.n > kMaxVertices) {
    throw std::invalid_argument("random_clutter: n out of range");
  }
  switch (config.mode) {
    case GenConfig::Mode::UniformProb: {
      if (config.d < 1 || config.d > config.n) {
        throw std::invalid_argument("random_clutter: d out of range");
      }
      std::vector<VertexSet> picked;
      for (VertexSet s : subsets_of_size(config.n, config.d)) {
        if (rng.chance(config.p)) picked.push_back(s);
      }
      return Clutter(config.n, std::move(picked));
    }
    case GenConfig::Mode::UniformCount: {
      if (config.d < 1 || config.d > config.n) {
        throw std::invalid_argument("random_clutter: d out of range");
      }
      std::vector<VertexSet> pool = subsets_of_size(config.n, config.d);
      if (config.edge_target < 0 || static_cast<std::size_t>(config.edge_target) > pool.size()) {
        throw std::invalid_argument("random_clutter: edge target out of range");
      }
      // partial Fisher-Yates
      for (int i = 0; i < config.edge_target; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      }
      pool.resize(static_cast<std::size_t>(config.edge_target));
      return Clutter(config.n, std::move(pool));
    }
    case GenConfig::Mode::MixedProb: {
      std::vector<VertexSet> picked;
      for (int k = 1; k <= config.n; ++k) {
        const double p = (static_cast<std::size_t>(k) <= config.size_probs.size())
                             ? config.size_probs[static_cast<std::size_t>(k - 1)]
                             : 0.0;
        if (p <= 0.0) continue;
        for (VertexSet s : subsets_of_size(config.n, k)) {
          if (rng.chance(p)) picked.push_back(s);
        }
      }
      return Clutter::minimal(config.n, picked);
    }
  }
  throw std::logic_error("random_clutter: bad mode");
}

}  // namespace edgeideals
