#pragma once

#include <cstdint>
#include <vector>

#include "edgeideals/clutter.hpp"

namespace edgeideals {

/// Deterministic random stream: identical seeds give identical draws on every
/// platform (splitmix64 plus fixed-point thresholding, no library
/// distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// True with probability p.
  bool chance(double p);
  /// Uniform draw from [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  enum class Mode {
    UniformProb,   ///< each d-subset kept independently with probability p
    UniformCount,  ///< exactly `edge_target` distinct d-subsets
    MixedProb,     ///< per-cardinality probabilities, then minimalized
  };
  Mode mode = Mode::UniformProb;
  int n = 4;
  int d = 2;
  double p = 0.5;
  int edge_target = 3;
  std::vector<double> size_probs;  ///< MixedProb: size_probs[k] for (k+1)-subsets
};

/// Seeded clutter generator; deterministic per (config, rng state).
Clutter random_clutter(const GenConfig& config, Rng& rng);

}  // namespace edgeideals
