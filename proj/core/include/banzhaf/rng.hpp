#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "banzhaf/game.hpp"

namespace banzhaf {

/// Reproducible generator: the standard-specified mt19937_64 stream with a
/// plain modulo reduction, so seeded runs are identical on every platform.
/// The slight modulo bias is irrelevant for test-case generation.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish draw from [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(span == 0 ? next() : next() % span);
  }

private:
  std::mt19937_64 engine_;
};

/// Random game with n players, weights uniform in [min_weight, max_weight]
/// and quota uniform in [1, w(P)]. Weight vectors summing to zero are
/// redrawn, since no quota can make them a game.
inline WeightedVotingGame random_game(Rng& rng, std::size_t n,
                                      Weight min_weight, Weight max_weight) {
  std::vector<Weight> weights(n);
  Weight total = 0;
  do {
    total = 0;
    for (Weight& w : weights) {
      w = rng.uniform(min_weight, max_weight);
      total += w;
    }
  } while (total == 0);
  const Weight quota = rng.uniform(1, total);
  return WeightedVotingGame(quota, std::move(weights));
}

/// Majority-quota game: q = floor(w(P)/2) + 1.
inline WeightedVotingGame random_majority_game(Rng& rng, std::size_t n,
                                               Weight min_weight,
                                               Weight max_weight) {
  std::vector<Weight> weights(n);
  Weight total = 0;
  do {
    total = 0;
    for (Weight& w : weights) {
      w = rng.uniform(min_weight, max_weight);
      total += w;
    }
  } while (total == 0);
  const Weight quota = total / 2 + 1;
  return WeightedVotingGame(quota, std::move(weights));
}

}  // namespace banzhaf
