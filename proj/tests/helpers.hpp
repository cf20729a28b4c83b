#pragma once

// Brute-force oracles for the test suites. These stay deliberately
// independent of the implementation paths they check: subsets are walked
// directly and definitions applied literally.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "banzhaf/game.hpp"
#include "banzhaf/gf.hpp"
#include "banzhaf/interval_sum.hpp"

namespace banzhaf::testing {

// Subset-sum counting by exhaustive enumeration. Weights must be few.
inline SparseGF gf_oracle(std::span<const Weight> weights,
                          std::optional<Power> cap = std::nullopt) {
  std::map<Power, Count> acc;
  const std::uint64_t subsets = std::uint64_t(1) << weights.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Power sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (mask >> i & 1) sum += weights[i];
    }
    if (!cap || sum < *cap) acc[sum] += 1;
  }
  SparseGF gf;
  for (auto& [power, count] : acc) gf.terms.push_back({power, count});
  return gf;
}

// The double loop over all index pairs.
inline Count interval_sum_oracle(const IntervalSumInstance& inst) {
  Count total = 0;
  for (std::size_t i = 0; i < inst.xs.size(); ++i) {
    for (std::size_t j = 0; j < inst.ys.size(); ++j) {
      const std::int64_t s = inst.xs[i] + inst.ys[j];
      if (inst.low <= s && s <= inst.high) total += inst.as[i] * inst.bs[j];
    }
  }
  return total;
}

// Critical counts straight from the definition, built on the core
// predicates rather than any solver.
inline CriticalCountVector eta_definition_oracle(const WeightedVotingGame& game) {
  const std::size_t n = game.player_count();
  CriticalCountVector counts(n, 0);
  std::vector<std::size_t> members;
  const std::uint64_t subsets = std::uint64_t(1) << n;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    members.clear();
    for (std::size_t p = 1; p <= n; ++p) {
      if (mask >> (p - 1) & 1) members.push_back(p);
    }
    for (std::size_t p : members) {
      if (is_critical(game, members, p)) counts[p - 1] += 1;
    }
  }
  return counts;
}

}  // namespace banzhaf::testing
