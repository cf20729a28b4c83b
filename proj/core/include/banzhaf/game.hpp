#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "banzhaf/errors.hpp"

namespace banzhaf {

using Weight = std::int64_t;

/// Exact coalition count. eta_p can reach 2^(n-1), well past any machine word.
using Count = mpz_class;
using Ratio = mpq_class;

/// Raw Banzhaf counts, one entry per player (0-based internally).
using CriticalCountVector = std::vector<Count>;

/// A weighted voting game [q; w_1, ..., w_n]: a coalition wins iff its
/// weight sum reaches the quota. Immutable once constructed; the
/// constructor enforces n >= 1, all weights >= 0 and 1 <= q <= w(P).
class WeightedVotingGame {
public:
  WeightedVotingGame(Weight quota, std::vector<Weight> weights);

  Weight quota() const noexcept { return quota_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  Weight weight(std::size_t player) const { return weights_[player]; }
  std::size_t player_count() const noexcept { return weights_.size(); }
  Weight total_weight() const noexcept { return total_weight_; }

  /// Informational only: q > w(P)/2 means no two disjoint coalitions can
  /// both win. None of the algorithms require this.
  bool is_proper() const noexcept { return 2 * quota_ > total_weight_; }

private:
  Weight quota_;
  std::vector<Weight> weights_;
  Weight total_weight_;
};

/// Validates raw inputs into a game. Throws Error with EmptyPlayerSet,
/// QuotaOutOfRange, NegativeWeight or WeightOverflow.
WeightedVotingGame validate_game(Weight quota, std::vector<Weight> weights);

/// w(C) = sum of member weights. Members are 1-based player indices;
/// duplicates are ignored (set semantics). Throws IndexOutOfRange.
Weight coalition_weight(const WeightedVotingGame& game,
                        std::span<const std::size_t> members);

/// True iff the coalition wins and stops winning when p leaves.
/// p must be a member (1-based); throws PlayerNotInCoalition.
bool is_critical(const WeightedVotingGame& game,
                 std::span<const std::size_t> members, std::size_t p);

/// Exact Banzhaf indices derived from raw counts. Rationals are kept in
/// lowest terms; decimal_digits only controls rendering, never the values.
struct PowerIndexReport {
  CriticalCountVector raw;
  std::vector<Ratio> probabilistic;  // eta_p / 2^(n-1)
  std::vector<Ratio> normalized;     // eta_p / sum eta; empty when all zero
  int decimal_digits = 10;
  bool all_zero_counts = false;
};

/// Derives both index families from raw counts. A zero count sum is not an
/// error: the report keeps the probabilistic indices and sets the flag.
PowerIndexReport normalize_indices(CriticalCountVector counts, std::size_t n,
                                   int decimal_digits = 10);

}  // namespace banzhaf
