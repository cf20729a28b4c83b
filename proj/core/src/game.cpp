#include "banzhaf/game.hpp"

#include <string>
#include <utility>

namespace banzhaf {

WeightedVotingGame::WeightedVotingGame(Weight quota,
                                       std::vector<Weight> weights)
    : quota_(quota), weights_(std::move(weights)), total_weight_(0) {
  if (weights_.empty()) {
    throw Error(ErrorCode::EmptyPlayerSet, "game needs at least one player");
  }
  unsigned __int128 total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw Error(ErrorCode::NegativeWeight,
                  "weight of player " + std::to_string(i + 1) +
                      " is negative: " + std::to_string(weights_[i]));
    }
    total += static_cast<unsigned __int128>(weights_[i]);
  }
  if (total > static_cast<unsigned __int128>(INT64_MAX)) {
    throw Error(ErrorCode::WeightOverflow,
                "total weight exceeds the machine-word bound");
  }
  total_weight_ = static_cast<Weight>(total);
  if (quota_ < 1 || quota_ > total_weight_) {
    throw Error(ErrorCode::QuotaOutOfRange,
                "quota " + std::to_string(quota_) + " outside [1, " +
                    std::to_string(total_weight_) + "]");
  }
}

WeightedVotingGame validate_game(Weight quota, std::vector<Weight> weights) {
  return WeightedVotingGame(quota, std::move(weights));
}

Weight coalition_weight(const WeightedVotingGame& game,
                        std::span<const std::size_t> members) {
  const std::size_t n = game.player_count();
  std::vector<char> seen(n, 0);
  Weight sum = 0;
  for (std::size_t p : members) {
    if (p < 1 || p > n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "player index " + std::to_string(p) + " outside [1, " +
                      std::to_string(n) + "]");
    }
    if (!seen[p - 1]) {
      seen[p - 1] = 1;
      sum += game.weight(p - 1);
    }
  }
  return sum;
}

bool is_critical(const WeightedVotingGame& game,
                 std::span<const std::size_t> members, std::size_t p) {
  bool present = false;
  for (std::size_t m : members) {
    if (m == p) {
      present = true;
      break;
    }
  }
  if (!present) {
    throw Error(ErrorCode::PlayerNotInCoalition,
                "player " + std::to_string(p) + " is not in the coalition");
  }
  const Weight w = coalition_weight(game, members);
  return w >= game.quota() && w - game.weight(p - 1) < game.quota();
}

PowerIndexReport normalize_indices(CriticalCountVector counts, std::size_t n,
                                   int decimal_digits) {
  if (counts.size() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "count vector length " + std::to_string(counts.size()) +
                    " != player count " + std::to_string(n));
  }
  PowerIndexReport report;
  report.decimal_digits = decimal_digits;

  Count denom_prob = Count(1) << (n - 1);  // 2^(n-1) coalitions contain p
  Count total = 0;
  for (const Count& c : counts) total += c;

  report.probabilistic.reserve(n);
  for (const Count& c : counts) {
    Ratio r(c, denom_prob);
    r.canonicalize();
    report.probabilistic.push_back(std::move(r));
  }
  if (total == 0) {
    report.all_zero_counts = true;
  } else {
    report.normalized.reserve(n);
    for (const Count& c : counts) {
      Ratio r(c, total);
      r.canonicalize();
      report.normalized.push_back(std::move(r));
    }
  }
  report.raw = std::move(counts);
  return report;
}

}  // namespace banzhaf
