#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "banzhaf/game.hpp"
#include "banzhaf/gf.hpp"

namespace banzhaf {

enum class Algorithm { naive, gf_table, gf_list, partition };

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// Tuning knobs for the list-based solvers. Every combination yields the
/// same counts; the flags only trade work for memory.
struct SolverOptions {
  /// Drop GF terms with power >= quota while building and dividing.
  bool truncate_at_quota = true;
  /// Keep zero coefficients in division output so each half's upper window
  /// table and prefix sums are computed once and shared across its players.
  bool share_windows = true;
  /// Players with equal weights have equal counts; compute once per weight.
  bool memoize_by_weight = true;
};

/// Instrumentation filled by the solvers when requested.
struct SolverStats {
  std::size_t peak_terms = 0;  // longest coefficient list (dense: table size)
};

/// First-half/second-half split by input order: |A| = ceil(n/2).
struct PartitionPlan {
  std::vector<std::size_t> set_a;  // 1-based player indices
  std::vector<std::size_t> set_b;

  static PartitionPlan for_player_count(std::size_t n);
};

/// Exhaustive reference: walks all 2^n coalitions, O(n 2^n). Refuses games
/// beyond the cap (TooManyPlayersForOracle).
CriticalCountVector eta_naive(const WeightedVotingGame& game,
                              unsigned oracle_cap = 30);

/// Dense pseudopolynomial DP over weight sums 0..q-1, O(nq) time and O(q)
/// memory. Refuses quotas whose tables would exceed the memory cap
/// (QuotaTooLargeForDenseTable); the cap defaults to 1 GiB and can be
/// overridden with the BANZHAF_DENSE_CAP_BYTES environment variable or the
/// explicit argument.
CriticalCountVector eta_all_gf_table(
    const WeightedVotingGame& game,
    std::optional<std::uint64_t> memory_cap_bytes = std::nullopt,
    SolverStats* stats = nullptr);

/// Sparse-list variant of the classic GF algorithm: one build over all
/// players, one division per player, then a window sum.
CriticalCountVector eta_all_gf_list(const WeightedVotingGame& game,
                                    const SolverOptions& opts = {},
                                    SolverStats* stats = nullptr);

/// Meet-in-the-middle solver: GFs over the two halves, one division inside
/// the owning half per player, then the sorted pair-sum window against the
/// other half. O(n 2^{n/2}) worst case, O(nq) for integer weights.
CriticalCountVector eta_all_partitioned(const WeightedVotingGame& game,
                                        const SolverOptions& opts = {},
                                        SolverStats* stats = nullptr);

std::uint64_t dense_table_cap_bytes();
bool dense_table_fits(Weight quota, std::uint64_t cap_bytes);

/// Heuristic used by the CLI's `auto`: the dense table when the quota is
/// small against 2^{n/2} and under the memory cap, else the partition.
Algorithm choose_algorithm(const WeightedVotingGame& game);

/// Runs the chosen algorithm and derives both index families.
PowerIndexReport solve(const WeightedVotingGame& game, Algorithm algorithm,
                       const SolverOptions& opts = {}, int decimal_digits = 10,
                       unsigned oracle_cap = 30,
                       SolverStats* stats = nullptr);

}  // namespace banzhaf
