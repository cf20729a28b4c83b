#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "banzhaf/errors.hpp"
#include "banzhaf/game.hpp"

namespace banzhaf {

/// The sorted pair-sum problem: sum a_i * b_j over all pairs with
/// low <= xs[i] + ys[j] <= high. Both value sequences must be ascending
/// (ties fine); low > high is tolerated and sums to zero.
struct IntervalSumInstance {
  std::vector<std::int64_t> xs;
  std::vector<Count> as;
  std::vector<std::int64_t> ys;
  std::vector<Count> bs;
  std::int64_t low = 0;
  std::int64_t high = 0;
};

/// Per-row windows into ys plus prefix sums of bs, all 1-based:
/// lower[i] = smallest j with xs[i]+ys[j] >= low   (N+1 when none),
/// upper[i] = largest  j with xs[i]+ys[j] <= high  (0 when none),
/// prefix[m] = b_1 + ... + b_m with prefix[0] = 0.
/// Both window tables are nonincreasing in i. The probe counters record
/// how many y comparisons each sweep made; each is bounded by N + 2M.
struct WindowTables {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
  std::vector<Count> prefix;
  std::uint64_t lower_probes = 0;
  std::uint64_t upper_probes = 0;
};

/// One monotone backward sweep. Sentinels y_0 = -inf and y_{N+1} = +inf are
/// boundary conditions, never stored values.
std::vector<std::size_t> sweep_lower(std::span<const std::int64_t> xs,
                                     std::span<const std::int64_t> ys,
                                     std::int64_t low,
                                     std::uint64_t* probes = nullptr);
std::vector<std::size_t> sweep_upper(std::span<const std::int64_t> xs,
                                     std::span<const std::int64_t> ys,
                                     std::int64_t high,
                                     std::uint64_t* probes = nullptr);

std::vector<Count> prefix_sums(std::span<const Count> bs);

/// Assembles all three tables. Assumes instance invariants hold.
WindowTables compute_windows(const IntervalSumInstance& inst);

/// sum_i a_i * (prefix[upper[i]] - prefix[lower[i]-1]); rows with an empty
/// window contribute nothing.
Count eval_window_sum(std::span<const Count> as, const WindowTables& tables);

/// Validates the instance (LengthMismatch, NotSorted), then solves it in
/// O(M+N) via compute_windows + eval_window_sum.
Count solve_interval_sum(const IntervalSumInstance& inst);

/// Entry point for callers that share precomputed tables across many
/// coefficient vectors over the same xs/ys.
Count solve_interval_sum(std::span<const Count> as, const WindowTables& tables);

}  // namespace banzhaf
