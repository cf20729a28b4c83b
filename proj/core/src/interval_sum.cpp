#include "banzhaf/interval_sum.hpp"

#include <string>

namespace banzhaf {

namespace {

// Signed 128-bit sum so that extreme int64 values cannot wrap.
inline __int128 pair_sum(std::int64_t x, std::int64_t y) {
  return static_cast<__int128>(x) + static_cast<__int128>(y);
}

void require_sorted(std::span<const std::int64_t> v, const char* name) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] > v[i]) {
      throw Error(ErrorCode::NotSorted,
                  std::string(name) + " not ascending at index " +
                      std::to_string(i));
    }
  }
}

}  // namespace

std::vector<std::size_t> sweep_lower(std::span<const std::int64_t> xs,
                                     std::span<const std::int64_t> ys,
                                     std::int64_t low, std::uint64_t* probes) {
  const std::size_t m = xs.size(), n = ys.size();
  std::vector<std::size_t> lower(m);
  std::uint64_t count = 0;
  // j tracks the largest 1-based index with xs[i] + ys[j] < low (0 if none);
  // it only moves down as i grows, so the work is shared across rows.
  std::size_t j = n;
  for (std::size_t i = 0; i < m; ++i) {
    while (j >= 1) {
      ++count;
      if (pair_sum(xs[i], ys[j - 1]) >= low) {
        --j;
      } else {
        break;
      }
    }
    lower[i] = j + 1;
  }
  if (probes) *probes = count;
  return lower;
}

std::vector<std::size_t> sweep_upper(std::span<const std::int64_t> xs,
                                     std::span<const std::int64_t> ys,
                                     std::int64_t high, std::uint64_t* probes) {
  const std::size_t m = xs.size(), n = ys.size();
  std::vector<std::size_t> upper(m);
  std::uint64_t count = 0;
  std::size_t j = n;  // largest 1-based index with xs[i] + ys[j] <= high
  for (std::size_t i = 0; i < m; ++i) {
    while (j >= 1) {
      ++count;
      if (pair_sum(xs[i], ys[j - 1]) > high) {
        --j;
      } else {
        break;
      }
    }
    upper[i] = j;
  }
  if (probes) *probes = count;
  return upper;
}

std::vector<Count> prefix_sums(std::span<const Count> bs) {
  std::vector<Count> prefix(bs.size() + 1);
  prefix[0] = 0;
  for (std::size_t m = 0; m < bs.size(); ++m) {
    prefix[m + 1] = prefix[m] + bs[m];
  }
  return prefix;
}

WindowTables compute_windows(const IntervalSumInstance& inst) {
  WindowTables t;
  t.lower = sweep_lower(inst.xs, inst.ys, inst.low, &t.lower_probes);
  t.upper = sweep_upper(inst.xs, inst.ys, inst.high, &t.upper_probes);
  t.prefix = prefix_sums(inst.bs);
  return t;
}

Count eval_window_sum(std::span<const Count> as, const WindowTables& tables) {
  Count total = 0;
  Count diff;  // reused scratch
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::size_t lo = tables.lower[i], hi = tables.upper[i];
    if (hi < lo) continue;
    diff = tables.prefix[hi];
    diff -= tables.prefix[lo - 1];
    total += as[i] * diff;
  }
  return total;
}

Count solve_interval_sum(const IntervalSumInstance& inst) {
  if (inst.xs.size() != inst.as.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "xs has " + std::to_string(inst.xs.size()) + " values but as has " +
                    std::to_string(inst.as.size()));
  }
  if (inst.ys.size() != inst.bs.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "ys has " + std::to_string(inst.ys.size()) + " values but bs has " +
                    std::to_string(inst.bs.size()));
  }
  require_sorted(inst.xs, "xs");
  require_sorted(inst.ys, "ys");
  const WindowTables tables = compute_windows(inst);
  return eval_window_sum(inst.as, tables);
}

Count solve_interval_sum(std::span<const Count> as,
                         const WindowTables& tables) {
  return eval_window_sum(as, tables);
}

}  // namespace banzhaf
