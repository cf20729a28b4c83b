#include "banzhaf/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "banzhaf/interval_sum.hpp"

namespace banzhaf {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::naive: return "naive";
    case Algorithm::gf_table: return "gf-table";
    case Algorithm::gf_list: return "gf-list";
    case Algorithm::partition: return "partition";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "gf-table") return Algorithm::gf_table;
  if (name == "gf-list") return Algorithm::gf_list;
  if (name == "partition") return Algorithm::partition;
  return std::nullopt;
}

PartitionPlan PartitionPlan::for_player_count(std::size_t n) {
  PartitionPlan plan;
  const std::size_t split = (n + 1) / 2;  // |A| = ceil(n/2)
  plan.set_a.reserve(split);
  plan.set_b.reserve(n - split);
  for (std::size_t p = 1; p <= split; ++p) plan.set_a.push_back(p);
  for (std::size_t p = split + 1; p <= n; ++p) plan.set_b.push_back(p);
  return plan;
}

CriticalCountVector eta_naive(const WeightedVotingGame& game,
                              unsigned oracle_cap) {
  const std::size_t n = game.player_count();
  if (n > oracle_cap || n > 62) {
    throw Error(ErrorCode::TooManyPlayersForOracle,
                "naive enumeration refused for n = " + std::to_string(n) +
                    " (cap " + std::to_string(std::min<unsigned>(oracle_cap, 62)) +
                    ")");
  }
  const Weight q = game.quota();
  const std::vector<Weight>& w = game.weights();
  std::vector<std::uint64_t> counts(n, 0);
  const std::uint64_t subsets = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Weight sum = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      sum += w[std::countr_zero(m)];
    }
    if (sum < q) continue;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const unsigned p = std::countr_zero(m);
      if (sum - w[p] < q) ++counts[p];
    }
  }
  CriticalCountVector out;
  out.reserve(n);
  for (std::uint64_t c : counts) {
    out.emplace_back(static_cast<unsigned long>(c));
  }
  return out;
}

std::uint64_t dense_table_cap_bytes() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("BANZHAF_DENSE_CAP_BYTES")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return std::uint64_t(v);
    }
    return std::uint64_t(1) << 30;
  }();
  return cap;
}

bool dense_table_fits(Weight quota, std::uint64_t cap_bytes) {
  // Two arrays of q arbitrary-precision entries; ~64 bytes each once the
  // counts grow a few limbs.
  constexpr std::uint64_t kBytesPerEntry = 64;
  return static_cast<std::uint64_t>(quota) <= cap_bytes / (2 * kBytesPerEntry);
}

CriticalCountVector eta_all_gf_table(const WeightedVotingGame& game,
                                     std::optional<std::uint64_t> memory_cap_bytes,
                                     SolverStats* stats) {
  const Weight q = game.quota();
  const std::uint64_t cap = memory_cap_bytes.value_or(dense_table_cap_bytes());
  if (!dense_table_fits(q, cap)) {
    throw Error(ErrorCode::QuotaTooLargeForDenseTable,
                "dense tables for quota " + std::to_string(q) +
                    " exceed the memory cap of " + std::to_string(cap) +
                    " bytes");
  }
  const std::size_t n = game.player_count();
  const std::vector<Weight>& w = game.weights();
  const std::size_t qz = static_cast<std::size_t>(q);
  if (stats) stats->peak_terms = qz;

  // a[k] = number of coalitions with weight sum k, k < q.
  std::vector<Count> a(qz);
  a[0] = 1;
  for (Weight wi : w) {
    if (wi == 0) {
      for (Count& c : a) c *= 2;
    } else if (static_cast<std::size_t>(wi) < qz) {
      for (std::size_t k = qz - 1; k >= static_cast<std::size_t>(wi); --k) {
        a[k] += a[k - wi];
      }
    }
    // wi >= q never contributes below the quota.
  }

  CriticalCountVector counts(n);
  std::vector<Count> c(qz);
  for (std::size_t p = 0; p < n; ++p) {
    const Weight wp = w[p];
    const Weight lo = std::max<Weight>(0, q - wp);
    if (wp == 0) {
      counts[p] = 0;  // window [q, q-1] is empty
      continue;
    }
    Count eta = 0;
    for (std::size_t k = 0; k < qz; ++k) {
      c[k] = a[k];
      if (k >= static_cast<std::size_t>(wp)) c[k] -= c[k - wp];
      if (k >= static_cast<std::size_t>(lo)) eta += c[k];
    }
    counts[p] = std::move(eta);
  }
  return counts;
}

namespace {

std::vector<Power> powers_of(const SparseGF& gf) {
  std::vector<Power> out;
  out.reserve(gf.terms.size());
  for (const GFTerm& t : gf.terms) out.push_back(t.power);
  return out;
}

std::vector<Count> prefix_sums_of(const SparseGF& gf) {
  std::vector<Count> prefix(gf.terms.size() + 1);
  prefix[0] = 0;
  for (std::size_t m = 0; m < gf.terms.size(); ++m) {
    prefix[m + 1] = prefix[m] + gf.terms[m].count;
  }
  return prefix;
}

// sum_i terms[i].count * (prefix[upper[i]] - prefix[lower[i]-1])
Count window_row_sum(const std::vector<GFTerm>& terms,
                     const std::vector<std::size_t>& lower,
                     const std::vector<std::size_t>& upper,
                     const std::vector<Count>& prefix) {
  Count total = 0;
  Count diff;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::size_t lo = lower[i], hi = upper[i];
    if (hi < lo) continue;
    diff = prefix[hi];
    diff -= prefix[lo - 1];
    total += terms[i].count * diff;
  }
  return total;
}

// Counts for every player of one half: divide the owning half's GF by the
// player's factor, then window-sum against the other half.
void solve_half(const WeightedVotingGame& game, const SparseGF& own,
                const SparseGF& other, std::size_t first, std::size_t last,
                const SolverOptions& opts, TruncationPolicy policy,
                std::map<Weight, Count>& memo, CriticalCountVector& counts,
                SolverStats* stats) {
  const Weight q = game.quota();
  const std::vector<Power> ys = powers_of(other);

  // Shared tables: with zeros retained every quotient has `own`'s power
  // sequence, and the upper bound q-1 is player-independent.
  std::vector<Power> xs_shared;
  std::vector<std::size_t> upper_shared;
  std::vector<Count> prefix_shared;
  if (opts.share_windows) {
    xs_shared = powers_of(own);
    upper_shared = sweep_upper(xs_shared, ys, q - 1);
    prefix_shared = prefix_sums_of(other);
  }

  for (std::size_t p = first; p < last; ++p) {
    const Weight wp = game.weight(p);
    if (opts.memoize_by_weight) {
      auto hit = memo.find(wp);
      if (hit != memo.end()) {
        counts[p] = hit->second;
        continue;
      }
    }
    const SparseGF quotient =
        divide_gf(own, wp, policy,
                  opts.share_windows ? ZeroRetention::retain
                                     : ZeroRetention::prune);
    if (stats) {
      stats->peak_terms = std::max(stats->peak_terms, quotient.terms.size());
    }
    Count eta;
    if (opts.share_windows) {
      const std::vector<std::size_t> lower =
          sweep_lower(xs_shared, ys, q - wp);
      eta = window_row_sum(quotient.terms, lower, upper_shared, prefix_shared);
    } else {
      const std::vector<Power> xs = powers_of(quotient);
      const std::vector<std::size_t> lower = sweep_lower(xs, ys, q - wp);
      const std::vector<std::size_t> upper = sweep_upper(xs, ys, q - 1);
      const std::vector<Count> prefix = prefix_sums_of(other);
      eta = window_row_sum(quotient.terms, lower, upper, prefix);
    }
    if (opts.memoize_by_weight) memo.emplace(wp, eta);
    counts[p] = std::move(eta);
  }
}

}  // namespace

CriticalCountVector eta_all_gf_list(const WeightedVotingGame& game,
                                    const SolverOptions& opts,
                                    SolverStats* stats) {
  const std::size_t n = game.player_count();
  const Weight q = game.quota();
  const TruncationPolicy policy = opts.truncate_at_quota
                                      ? TruncationPolicy::at(q)
                                      : TruncationPolicy::none();
  const SparseGF gf = build_gf(game.weights(), policy);
  if (stats) stats->peak_terms = gf.terms.size();

  CriticalCountVector counts(n);
  std::map<Weight, Count> memo;
  for (std::size_t p = 0; p < n; ++p) {
    const Weight wp = game.weight(p);
    if (opts.memoize_by_weight) {
      auto hit = memo.find(wp);
      if (hit != memo.end()) {
        counts[p] = hit->second;
        continue;
      }
    }
    const SparseGF quotient = divide_gf(gf, wp, policy);
    if (stats) {
      stats->peak_terms = std::max(stats->peak_terms, quotient.terms.size());
    }
    const Weight lo = std::max<Weight>(0, q - wp);
    const Weight hi = q - 1;
    Count eta = 0;
    auto it = std::lower_bound(
        quotient.terms.begin(), quotient.terms.end(), lo,
        [](const GFTerm& t, Weight value) { return t.power < value; });
    for (; it != quotient.terms.end() && it->power <= hi; ++it) {
      eta += it->count;
    }
    if (opts.memoize_by_weight) memo.emplace(wp, eta);
    counts[p] = std::move(eta);
  }
  return counts;
}

CriticalCountVector eta_all_partitioned(const WeightedVotingGame& game,
                                        const SolverOptions& opts,
                                        SolverStats* stats) {
  const std::size_t n = game.player_count();
  const Weight q = game.quota();
  const TruncationPolicy policy = opts.truncate_at_quota
                                      ? TruncationPolicy::at(q)
                                      : TruncationPolicy::none();
  const PartitionPlan plan = PartitionPlan::for_player_count(n);
  const std::size_t split = plan.set_a.size();

  const std::span<const Weight> weights(game.weights());
  const SparseGF gf_a = build_gf(weights.subspan(0, split), policy);
  const SparseGF gf_b = build_gf(weights.subspan(split), policy);
  if (stats) {
    stats->peak_terms = std::max({stats->peak_terms, gf_a.terms.size(),
                                  gf_b.terms.size()});
  }

  CriticalCountVector counts(n);
  std::map<Weight, Count> memo;
  solve_half(game, gf_a, gf_b, 0, split, opts, policy, memo, counts, stats);
  solve_half(game, gf_b, gf_a, split, n, opts, policy, memo, counts, stats);
  return counts;
}

Algorithm choose_algorithm(const WeightedVotingGame& game) {
  const std::size_t n = game.player_count();
  const unsigned half = static_cast<unsigned>((n + 1) / 2);
  // q below 2^{n/2} means the dense O(nq) tables beat the list bound.
  const bool quota_small =
      half >= 63 || game.quota() < (Weight(1) << std::min(half, 62u));
  if (quota_small && dense_table_fits(game.quota(), dense_table_cap_bytes())) {
    return Algorithm::gf_table;
  }
  return Algorithm::partition;
}

PowerIndexReport solve(const WeightedVotingGame& game, Algorithm algorithm,
                       const SolverOptions& opts, int decimal_digits,
                       unsigned oracle_cap, SolverStats* stats) {
  CriticalCountVector counts;
  switch (algorithm) {
    case Algorithm::naive:
      counts = eta_naive(game, oracle_cap);
      break;
    case Algorithm::gf_table:
      counts = eta_all_gf_table(game, std::nullopt, stats);
      break;
    case Algorithm::gf_list:
      counts = eta_all_gf_list(game, opts, stats);
      break;
    case Algorithm::partition:
      counts = eta_all_partitioned(game, opts, stats);
      break;
  }
  return normalize_indices(std::move(counts), game.player_count(),
                           decimal_digits);
}

}  // namespace banzhaf
