// Acceptance suite: end-to-end checks at fixed seeds and tolerances.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "banzhaf/cli.hpp"
#include "banzhaf/game_io.hpp"
#include "banzhaf/rng.hpp"
#include "banzhaf/solvers.hpp"
#include "helpers.hpp"

using namespace banzhaf;
using Clock = std::chrono::steady_clock;

namespace {

struct Acceptance {
  int failures = 0;

  void criterion(int number, const std::string& title,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = Clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] %d. %s%s%s (%.1f s)\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), detail.empty() ? "" : ": ", detail.c_str(),
                seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

bool all_four_agree(const WeightedVotingGame& game, std::string& detail) {
  const CriticalCountVector expected = eta_naive(game);
  const struct {
    const char* name;
    CriticalCountVector counts;
  } others[] = {
      {"gf-table", eta_all_gf_table(game)},
      {"gf-list", eta_all_gf_list(game)},
      {"partition", eta_all_partitioned(game)},
  };
  for (const auto& [name, counts] : others) {
    if (counts != expected) {
      detail = std::string(name) + " disagrees with naive on " +
               render_game(game);
      return false;
    }
  }
  return true;
}

double run_partition_seconds(const WeightedVotingGame& game,
                             const SolverOptions& opts,
                             CriticalCountVector& out) {
  const auto start = Clock::now();
  out = eta_all_partitioned(game, opts);
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  Acceptance acc;

  acc.criterion(1, "oracle equivalence on 200 seeded games (n <= 14)",
                [](std::string& detail) {
                  const auto start = Clock::now();
                  Rng rng(20240001);
                  for (int i = 0; i < 200; ++i) {
                    const std::size_t n = rng.uniform(1, 14);
                    const WeightedVotingGame game = random_game(rng, n, 0, 50);
                    if (!all_four_agree(game, detail)) return false;
                  }
                  const double seconds =
                      std::chrono::duration<double>(Clock::now() - start)
                          .count();
                  if (seconds >= 60.0) {
                    detail = "exceeded the 60 s budget";
                    return false;
                  }
                  detail = "200/200 agree";
                  return true;
                });

  acc.criterion(2, "fixture games [3; 2,1,1] and [1; 1,0]",
                [](std::string& detail) {
                  const PowerIndexReport r =
                      solve(validate_game(3, {2, 1, 1}), Algorithm::partition);
                  CriticalCountVector eta;
                  eta.emplace_back(3);
                  eta.emplace_back(1);
                  eta.emplace_back(1);
                  if (r.raw != eta) {
                    detail = "eta mismatch on [3; 2,1,1]";
                    return false;
                  }
                  if (r.normalized != std::vector<Ratio>{Ratio(3, 5),
                                                         Ratio(1, 5),
                                                         Ratio(1, 5)}) {
                    detail = "beta mismatch on [3; 2,1,1]";
                    return false;
                  }
                  if (r.probabilistic != std::vector<Ratio>{Ratio(3, 4),
                                                            Ratio(1, 4),
                                                            Ratio(1, 4)}) {
                    detail = "beta' mismatch on [3; 2,1,1]";
                    return false;
                  }
                  CriticalCountVector dict;
                  dict.emplace_back(2);
                  dict.emplace_back(0);
                  for (Algorithm a : {Algorithm::naive, Algorithm::gf_table,
                                      Algorithm::gf_list,
                                      Algorithm::partition}) {
                    if (solve(validate_game(1, {1, 0}), a).raw != dict) {
                      detail = std::string("eta mismatch on [1; 1,0] under ") +
                               algorithm_name(a);
                      return false;
                    }
                  }
                  return true;
                });

  acc.criterion(
      3, "GF algebra on 100 seeded weight vectors (n <= 12)",
      [](std::string& detail) {
        Rng rng(20240003);
        for (int i = 0; i < 100; ++i) {
          const std::size_t n = rng.uniform(1, 12);
          std::vector<Weight> weights(n);
          for (Weight& w : weights) w = rng.uniform(0, 50);
          const SparseGF gf = build_gf(weights, TruncationPolicy::none());
          if (gf.total_count() != Count(1) << n) {
            detail = "count sum != 2^n";
            return false;
          }
          for (const Weight w : weights) {
            const SparseGF quotient =
                divide_gf(gf, w, TruncationPolicy::none());
            const SparseGF factor =
                w == 0 ? SparseGF{{{0, 2}}} : SparseGF{{{0, 1}, {w, 1}}};
            if (multiply_gf(quotient, factor, TruncationPolicy::none()) !=
                gf) {
              detail = "divide-multiply round trip broke";
              return false;
            }
          }
        }
        return true;
      });

  acc.criterion(
      4, "interval-sum oracle on 500 seeded instances (M,N <= 8)",
      [](std::string& detail) {
        Rng rng(20240004);
        for (int i = 0; i < 500; ++i) {
          IntervalSumInstance inst;
          const std::size_t m = rng.uniform(0, 8);
          const std::size_t n = rng.uniform(0, 8);
          for (std::size_t k = 0; k < m; ++k) {
            inst.xs.push_back(rng.uniform(0, 20));
            inst.as.push_back(Count(rng.uniform(0, 20)));
          }
          for (std::size_t k = 0; k < n; ++k) {
            inst.ys.push_back(rng.uniform(0, 20));
            inst.bs.push_back(Count(rng.uniform(0, 20)));
          }
          std::sort(inst.xs.begin(), inst.xs.end());
          std::sort(inst.ys.begin(), inst.ys.end());
          inst.low = rng.uniform(-5, 45);
          inst.high = rng.uniform(-5, 45);
          if (solve_interval_sum(inst) != testing::interval_sum_oracle(inst)) {
            detail = "result differs from the double loop";
            return false;
          }
          const WindowTables tables = compute_windows(inst);
          const std::uint64_t bound = n + 2 * m;
          if (tables.lower_probes > bound || tables.upper_probes > bound) {
            detail = "probe counter exceeded N + 2M";
            return false;
          }
        }
        return true;
      });

  acc.criterion(
      5, "pseudopolynomial regime: n = 200, weights in [1,500], majority quota",
      [](std::string& detail) {
        Rng rng(20240005);
        const WeightedVotingGame game = random_majority_game(rng, 200, 1, 500);

        const auto t0 = Clock::now();
        const CriticalCountVector dense = eta_all_gf_table(game);
        const double dense_s =
            std::chrono::duration<double>(Clock::now() - t0).count();

        const auto t1 = Clock::now();
        const CriticalCountVector part = eta_all_partitioned(game);
        const double part_s =
            std::chrono::duration<double>(Clock::now() - t1).count();

        if (dense != part) {
          detail = "gf-table and partition disagree";
          return false;
        }
        std::ostringstream note;
        note << "gf-table " << dense_s << " s, partition " << part_s << " s";
        detail = note.str();
        return dense_s < 30.0 && part_s < 30.0;
      });

  acc.criterion(
      6, "exponential regime: n = 40, 40-bit weights",
      [](std::string& detail) {
        Rng rng(20240006);
        std::vector<Weight> weights(40);
        for (Weight& w : weights) w = rng.uniform(1, (Weight(1) << 40) - 1);
        weights[1] = weights[0];  // symmetric pair
        weights[39] = 0;          // dummy player
        Weight total = 0;
        for (Weight w : weights) total += w;
        const WeightedVotingGame game(total / 2 + 1, weights);

        try {
          eta_naive(game);
          detail = "naive accepted n = 40";
          return false;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::TooManyPlayersForOracle) {
            detail = "naive refused with the wrong error";
            return false;
          }
        }

        CriticalCountVector reference;
        const double seconds =
            run_partition_seconds(game, SolverOptions{}, reference);
        if (seconds >= 300.0) {
          detail = "partition exceeded the 5 min budget";
          return false;
        }
        if (reference[0] != reference[1]) {
          detail = "symmetric players got different counts";
          return false;
        }
        if (reference[39] != 0) {
          detail = "zero-weight player got a nonzero count";
          return false;
        }

        for (int t = 0; t < 2; ++t) {
          for (int s = 0; s < 2; ++s) {
            for (int m = 0; m < 2; ++m) {
              const SolverOptions opts{t == 1, s == 1, m == 1};
              if (eta_all_partitioned(game, opts) != reference) {
                detail = "option combination changed the counts";
                return false;
              }
            }
          }
        }

        std::vector<Weight> tripled = weights;
        for (Weight& w : tripled) w *= 3;
        const WeightedVotingGame scaled(3 * game.quota(), tripled);
        if (eta_all_partitioned(scaled) != reference) {
          detail = "scaling by 3 changed the counts";
          return false;
        }

        std::ostringstream note;
        note << "partition " << seconds
             << " s; properties hold across 8 option combos and c = 3";
        detail = note.str();
        return true;
      });

  acc.criterion(
      7, "scaling slope: partition medians over n in {24..32}, distinct sums",
      [](std::string& detail) {
        BenchOptions options;
        options.family = "distinct-sums";
        options.n_min = 24;
        options.n_max = 32;
        options.n_step = 2;
        options.reps = 5;
        options.seed = 20240007;
        options.only = Algorithm::partition;
        std::ostringstream err;
        const std::vector<BenchRow> rows = run_bench(options, err);
        if (rows.size() != 5) {
          detail = "expected 5 bench rows";
          return false;
        }
        std::ostringstream note;
        note << "ratios";
        bool ok = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
          if (!rows[i - 1].ran || !rows[i].ran) {
            detail = "a bench row did not run";
            return false;
          }
          const double ratio = rows[i].median_ms / rows[i - 1].median_ms;
          note << " " << ratio;
          if (ratio < 1.5 || ratio > 3.0) ok = false;
        }
        detail = note.str() + (ok ? " all in [1.5, 3.0]" : " outside [1.5, 3.0]");
        return ok;
      });

  acc.criterion(
      8, "truncation soundness on 100 seeded games (n <= 14)",
      [](std::string& detail) {
        Rng rng(20240008);
        for (int i = 0; i < 100; ++i) {
          const std::size_t n = rng.uniform(1, 14);
          const WeightedVotingGame game = random_game(rng, n, 0, 50);
          SolverOptions on, off;
          on.truncate_at_quota = true;
          off.truncate_at_quota = false;
          if (eta_all_partitioned(game, on) != eta_all_partitioned(game, off) ||
              eta_all_gf_list(game, on) != eta_all_gf_list(game, off)) {
            detail = "truncation changed the counts on " + render_game(game);
            return false;
          }
        }
        return true;
      });

  if (acc.failures) {
    std::printf("%d criterion(s) failed\n", acc.failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
