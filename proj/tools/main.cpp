#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "banzhaf/cli.hpp"

namespace {

// "24" or "24..32"
bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoull(text);
    } else {
      lo = std::stoull(text.substr(0, dots));
      hi = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

void add_solver_flags(CLI::App* cmd, banzhaf::SolverOptions& solver) {
  cmd->add_flag_callback(
      "--no-truncate", [&solver] { solver.truncate_at_quota = false; },
      "Keep GF terms at and above the quota");
  cmd->add_flag_callback(
      "--no-share-windows", [&solver] { solver.share_windows = false; },
      "Recompute window tables and prefix sums per player");
  cmd->add_flag_callback(
      "--no-memoize", [&solver] { solver.memoize_by_weight = false; },
      "Recompute counts for players with equal weights");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Banzhaf power indices for weighted voting games"};
  app.require_subcommand(1);

  banzhaf::ComputeOptions compute;
  CLI::App* cmd_compute =
      app.add_subcommand("compute", "Solve one game and print its indices");
  cmd_compute->add_option("game", compute.game_path,
                          "Game file, '[q; w1, ...]' or JSON ('-' for stdin)")
      ->required();
  cmd_compute->add_option("--algorithm", compute.algorithm,
                          "naive|gf-table|gf-list|partition|auto");
  cmd_compute->add_option("--format", compute.format, "table|json-like");
  cmd_compute->add_option("--digits", compute.digits,
                          "Decimal digits for rendered indices")
      ->check(CLI::Range(0, 10000));
  cmd_compute->add_option("--oracle-cap", compute.oracle_cap,
                          "Player cap for the naive algorithm");
  add_solver_flags(cmd_compute, compute.solver);

  banzhaf::VerifyOptions verify;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Cross-check all four algorithms on games");
  cmd_verify->add_option("game", verify.game_path,
                         "Game file (omit to generate random games)");
  cmd_verify->add_option("--count", verify.count, "Number of random games");
  cmd_verify->add_option("--max-n", verify.max_n, "Largest player count");
  cmd_verify->add_option("--max-weight", verify.max_weight, "Largest weight");
  cmd_verify->add_option("--seed", verify.seed, "Generator seed");
  cmd_verify->add_option("--oracle-cap", verify.oracle_cap,
                         "Player cap for the naive algorithm");
  add_solver_flags(cmd_verify, verify.solver);

  banzhaf::BenchOptions bench;
  std::string bench_range = "20..32";
  std::string bench_algorithm = "all";
  CLI::App* cmd_bench = app.add_subcommand(
      "bench", "Time the algorithms over a seeded game family");
  cmd_bench->add_option("--family", bench.family,
                        "dense-weights|distinct-sums");
  cmd_bench->add_option("--n", bench_range, "Player counts, e.g. 24..32");
  cmd_bench->add_option("--step", bench.n_step, "Player count increment");
  cmd_bench->add_option("--reps", bench.reps,
                        "Timed repetitions per row (after one warmup)");
  cmd_bench->add_option("--seed", bench.seed, "Generator seed");
  cmd_bench->add_option("--max-weight", bench.max_weight,
                        "Largest weight (dense-weights family)");
  cmd_bench->add_option("--list-cap", bench.list_cap_terms,
                        "Skip list algorithms beyond this coefficient bound");
  cmd_bench->add_option("--oracle-cap", bench.oracle_cap,
                        "Player cap for the naive algorithm");
  cmd_bench->add_option("--algorithm", bench_algorithm,
                        "Restrict to one algorithm, or 'all'");
  add_solver_flags(cmd_bench, bench.solver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_compute->parsed()) {
    return banzhaf::cmd_compute(compute, std::cout, std::cerr);
  }
  if (cmd_verify->parsed()) {
    return banzhaf::cmd_verify(verify, std::cout, std::cerr);
  }
  if (cmd_bench->parsed()) {
    if (!parse_range(bench_range, bench.n_min, bench.n_max)) {
      std::cerr << "bad --n range: " << bench_range << '\n';
      return 2;
    }
    if (bench_algorithm != "all") {
      const auto parsed = banzhaf::algorithm_from_name(bench_algorithm);
      if (!parsed) {
        std::cerr << "unknown algorithm: " << bench_algorithm << '\n';
        return 2;
      }
      bench.only = *parsed;
    }
    return banzhaf::cmd_bench(bench, std::cout, std::cerr);
  }
  return 2;
}
