#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "banzhaf/game.hpp"
#include "banzhaf/solvers.hpp"

namespace banzhaf {

// Exit codes shared by all subcommands:
//   0 success, 2 usage error, 3 parse/validation error,
//   4 verification mismatch, 5 resource cap exceeded.
int exit_code_for(const Error& error);

struct ComputeOptions {
  std::string game_path;
  std::string algorithm = "auto";  // naive|gf-table|gf-list|partition|auto
  std::string format = "table";    // table|json-like
  int digits = 10;
  unsigned oracle_cap = 30;
  SolverOptions solver;
};

struct VerifyOptions {
  std::string game_path;  // empty: generate games instead
  unsigned count = 200;
  unsigned max_n = 14;
  Weight max_weight = 50;
  std::uint64_t seed = 1;
  unsigned oracle_cap = 30;
  SolverOptions solver;
  // Test hook: corrupts one solver's counts on the first game so the
  // mismatch path can be exercised. Never exposed as a flag.
  bool inject_fault = false;
};

struct BenchOptions {
  std::string family = "distinct-sums";  // dense-weights|distinct-sums
  std::size_t n_min = 20;
  std::size_t n_max = 32;
  std::size_t n_step = 2;
  unsigned reps = 3;
  std::uint64_t seed = 1;
  Weight max_weight = 500;  // dense-weights family only
  // List algorithms are skipped when min(2^n, q) per list would exceed this.
  std::size_t list_cap_terms = std::size_t(1) << 22;
  unsigned oracle_cap = 30;
  std::optional<Algorithm> only;  // restrict to one algorithm
  SolverOptions solver;
};

struct BenchRow {
  std::size_t n = 0;
  Weight quota = 0;
  Algorithm algorithm = Algorithm::naive;
  bool ran = false;
  std::string status;  // "ok" or the skip/error reason
  double median_ms = 0.0;
  std::size_t peak_terms = 0;
  bool verified = false;  // eta matched another algorithm on the same game
};

int cmd_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err);

/// Bench rows without the report formatting (also used by the acceptance
/// suite's scaling check). Appends a row per (game, algorithm) attempt.
std::vector<BenchRow> run_bench(const BenchOptions& options,
                                std::ostream& err);

/// Renders a solved report in the compute output format ("table" or
/// "json-like").
void render_report(const WeightedVotingGame& game, const std::string& algorithm,
                   const PowerIndexReport& report, const std::string& format,
                   std::ostream& out);

}  // namespace banzhaf
