#include "banzhaf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "banzhaf/format.hpp"
#include "banzhaf/game_io.hpp"
#include "banzhaf/rng.hpp"

namespace banzhaf {

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case ErrorCode::TooManyPlayersForOracle:
    case ErrorCode::QuotaTooLargeForDenseTable:
      return 5;
    default:
      return 3;
  }
}

namespace {

std::string counts_string(const CriticalCountVector& counts) {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ", ";
    out += counts[i].get_str();
  }
  out += ")";
  return out;
}

void print_table(const std::vector<std::vector<std::string>>& rows,
                 std::ostream& out) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) {
        out << std::string(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out << '\n';
  }
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2.0;
}

}  // namespace

void render_report(const WeightedVotingGame& game, const std::string& algorithm,
                   const PowerIndexReport& report, const std::string& format,
                   std::ostream& out) {
  const std::size_t n = game.player_count();
  if (format == "json-like") {
    nlohmann::ordered_json doc;
    doc["game"] = {{"quota", game.quota()}, {"weights", game.weights()},
                   {"proper", game.is_proper()}};
    doc["algorithm"] = algorithm;
    doc["digits"] = report.decimal_digits;
    doc["all_zero_counts"] = report.all_zero_counts;
    doc["players"] = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < n; ++p) {
      nlohmann::ordered_json row;
      row["player"] = p + 1;
      row["weight"] = game.weight(p);
      row["eta"] = report.raw[p].get_str();
      row["probabilistic"] = rational_string(report.probabilistic[p]);
      row["probabilistic_decimal"] =
          decimal_string(report.probabilistic[p], report.decimal_digits);
      if (!report.all_zero_counts) {
        row["normalized"] = rational_string(report.normalized[p]);
        row["normalized_decimal"] =
            decimal_string(report.normalized[p], report.decimal_digits);
      }
      doc["players"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
    return;
  }

  out << "game: " << render_game(game) << '\n';
  out << "players: " << n << "  total weight: " << game.total_weight()
      << "  quota: " << game.quota()
      << "  proper: " << (game.is_proper() ? "yes" : "no") << '\n';
  out << "algorithm: " << algorithm << '\n' << '\n';

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"player", "weight", "eta", "beta'", "beta'~", "beta", "beta~"});
  Count eta_sum = 0;
  for (std::size_t p = 0; p < n; ++p) {
    eta_sum += report.raw[p];
    std::vector<std::string> row;
    row.push_back(std::to_string(p + 1));
    row.push_back(std::to_string(game.weight(p)));
    row.push_back(report.raw[p].get_str());
    row.push_back(rational_string(report.probabilistic[p]));
    row.push_back(decimal_string(report.probabilistic[p], report.decimal_digits));
    if (report.all_zero_counts) {
      row.push_back("-");
      row.push_back("-");
    } else {
      row.push_back(rational_string(report.normalized[p]));
      row.push_back(decimal_string(report.normalized[p], report.decimal_digits));
    }
    rows.push_back(std::move(row));
  }
  print_table(rows, out);
  out << '\n' << "eta sum: " << eta_sum.get_str() << '\n';
  if (report.all_zero_counts) {
    out << "note: all counts are zero; normalized indices are undefined\n";
  }
}

int cmd_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    const WeightedVotingGame game = load_game_file(options.game_path);
    Algorithm algorithm;
    if (options.algorithm == "auto") {
      algorithm = choose_algorithm(game);
    } else if (auto parsed = algorithm_from_name(options.algorithm)) {
      algorithm = *parsed;
    } else {
      err << "unknown algorithm: " << options.algorithm << '\n';
      return 2;
    }
    if (options.format != "table" && options.format != "json-like") {
      err << "unknown format: " << options.format << '\n';
      return 2;
    }
    const PowerIndexReport report = solve(game, algorithm, options.solver,
                                          options.digits, options.oracle_cap);
    render_report(game, algorithm_name(algorithm), report, options.format, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.game_path.empty() && options.max_n > options.oracle_cap) {
    err << "max-n " << options.max_n << " exceeds the oracle cap "
        << options.oracle_cap << '\n';
    return 2;
  }
  try {
    std::vector<WeightedVotingGame> games;
    if (!options.game_path.empty()) {
      games.push_back(load_game_file(options.game_path));
    } else {
      Rng rng(options.seed);
      games.reserve(options.count);
      for (unsigned i = 0; i < options.count; ++i) {
        const std::size_t n =
            static_cast<std::size_t>(rng.uniform(1, options.max_n));
        games.push_back(random_game(rng, n, 0, options.max_weight));
      }
    }

    const std::vector<Algorithm> algorithms = {
        Algorithm::naive, Algorithm::gf_table, Algorithm::gf_list,
        Algorithm::partition};
    for (std::size_t g = 0; g < games.size(); ++g) {
      const WeightedVotingGame& game = games[g];
      std::vector<CriticalCountVector> results;
      for (Algorithm a : algorithms) {
        CriticalCountVector counts;
        switch (a) {
          case Algorithm::naive:
            counts = eta_naive(game, options.oracle_cap);
            break;
          case Algorithm::gf_table:
            counts = eta_all_gf_table(game);
            break;
          case Algorithm::gf_list:
            counts = eta_all_gf_list(game, options.solver);
            break;
          case Algorithm::partition:
            counts = eta_all_partitioned(game, options.solver);
            break;
        }
        if (options.inject_fault && g == 0 && a == Algorithm::gf_list) {
          counts[0] += 1;
        }
        results.push_back(std::move(counts));
      }
      for (std::size_t a = 1; a < results.size(); ++a) {
        if (results[a] != results[0]) {
          out << "MISMATCH on game " << (g + 1) << ": " << render_game(game)
              << '\n';
          for (std::size_t k = 0; k < results.size(); ++k) {
            out << "  " << std::setw(9) << std::left
                << algorithm_name(algorithms[k]) << " "
                << counts_string(results[k])
                << (results[k] != results[0] ? "   <-- differs" : "") << '\n';
          }
          return 4;
        }
      }
    }
    out << games.size() << "/" << games.size() << " agree";
    if (options.game_path.empty()) out << " (seed " << options.seed << ")";
    out << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

std::vector<BenchRow> run_bench(const BenchOptions& options,
                                std::ostream& err) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  Rng rng(options.seed);

  for (std::size_t n = options.n_min; n <= options.n_max;
       n += std::max<std::size_t>(1, options.n_step)) {
    const WeightedVotingGame game =
        options.family == "dense-weights"
            ? random_majority_game(rng, n, 1, options.max_weight)
            : random_majority_game(rng, n, 1, (Weight(1) << 40) - 1);
    const Weight q = game.quota();

    // A priori bounds on the coefficient lists each algorithm materializes.
    auto list_bound = [&](std::size_t players) {
      const std::uint64_t exhaustive =
          players >= 63 ? UINT64_MAX : (std::uint64_t(1) << players);
      return std::min<std::uint64_t>(exhaustive,
                                     static_cast<std::uint64_t>(q));
    };

    CriticalCountVector reference;
    Algorithm reference_algorithm = Algorithm::naive;
    std::vector<std::size_t> produced;  // indices into rows with results

    for (Algorithm a : {Algorithm::naive, Algorithm::gf_table,
                        Algorithm::gf_list, Algorithm::partition}) {
      if (options.only && *options.only != a) continue;
      BenchRow row;
      row.n = n;
      row.quota = q;
      row.algorithm = a;

      std::string skip;
      if (a == Algorithm::naive && n > options.oracle_cap) {
        skip = "n over oracle cap";
      } else if (a == Algorithm::gf_table &&
                 !dense_table_fits(q, dense_table_cap_bytes())) {
        skip = "quota over dense-table cap";
      } else if (a == Algorithm::gf_list &&
                 list_bound(n) > options.list_cap_terms) {
        skip = "coefficient bound over list cap";
      } else if (a == Algorithm::partition &&
                 list_bound((n + 1) / 2) > options.list_cap_terms) {
        skip = "coefficient bound over list cap";
      }
      if (!skip.empty()) {
        row.status = skip;
        rows.push_back(std::move(row));
        continue;
      }

      try {
        CriticalCountVector counts;
        std::vector<double> times;
        for (unsigned rep = 0; rep <= options.reps; ++rep) {
          SolverStats stats;
          const auto start = clock::now();
          switch (a) {
            case Algorithm::naive:
              counts = eta_naive(game, options.oracle_cap);
              break;
            case Algorithm::gf_table:
              counts = eta_all_gf_table(game, std::nullopt, &stats);
              break;
            case Algorithm::gf_list:
              counts = eta_all_gf_list(game, options.solver, &stats);
              break;
            case Algorithm::partition:
              counts = eta_all_partitioned(game, options.solver, &stats);
              break;
          }
          const auto stop = clock::now();
          row.peak_terms = std::max(row.peak_terms, stats.peak_terms);
          if (rep == 0) continue;  // warmup
          times.push_back(
              std::chrono::duration<double, std::milli>(stop - start).count());
        }
        row.ran = true;
        row.status = "ok";
        row.median_ms = median(std::move(times));

        if (reference.empty()) {
          reference = std::move(counts);
          reference_algorithm = a;
        } else if (counts != reference) {
          err << "bench verification mismatch on n=" << n << " "
              << render_game(game) << ": " << algorithm_name(a) << " "
              << counts_string(counts) << " vs "
              << algorithm_name(reference_algorithm) << " "
              << counts_string(reference) << '\n';
          row.status = "mismatch";
          rows.push_back(std::move(row));
          return rows;
        } else {
          row.verified = true;
          for (std::size_t r : produced) rows[r].verified = true;
        }
        produced.push_back(rows.size());
      } catch (const Error& e) {
        row.status = std::string("error: ") + e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.family != "dense-weights" && options.family != "distinct-sums") {
    err << "unknown family: " << options.family << '\n';
    return 2;
  }
  const std::vector<BenchRow> rows = run_bench(options, err);
  for (const BenchRow& row : rows) {
    if (row.status == "mismatch") return 4;
  }

  out << "family: " << options.family << "  seed: " << options.seed
      << "  reps: " << options.reps << '\n';
  std::vector<std::vector<std::string>> table;
  table.push_back(
      {"n", "quota", "algorithm", "status", "median_ms", "peak_terms",
       "verified"});
  for (const BenchRow& row : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << row.median_ms;
    table.push_back({std::to_string(row.n), std::to_string(row.quota),
                     algorithm_name(row.algorithm), row.status,
                     row.ran ? ms.str() : "-",
                     row.ran ? std::to_string(row.peak_terms) : "-",
                     row.ran ? (row.verified ? "yes" : "-") : "-"});
  }
  print_table(table, out);
  return 0;
}

}  // namespace banzhaf
