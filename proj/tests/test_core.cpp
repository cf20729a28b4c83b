#include <doctest.h>

#include <vector>

#include "banzhaf/game.hpp"
#include "banzhaf/rng.hpp"
#include "banzhaf/solvers.hpp"
#include "helpers.hpp"

using namespace banzhaf;

namespace {

void check_error(ErrorCode expected, auto&& fn) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("validate_game accepts and rejects per the definition") {
  const WeightedVotingGame g = validate_game(3, {2, 1, 1});
  CHECK(g.quota() == 3);
  CHECK(g.total_weight() == 4);
  CHECK(g.player_count() == 3);

  check_error(ErrorCode::QuotaOutOfRange, [] { validate_game(5, {2, 1, 1}); });
  check_error(ErrorCode::QuotaOutOfRange, [] { validate_game(0, {1, 1}); });
  check_error(ErrorCode::EmptyPlayerSet, [] { validate_game(1, {}); });
  check_error(ErrorCode::NegativeWeight, [] { validate_game(1, {2, -1}); });
  check_error(ErrorCode::WeightOverflow,
              [] { validate_game(1, {INT64_MAX, INT64_MAX}); });
}

TEST_CASE("proper flag is informational") {
  CHECK(validate_game(3, {2, 1, 1}).is_proper());       // 2*3 > 4
  CHECK_FALSE(validate_game(2, {2, 1, 1}).is_proper()); // 2*2 = 4
}

TEST_CASE("coalition_weight") {
  const WeightedVotingGame g = validate_game(3, {2, 1, 1});
  const std::vector<std::size_t> c13 = {1, 3};
  const std::vector<std::size_t> all = {1, 2, 3};
  CHECK(coalition_weight(g, c13) == 3);
  CHECK(coalition_weight(g, std::vector<std::size_t>{}) == 0);
  CHECK(coalition_weight(g, all) == 4);
  // duplicates count once
  CHECK(coalition_weight(g, std::vector<std::size_t>{1, 1, 3}) == 3);
  check_error(ErrorCode::IndexOutOfRange, [&] {
    coalition_weight(g, std::vector<std::size_t>{4});
  });
  check_error(ErrorCode::IndexOutOfRange, [&] {
    coalition_weight(g, std::vector<std::size_t>{0});
  });
}

TEST_CASE("is_critical") {
  const WeightedVotingGame g = validate_game(3, {2, 1, 1});
  CHECK(is_critical(g, std::vector<std::size_t>{1, 2}, 1));
  CHECK_FALSE(is_critical(g, std::vector<std::size_t>{1, 2, 3}, 2));
  CHECK_FALSE(is_critical(g, std::vector<std::size_t>{2, 3}, 2));  // losing
  check_error(ErrorCode::PlayerNotInCoalition, [&] {
    is_critical(g, std::vector<std::size_t>{2, 3}, 1);
  });
}

TEST_CASE("is_critical matches the weight-window characterization") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.uniform(1, 6);
    const WeightedVotingGame g = random_game(rng, n, 0, 9);
    const std::uint64_t subsets = std::uint64_t(1) << n;
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::vector<std::size_t> members;
      for (std::size_t p = 1; p <= n; ++p) {
        if (mask >> (p - 1) & 1) members.push_back(p);
      }
      const Weight wc = coalition_weight(g, members);
      for (std::size_t p : members) {
        const Weight rest = wc - g.weight(p - 1);
        const bool windowed =
            g.quota() - g.weight(p - 1) <= rest && rest <= g.quota() - 1;
        CHECK(is_critical(g, members, p) == windowed);
      }
    }
  }
}

TEST_CASE("normalize_indices on the fixture counts") {
  const PowerIndexReport r = normalize_indices({3, 1, 1}, 3);
  CHECK(r.normalized == std::vector<Ratio>{Ratio(3, 5), Ratio(1, 5), Ratio(1, 5)});
  CHECK(r.probabilistic ==
        std::vector<Ratio>{Ratio(3, 4), Ratio(1, 4), Ratio(1, 4)});
  CHECK_FALSE(r.all_zero_counts);
  CHECK(r.decimal_digits == 10);

  const PowerIndexReport sym = normalize_indices({1, 1}, 2);
  CHECK(sym.normalized == std::vector<Ratio>{Ratio(1, 2), Ratio(1, 2)});
  CHECK(sym.probabilistic == std::vector<Ratio>{Ratio(1, 2), Ratio(1, 2)});

  // dictator game [1; 1, 0]
  const PowerIndexReport dict = normalize_indices({2, 0}, 2);
  CHECK(dict.normalized == std::vector<Ratio>{Ratio(1), Ratio(0)});
  CHECK(dict.probabilistic == std::vector<Ratio>{Ratio(1), Ratio(0)});
}

TEST_CASE("normalize_indices flags all-zero counts instead of failing") {
  const PowerIndexReport r = normalize_indices({0, 0, 0}, 3);
  CHECK(r.all_zero_counts);
  CHECK(r.normalized.empty());
  CHECK(r.probabilistic == std::vector<Ratio>{Ratio(0), Ratio(0), Ratio(0)});
}

TEST_CASE("normalize_indices rejects a length mismatch") {
  check_error(ErrorCode::LengthMismatch, [] { normalize_indices({1, 2}, 3); });
}

TEST_CASE("rationals are canonical and normalized indices sum to one") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.uniform(1, 10);
    const WeightedVotingGame g = random_game(rng, n, 0, 20);
    const CriticalCountVector counts = eta_naive(g);
    const PowerIndexReport r = normalize_indices(counts, n);
    Ratio total(0);
    const Count full = Count(1) << (n - 1);
    for (std::size_t p = 0; p < n; ++p) {
      CHECK(r.raw[p] <= full);  // p is critical only where p is present
      CHECK(r.probabilistic[p] >= 0);
      CHECK(r.probabilistic[p] <= 1);
      total += r.normalized[p];
    }
    CHECK(total == 1);
  }
}

TEST_CASE("count symmetry, monotonicity and zero-weight players") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform(1, 10);
    const WeightedVotingGame g = random_game(rng, n, 0, 8);
    const CriticalCountVector eta = eta_naive(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g.weight(i) == g.weight(j)) CHECK(eta[i] == eta[j]);
        if (g.weight(i) >= g.weight(j)) CHECK(eta[i] >= eta[j]);
      }
      if (g.weight(i) == 0) CHECK(eta[i] == 0);
    }
  }
}

TEST_CASE("scaling the game by a constant preserves counts") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.uniform(1, 9);
    const WeightedVotingGame g = random_game(rng, n, 0, 12);
    const Weight c = rng.uniform(2, 5);
    std::vector<Weight> scaled = g.weights();
    for (Weight& w : scaled) w *= c;
    const WeightedVotingGame gc(c * g.quota(), std::move(scaled));
    CHECK(eta_naive(g) == eta_naive(gc));
  }
}
