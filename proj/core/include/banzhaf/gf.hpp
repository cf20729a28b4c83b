#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "banzhaf/errors.hpp"
#include "banzhaf/game.hpp"

namespace banzhaf {

using Power = std::int64_t;

struct GFTerm {
  Power power;
  Count count;

  bool operator==(const GFTerm&) const = default;
};

/// Sparse polynomial with nonnegative integer coefficients: term (k, a_k)
/// means a_k coalitions have weight sum k. Powers strictly ascending.
/// Coefficients are positive except in zero-retention division output.
struct SparseGF {
  std::vector<GFTerm> terms;

  bool operator==(const SparseGF&) const = default;

  Count total_count() const {
    Count t = 0;
    for (const GFTerm& term : terms) t += term.count;
    return t;
  }
};

/// When cap is set, terms with power >= cap are dropped during construction
/// and division. Callers cap at the game quota: no coalition weighing q or
/// more can sit inside a criticality window ending at q-1.
struct TruncationPolicy {
  std::optional<Power> cap;

  static TruncationPolicy none() { return {}; }
  static TruncationPolicy at(Power cap) { return {cap}; }

  bool drops(Power power) const { return cap && power >= *cap; }
};

/// Whether division keeps explicit zero coefficients. Retaining them makes
/// every per-player quotient share the input's power sequence, which lets
/// the partitioned solver reuse window tables and prefix sums.
enum class ZeroRetention { prune, retain };

/// Product of (1 + x^w) over the weights, built factor by factor with a
/// shifted-copy merge. Empty input gives the empty product [(0,1)].
SparseGF build_gf(std::span<const Weight> weights, TruncationPolicy policy);

/// Polynomial sum: union of powers, counts added where powers coincide.
SparseGF merge_sorted(const SparseGF& a, const SparseGF& b);

/// Polynomial product. Quadratic; meant for round-trip checks, not solving.
SparseGF multiply_gf(const SparseGF& a, const SparseGF& b,
                     TruncationPolicy policy);

/// Removes the factor (1 + x^w): the quotient counts coalitions that
/// exclude one player of weight w. Input must be exactly divisible, which
/// holds whenever it was built from a weight vector containing w; corrupted
/// input raises NotDivisible. w = 0 means the factor is (1 + x^0) = 2, so
/// every count is halved instead. Input is never mutated.
SparseGF divide_gf(const SparseGF& gf, Weight w, TruncationPolicy policy,
                   ZeroRetention retention = ZeroRetention::prune);

}  // namespace banzhaf
