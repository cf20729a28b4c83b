#include "banzhaf/gf.hpp"

#include <cassert>
#include <deque>
#include <map>
#include <string>
#include <utility>

namespace banzhaf {

SparseGF merge_sorted(const SparseGF& a, const SparseGF& b) {
  SparseGF out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i].power < b.terms[j].power) {
      out.terms.push_back(a.terms[i++]);
    } else if (b.terms[j].power < a.terms[i].power) {
      out.terms.push_back(b.terms[j++]);
    } else {
      out.terms.push_back({a.terms[i].power, a.terms[i].count + b.terms[j].count});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

namespace {

// merge_sorted over two disposable lists; counts are moved, not copied.
std::vector<GFTerm> merge_move(std::vector<GFTerm>&& a,
                               std::vector<GFTerm>&& b) {
  std::vector<GFTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].power < b[j].power) {
      out.push_back(std::move(a[i++]));
    } else if (b[j].power < a[i].power) {
      out.push_back(std::move(b[j++]));
    } else {
      out.push_back(std::move(a[i++]));
      out.back().count += b[j++].count;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

}  // namespace

SparseGF build_gf(std::span<const Weight> weights, TruncationPolicy policy) {
  SparseGF gf;
  gf.terms.push_back({0, 1});  // the empty coalition
  for (Weight w : weights) {
    assert(w >= 0);
    if (w == 0) {
      // (1 + x^0) doubles every coefficient.
      for (GFTerm& t : gf.terms) t.count *= 2;
      continue;
    }
    // Auxiliary list: the current polynomial shifted up by w.
    std::vector<GFTerm> shifted;
    shifted.reserve(gf.terms.size());
    for (const GFTerm& t : gf.terms) {
      const Power p = t.power + w;
      if (policy.drops(p)) break;  // ascending: nothing later survives
      shifted.push_back({p, t.count});
    }
    gf.terms = merge_move(std::move(gf.terms), std::move(shifted));
  }
  return gf;
}

SparseGF multiply_gf(const SparseGF& a, const SparseGF& b,
                     TruncationPolicy policy) {
  std::map<Power, Count> acc;
  for (const GFTerm& ta : a.terms) {
    for (const GFTerm& tb : b.terms) {
      const Power p = ta.power + tb.power;
      if (policy.drops(p)) break;  // b ascending
      acc[p] += ta.count * tb.count;
    }
  }
  SparseGF out;
  out.terms.reserve(acc.size());
  for (auto& [power, count] : acc) out.terms.push_back({power, std::move(count)});
  return out;
}

SparseGF divide_gf(const SparseGF& gf, Weight w, TruncationPolicy policy,
                   ZeroRetention retention) {
  SparseGF out;
  out.terms.reserve(gf.terms.size());

  if (w == 0) {
    // Exact halving: the removed player toggles freely, so counts pair up.
    for (const GFTerm& t : gf.terms) {
      if (policy.drops(t.power)) break;
      if (mpz_odd_p(t.count.get_mpz_t())) {
        throw Error(ErrorCode::NotDivisible,
                    "odd coefficient at power " + std::to_string(t.power) +
                        " while halving");
      }
      Count half = t.count >> 1;
      if (retention == ZeroRetention::retain || half != 0) {
        out.terms.push_back({t.power, std::move(half)});
      }
    }
    return out;
  }

  // Quotient coefficients ascending; each emitted coefficient queues the
  // subtraction it owes w powers higher.
  std::deque<GFTerm> pending;
  for (const GFTerm& t : gf.terms) {
    if (policy.drops(t.power)) break;
    while (!pending.empty() && pending.front().power < t.power) {
      if (pending.front().count != 0) {
        throw Error(ErrorCode::NotDivisible,
                    "pending subtraction at power " +
                        std::to_string(pending.front().power) +
                        " has no matching coefficient");
      }
      pending.pop_front();
    }
    Count c = t.count;
    if (!pending.empty() && pending.front().power == t.power) {
      c -= pending.front().count;
      pending.pop_front();
    }
    if (c < 0) {
      throw Error(ErrorCode::NotDivisible,
                  "coefficient at power " + std::to_string(t.power) +
                      " went negative");
    }
    const Power up = t.power + w;
    if (!policy.drops(up)) pending.push_back({up, c});
    if (retention == ZeroRetention::retain || c != 0) {
      out.terms.push_back({t.power, std::move(c)});
    }
  }
  for (const GFTerm& p : pending) {
    if (p.count != 0 && !policy.drops(p.power)) {
      throw Error(ErrorCode::NotDivisible,
                  "remainder survives at power " + std::to_string(p.power));
    }
  }
  return out;
}

}  // namespace banzhaf
