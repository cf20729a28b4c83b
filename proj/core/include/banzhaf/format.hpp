#pragma once

#include <string>

#include <gmpxx.h>

namespace banzhaf {

/// "3/5", or just "3" when the denominator is 1. Input must be canonical.
std::string rational_string(const mpq_class& value);

/// Fixed-point decimal with `digits` fractional digits, round half up,
/// trailing zeros trimmed: 3/4 -> "0.75", 2/3 @10 -> "0.6666666667".
/// Nonnegative values only.
std::string decimal_string(const mpq_class& value, int digits);

}  // namespace banzhaf
