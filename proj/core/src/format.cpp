#include "banzhaf/format.hpp"

#include <cassert>

namespace banzhaf {

std::string rational_string(const mpq_class& value) {
  return value.get_str();
}

std::string decimal_string(const mpq_class& value, int digits) {
  assert(value >= 0 && digits >= 0);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  // round(num * 10^digits / den), half away from zero
  mpz_class scaled = value.get_num() * scale;
  mpz_class quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
              scaled.get_mpz_t(), value.get_den().get_mpz_t());
  if (remainder * 2 >= value.get_den()) ++quotient;

  mpz_class whole = quotient / scale;
  mpz_class frac = quotient % scale;
  std::string out = whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += '.';
    out += f;
  }
  return out;
}

}  // namespace banzhaf
