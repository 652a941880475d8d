#include "vsasm/binomial.hpp"

#include <gmpxx.h>

namespace vsasm {

Rational binom(const Rational& x, long long j) {
  if (j < 0) return Rational(0);
  if (x.is_integer()) {
    mpz_class n = x.numerator();
    if (n >= 0 && n < static_cast<long>(j)) return Rational(0);
    if (n >= 0) {
      mpz_class r;
      mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(j));
      return Rational(r);
    }
    // binom(-m, j) = (-1)^j binom(m + j - 1, j)
    mpz_class m = -n;
    mpz_class top = m + static_cast<long>(j) - 1;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
    if (j % 2 != 0) r = -r;
    return Rational(r);
  }
  Rational acc(1);
  for (long long i = 0; i < j; ++i) {
    acc *= x - Rational(i);
    acc /= Rational(i + 1);
  }
  return acc;
}

}  // namespace vsasm
