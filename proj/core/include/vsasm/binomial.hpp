#pragma once

#include "vsasm/rational.hpp"

namespace vsasm {

// binom(x, j) = x(x-1)...(x-j+1)/j! for j >= 0 and 0 for j < 0, for any
// rational x (so negative upper arguments follow the polynomial extension).
Rational binom(const Rational& x, long long j);

inline Rational binom(long long x, long long j) { return binom(Rational(x), j); }

}  // namespace vsasm
