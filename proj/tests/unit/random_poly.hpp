#pragma once

#include <random>

#include "vsasm/random.hpp"

namespace vsasm::testing {

inline Polynomial random_poly(std::mt19937_64& rng, int nvars, int terms, int lo, int hi) {
  return random_polynomial(rng, nvars, terms, lo, hi);
}

}  // namespace vsasm::testing
