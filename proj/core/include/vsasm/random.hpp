#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vsasm/laurent.hpp"

namespace vsasm {

// Sparse polynomial with `terms` random terms, exponents in [lo, hi] per
// variable and integer coefficients in [-bound, bound] (cancellations allowed).
Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int terms, int lo, int hi, int bound = 4);

// Generator seeded from a base seed and a list of labels, so a randomized
// check draws the same instances whichever worker runs it.
std::mt19937_64 seeded_rng(std::uint64_t base, const std::vector<std::string>& labels);

}  // namespace vsasm
