#pragma once

#include <vector>

#include "vsasm/rational.hpp"

namespace vsasm {

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);
int rank(Matrix m);

// Basis of the right null space of m (cols columns).
std::vector<std::vector<Rational>> null_space(Matrix m, int cols);

// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); coefficients
// in the monomial basis, lowest first.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace vsasm
