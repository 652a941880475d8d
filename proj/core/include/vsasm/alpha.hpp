#pragma once

#include <span>
#include <vector>

#include "vsasm/check.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/xpoly.hpp"

namespace vsasm {

// Largest n for which alpha_polynomial is available (2n-1 variable slots).
inline constexpr int kMaxSymbolicAlpha = 6;

// alpha(n; k_1..k_n) as a polynomial in n variables, from the summation
// operator recursion with extended sums. Cached.
const Polynomial& alpha_polynomial(int n);

// The summation operator applied to A(l_1..l_{n-1}), which lives in slots
// n..2n-2 of a (2n-1)-variable polynomial; the result lives in slots 0..n-1.
Polynomial summation_operator(int n, const Polynomial& a);

Rational alpha_eval(int n, std::span<const long long> k);
Rational alpha_eval(int n, std::initializer_list<long long> k);

// Polynomial in one variable (k_1) of degree <= n-1 agreeing with
// alpha(n; k_1, tail).
Polynomial alpha_poly_first(int n, std::span<const long long> tail);

// prod_{p<q}(id + E_{k_p}E_{k_q} + (X-2)E_{k_p}) det(binom(k_i, j-1+m[j=n])).
XPoly alpha_m_eval(int n, int m, std::span<const long long> k);

// Tensor-grid interpolation (degree <= n-1 per variable) of
// alpha_m_eval(n, 0, .) at X = 1.
Polynomial alpha_by_grid_interpolation(int n);

// alpha(n; k_1..k_n) == (-1)^{n-1} alpha(n; k_2..k_n, k_1-n) and shift
// invariance, as polynomial identities.
CheckOutcome check_alpha_cyclic(int n);
CheckOutcome check_alpha_shift(int n);

// The four parts relating Delta in k_1 and delta in k_n (or the cyclically
// rotated alpha). x holds (x_i..x_{-1}) and is ignored for i >= 0.
CheckOutcome check_lemma_51(int n, int d, int i, std::span<const long long> x);

// Inverse operators on alpha(n) expressed by ordinary differences of
// alpha(n-i) at an inserted block of constants. j is 1-based.
CheckOutcome check_lemma_71(int n, int j, int i, std::span<const long long> x);

// (-1)^i Delta^i_{k_1} alpha at k_1 = bottom_1 + 1 against the left-diagonal
// histogram of bottom, and delta^i_{k_n} at k_n = bottom_n - 1 against the
// right-diagonal one.
CheckOutcome check_diagonal_statistics(std::span<const int> bottom, int i);

}  // namespace vsasm
