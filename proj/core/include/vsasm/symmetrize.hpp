#pragma once

#include <map>
#include <vector>

#include "vsasm/check.hpp"
#include "vsasm/division.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/permutation.hpp"

namespace vsasm {

// numerator / prod_{i<j} (z_j - z_i) in numerator.nvars() variables.
template <class C>
struct OverVandermonde {
  LaurentPolynomial<C> numerator;

  int nvars() const { return numerator.nvars(); }
};

// sum_sigma sgn(sigma) * permute(num, sigma). Terms are folded onto strictly
// decreasing exponent vectors first, so each alternant is expanded once.
template <class C>
LaurentPolynomial<C> asym(const LaurentPolynomial<C>& num, int threads = 0);

// Literal sum over all n! permutations in lexicographic blocks with an
// ordered reduction. Slow; kept as an independent reference.
template <class C>
LaurentPolynomial<C> asym_by_permutations(const LaurentPolynomial<C>& num, int threads = 0);

// Sym of the rational function, exactly. The result is symmetric, so only
// its coefficients on weakly decreasing exponents are solved for (from the
// alternant coefficients of the numerator) and then expanded over orbits.
template <class C>
LaurentPolynomial<C> sym_over_vandermonde(const OverVandermonde<C>& f, int threads = 0);

// Same value computed as asym(numerator) divided pair by pair.
template <class C>
LaurentPolynomial<C> sym_over_vandermonde_by_division(const OverVandermonde<C>& f, int threads = 0);

// Terms of Sym f with weakly decreasing exponents, lexicographically
// decreasing.
template <class C>
std::vector<Term<C>> sym_dominant(const OverVandermonde<C>& f);

// Symmetric polynomial from its weakly decreasing terms.
template <class C>
LaurentPolynomial<C> expand_symmetric(int nvars, const std::vector<Term<C>>& dominant, int threads = 0);

// P_{s,t} times the Vandermonde product, in s+t-1 variables.
OverVandermonde<Rational> build_P(int s, int t);
Polynomial build_R(int s, int t, int threads = 0);

enum class InversionMode { kEachVariable, kAllVariables };

// Compares R with R after z_i -> 1/z_i (each i separately, or all at once).
CheckOutcome check_inversion_invariance(const Polynomial& r, InversionMode mode);

// Single-variable inversion check for a symmetric polynomial given by its
// weakly decreasing terms; equivalent to kEachVariable on the expansion.
CheckOutcome check_symmetric_inversion_invariance(int nvars, const std::vector<Term<Rational>>& dominant);

// gamma(z) = z - 2 + 1/z. Expansion R = sum_I c_I prod_j gamma(z_j)^{I_j}.
struct GammaExpansion {
  std::map<std::vector<int>, Rational> coefficients;
  bool all_nonnegative_integers = true;
};

// Throws std::invalid_argument if R is not invariant in some single variable.
GammaExpansion gamma_expand(const Polynomial& r);
Polynomial gamma_recombine(const GammaExpansion& g, int nvars);

extern template LaurentPolynomial<Rational> asym(const LaurentPolynomial<Rational>&, int);
extern template LaurentPolynomial<XPoly> asym(const LaurentPolynomial<XPoly>&, int);
extern template LaurentPolynomial<Rational> asym_by_permutations(const LaurentPolynomial<Rational>&, int);
extern template LaurentPolynomial<XPoly> asym_by_permutations(const LaurentPolynomial<XPoly>&, int);
extern template LaurentPolynomial<Rational> sym_over_vandermonde(const OverVandermonde<Rational>&, int);
extern template LaurentPolynomial<XPoly> sym_over_vandermonde(const OverVandermonde<XPoly>&, int);
extern template LaurentPolynomial<Rational> sym_over_vandermonde_by_division(const OverVandermonde<Rational>&, int);
extern template LaurentPolynomial<XPoly> sym_over_vandermonde_by_division(const OverVandermonde<XPoly>&, int);
extern template std::vector<Term<Rational>> sym_dominant(const OverVandermonde<Rational>&);
extern template std::vector<Term<XPoly>> sym_dominant(const OverVandermonde<XPoly>&);
extern template LaurentPolynomial<Rational> expand_symmetric(int, const std::vector<Term<Rational>>&, int);
extern template LaurentPolynomial<XPoly> expand_symmetric(int, const std::vector<Term<XPoly>>&, int);

}  // namespace vsasm
