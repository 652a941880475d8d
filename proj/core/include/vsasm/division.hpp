#pragma once

#include <stdexcept>
#include <string>

#include "vsasm/laurent.hpp"

namespace vsasm {

// Raised when an exact division leaves a remainder. `witness` renders a term
// of the remainder that could not be cancelled.
class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(const std::string& what, std::string witness)
      : std::runtime_error(what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// prod_{0 <= i < j < n} (z_j - z_i).
Polynomial vandermonde(int n);

// p / (z_j - z_i) for slots i != j.
template <class C>
LaurentPolynomial<C> divide_by_difference(const LaurentPolynomial<C>& p, int i, int j);

// p / prod_{i<j} (z_j - z_i), one pair at a time in lexicographic pair order.
template <class C>
LaurentPolynomial<C> divide_by_vandermonde(const LaurentPolynomial<C>& p);

// q with q * den == num. Monomial and binomial-difference divisors take the
// fast paths; anything else uses lexicographic leading-term division.
template <class C>
LaurentPolynomial<C> exact_div(const LaurentPolynomial<C>& num, const LaurentPolynomial<C>& den);

extern template LaurentPolynomial<Rational> divide_by_difference(const LaurentPolynomial<Rational>&, int, int);
extern template LaurentPolynomial<XPoly> divide_by_difference(const LaurentPolynomial<XPoly>&, int, int);
extern template LaurentPolynomial<Rational> divide_by_vandermonde(const LaurentPolynomial<Rational>&);
extern template LaurentPolynomial<XPoly> divide_by_vandermonde(const LaurentPolynomial<XPoly>&);
extern template LaurentPolynomial<Rational> exact_div(const LaurentPolynomial<Rational>&,
                                                      const LaurentPolynomial<Rational>&);
extern template LaurentPolynomial<XPoly> exact_div(const LaurentPolynomial<XPoly>&, const LaurentPolynomial<XPoly>&);

}  // namespace vsasm
