#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vsasm/laurent.hpp"

namespace vsasm {

// A permutation of {0..n-1}, stored as images: slot i maps to images()[i].
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument if `images` is not a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);
  // Builds from 1-based images, the notation used in reports and the CLI.
  static Permutation from_one_based(const std::vector<int>& images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // The rank-th permutation of {0..n-1} in lexicographic order.
  static Permutation unrank(int n, std::uint64_t rank);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  int sign() const;
  Permutation inverse() const;
  // (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& b) const;
  // Advances to the lexicographic successor; false after the last one.
  bool next();

  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

std::uint64_t factorial(int n);

// p(z_{sigma(1)}, ..., z_{sigma(n)}): the exponent of slot i moves to slot
// sigma(i). With this action permute(permute(a, s), t) == permute(a, t o s).
template <class C>
LaurentPolynomial<C> permute(const LaurentPolynomial<C>& a, const Permutation& sigma) {
  if (sigma.size() != a.nvars()) throw VariableCountMismatch(sigma.size(), a.nvars());
  const int n = a.nvars();
  return a.map_exponents(n, [&](const ExponentVector& e) {
    ExponentVector out;
    for (int i = 0; i < n; ++i) out.set(sigma(i), e[i]);
    return out;
  });
}

}  // namespace vsasm
