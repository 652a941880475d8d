#include "vsasm/random.hpp"

namespace vsasm {

Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int terms, int lo, int hi, int bound) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<Term<Rational>> out;
  for (int k = 0; k < terms; ++k) {
    ExponentVector e;
    for (int i = 0; i < nvars; ++i) e.set(i, exp(rng));
    out.push_back({e, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(nvars, std::move(out));
}

std::mt19937_64 seeded_rng(std::uint64_t base, const std::vector<std::string>& labels) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32)};
  for (const auto& l : labels) {
    words.push_back(0xffffffffu);
    for (unsigned char c : l) words.push_back(c);
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace vsasm
