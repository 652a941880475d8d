#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vsasm/check.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {

enum class WordLetter { PS, PT, QS, QT };

std::string letter_name(WordLetter l);

struct OperatorWord {
  std::vector<WordLetter> letters;

  int size() const { return static_cast<int>(letters.size()); }
  int s_count() const;
  int t_count() const;
  // Length of the shortest prefix with more S than T steps, or -1.
  int first_invalid_prefix() const;
  bool prefix_dyck() const { return first_invalid_prefix() < 0; }
  std::string to_string() const;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

// "PT,PS,QT" (whitespace ignored; empty string is the empty word).
OperatorWord parse_word(std::string_view text);

// Numerator g with kernel(z_i; others) = g / prod_{j != i} (z_j - z_i), in n
// variables; the letter's inversions and monomial factors are folded into g.
Polynomial letter_kernel(WordLetter l, int s, int t, int n, int i);

// L_{s,t} applied to f = numerator / Vandermonde in s+t-2 variables; the
// result is over the Vandermonde in s+t-1 variables. s, t >= 0.
Polynomial apply_letter(WordLetter l, int s, int t, const Polynomial& numerator);

OverVandermonde<Rational> build_F(const OperatorWord& w);

// Sym F_w. The numerator is a Laurent polynomial, so the antisymmetrization
// is always divisible by the Vandermonde.
Polynomial sym_of_word(const OperatorWord& w, int threads = 0);

CheckOutcome check_word_pair(const OperatorWord& w1, const OperatorWord& w2, int threads = 0);

// Both clauses of the commutation lemma on `samples` random numerators.
CheckOutcome check_commutations(int s, int t, std::uint64_t seed = 1, int samples = 3);

// Sym L[f] = sum_i kernel(z_i; rest) Sym f(rest) for all four letters, times
// the Vandermonde on both sides.
CheckOutcome check_sym_recursion(int s, int t, const Polynomial& f_numerator);
CheckOutcome check_sym_recursion(int s, int t, std::uint64_t seed = 1, int samples = 3);

std::vector<OperatorWord> valid_words(int length);

// Every valid word up to max_length: pure-P/pure-Q words match P and Q, and
// Sym F_w depends only on the endpoint (and so on the last letter too).
struct WordSweepReport {
  int words = 0;
  int pairs = 0;
  CheckOutcome pure_words;
  CheckOutcome endpoint_invariance;
  CheckOutcome last_letter_invariance;
};

WordSweepReport sweep_words(int max_length, int threads = 0);

}  // namespace vsasm
