#include "vsasm/opwords.hpp"

#include <array>
#include <map>
#include <random>
#include <stdexcept>

#include "vsasm/parallel.hpp"

namespace vsasm {

namespace {

bool is_s(WordLetter l) { return l == WordLetter::PS || l == WordLetter::QS; }
bool is_q(WordLetter l) { return l == WordLetter::QS || l == WordLetter::QT; }

// Slot of the distinguished variable when the letter is applied.
int distinguished(WordLetter l, int n) { return l == WordLetter::PS || l == WordLetter::QT ? 0 : n - 1; }

Polynomial var(int n, int i, int p = 1) { return Polynomial::variable(n, i, p); }

Polynomial random_numerator(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term<Rational>> terms;
  for (int k = 0; k < 4; ++k) {
    ExponentVector e;
    for (int i = 0; i < nvars; ++i) e.set(i, exp(rng));
    int c = coeff(rng);
    terms.push_back({e, Rational(c == 0 ? 1 : c)});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

// f(rest) with variable i of n removed.
Polynomial embed_without(const Polynomial& f, int n, int i) {
  std::vector<VarTarget> targets;
  for (int k = 0; k < f.nvars(); ++k) targets.push_back(VarTarget::to_slot(k < i ? k : k + 1));
  return remap(f, n, std::span<const VarTarget>(targets));
}

Polynomial vandermonde_without(int n, int i) {
  return embed_without(vandermonde(n - 1), n, i);
}

CheckOutcome mismatch(const std::string& what, const Polynomial& a, const Polynomial& b) {
  Polynomial d = a - b;
  const auto& t = d.terms().front();
  return CheckOutcome::fail(what, "differs", to_string(Polynomial::monomial(d.nvars(), t.exp, t.coeff)));
}

// Q_{s,t} numerator over the Vandermonde: P reversed and inverted.
Polynomial q_numerator(int s, int t) {
  Polynomial p = build_P(s, t).numerator;
  const int n = p.nvars();
  std::vector<VarTarget> targets;
  for (int k = 0; k < n; ++k) targets.push_back(VarTarget::to_slot(n - 1 - k));
  ExponentVector mono;
  for (int k = 0; k < n; ++k) mono.set(k, n - 1);
  return invert_all_vars(remap(p, n, std::span<const VarTarget>(targets))).shifted(mono);
}

// One representative per alternant: exponents sorted strictly decreasing,
// signed by the sorting permutation. asym() of the result is unchanged.
Polynomial fold_alternants(const Polynomial& p) {
  const int n = p.nvars();
  std::vector<Term<Rational>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::array<int, kMaxVars> v{};
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = t.exp[i];
    bool odd = false;
    bool repeated = false;
    for (int i = 1; i < n && !repeated; ++i) {
      for (int j = i; j > 0; --j) {
        auto& a = v[static_cast<std::size_t>(j - 1)];
        auto& b = v[static_cast<std::size_t>(j)];
        if (a > b) break;
        if (a == b) {
          repeated = true;
          break;
        }
        std::swap(a, b);
        odd = !odd;
      }
    }
    if (repeated) continue;
    ExponentVector e;
    for (int i = 0; i < n; ++i) e.set(i, v[static_cast<std::size_t>(i)]);
    out.push_back({e, odd ? -t.coeff : t.coeff});
  }
  return Polynomial::from_terms(n, std::move(out));
}

}  // namespace

std::string letter_name(WordLetter l) {
  switch (l) {
    case WordLetter::PS: return "PS";
    case WordLetter::PT: return "PT";
    case WordLetter::QS: return "QS";
    case WordLetter::QT: return "QT";
  }
  return "?";
}

int OperatorWord::s_count() const {
  int c = 0;
  for (auto l : letters) c += is_s(l) ? 1 : 0;
  return c;
}

int OperatorWord::t_count() const { return size() - s_count(); }

int OperatorWord::first_invalid_prefix() const {
  int s = 0;
  int t = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    (is_s(letters[k]) ? s : t) += 1;
    if (s > t) return static_cast<int>(k) + 1;
  }
  return -1;
}

std::string OperatorWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) out += (k ? "," : "") + letter_name(letters[k]);
  return out.empty() ? "()" : out;
}

OperatorWord parse_word(std::string_view text) {
  OperatorWord w;
  std::string tok;
  auto flush = [&](bool last) {
    if (tok.empty()) {
      if (last && w.letters.empty()) return;
      throw std::invalid_argument("empty letter in word '" + std::string(text) + "'");
    }
    if (tok == "PS") w.letters.push_back(WordLetter::PS);
    else if (tok == "PT") w.letters.push_back(WordLetter::PT);
    else if (tok == "QS") w.letters.push_back(WordLetter::QS);
    else if (tok == "QT") w.letters.push_back(WordLetter::QT);
    else throw std::invalid_argument("unknown letter '" + tok + "'");
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == ',') {
      flush(false);
    } else {
      tok += ch;
    }
  }
  flush(true);
  return w;
}

Polynomial letter_kernel(WordLetter l, int s, int t, int n, int i) {
  if (s < 0 || t < 0) throw std::invalid_argument("letter_kernel: negative parameter");
  if (n != s + t - 1) throw std::invalid_argument("letter_kernel: expects s+t-1 variables");
  if (i < 0 || i >= n) throw std::out_of_range("letter_kernel: distinguished slot out of range");
  const Polynomial one = Polynomial::one(n);
  const Polynomial z = var(n, i);
  const Polynomial zinv = var(n, i, -1);
  const Rational sign((n - 1) % 2 == 0 ? 1 : -1);
  Polynomial g(n);
  switch (l) {
    case WordLetter::PS:
      g = var(n, i, 2 * s - t - 1);
      for (int j = 0; j < n; ++j) {
        if (j != i) g *= (one - z + var(n, j) * z) * (one - var(n, j, -1));
      }
      break;
    case WordLetter::PT:
      g = (one - zinv).pow(s) * var(n, i, t - 2) * sign;
      for (int j = 0; j < n; ++j) {
        if (j != i) g *= (one - var(n, j) + var(n, j) * z) * var(n, j, -1);
      }
      break;
    case WordLetter::QS:
      g = var(n, i, -(2 * s - t - 1)) * sign;
      for (int j = 0; j < n; ++j) {
        if (j != i) g *= (one - zinv + var(n, j, -1) * zinv) * (one - var(n, j)) * z * var(n, j);
      }
      break;
    case WordLetter::QT:
      g = (one - z).pow(s) * var(n, i, 2 - t);
      for (int j = 0; j < n; ++j) {
        if (j != i) g *= (one - var(n, j, -1) + var(n, j, -1) * zinv) * z * var(n, j, 2);
      }
      break;
  }
  return g;
}

Polynomial apply_letter(WordLetter l, int s, int t, const Polynomial& numerator) {
  const int n = s + t - 1;
  if (numerator.nvars() != n - 1) throw VariableCountMismatch(numerator.nvars(), n - 1);
  const int d = distinguished(l, n);
  Polynomial out = letter_kernel(l, s, t, n, d) * embed_without(numerator, n, d);
  if (d % 2 != 0) out = -out;
  return out;
}

OverVandermonde<Rational> build_F(const OperatorWord& w) {
  if (w.size() + 1 > kMaxVars) throw std::invalid_argument("build_F: word too long");
  Polynomial num = Polynomial::one(1);
  int s = 0;
  int t = 0;
  for (auto l : w.letters) {
    (is_s(l) ? s : t) += 1;
    num = apply_letter(l, s + 1, t + 1, num);
  }
  return {num};
}

// Each kernel is symmetric in the old variables, so only the alternant part
// of the running numerator matters; folding keeps it small.
Polynomial sym_of_word(const OperatorWord& w, int threads) {
  if (w.size() + 1 > kMaxVars) throw std::invalid_argument("sym_of_word: word too long");
  Polynomial num = Polynomial::one(1);
  int s = 0;
  int t = 0;
  for (auto l : w.letters) {
    (is_s(l) ? s : t) += 1;
    num = fold_alternants(apply_letter(l, s + 1, t + 1, num));
  }
  return sym_over_vandermonde(OverVandermonde<Rational>{num}, threads);
}

CheckOutcome check_word_pair(const OperatorWord& w1, const OperatorWord& w2, int threads) {
  for (const auto* w : {&w1, &w2}) {
    int k = w->first_invalid_prefix();
    if (k >= 0) {
      OperatorWord prefix{{w->letters.begin(), w->letters.begin() + k}};
      throw std::invalid_argument("word " + w->to_string() + " has prefix " + prefix.to_string() +
                                  " with more S than T steps");
    }
  }
  if (w1.s_count() != w2.s_count() || w1.t_count() != w2.t_count()) {
    throw std::invalid_argument("words " + w1.to_string() + " and " + w2.to_string() + " end at different points");
  }
  Polynomial a = sym_of_word(w1, threads);
  Polynomial b = sym_of_word(w2, threads);
  if (a == b) return CheckOutcome::pass(w1.to_string() + " ~ " + w2.to_string());
  auto c = mismatch("Sym F equal", a, b);
  c.detail = w1.to_string() + " vs " + w2.to_string();
  return c;
}

CheckOutcome check_commutations(int s, int t, std::uint64_t seed, int samples) {
  if (s < 1 || t < 1) throw std::invalid_argument("check_commutations: needs s, t >= 1");
  const int m = s + t - 3;
  if (m < 0) return CheckOutcome::pass("vacuous: no functions in " + std::to_string(m) + " variables");
  std::mt19937_64 rng(seed);
  std::string detail;
  for (int k = 0; k < samples; ++k) {
    Polynomial f = random_numerator(rng, m);
    // Clause 1 for P and Q; index s-1 = 0 is read formally.
    for (bool q : {false, true}) {
      WordLetter ls = q ? WordLetter::QS : WordLetter::PS;
      WordLetter lt = q ? WordLetter::QT : WordLetter::PT;
      Polynomial lhs = apply_letter(ls, s, t, apply_letter(lt, s - 1, t, f));
      Polynomial rhs = apply_letter(lt, s, t, apply_letter(ls, s, t - 1, f));
      if (lhs != rhs) {
        auto c = mismatch(q ? "QS QT = QT QS" : "PS PT = PT PS", lhs, rhs);
        c.detail = "f = " + to_string(f);
        return c;
      }
    }
    if (t >= 2) {
      Polynomial lhs = apply_letter(WordLetter::PT, s, t, apply_letter(WordLetter::QT, s, t - 1, f));
      Polynomial rhs = apply_letter(WordLetter::QT, s, t, apply_letter(WordLetter::PT, s, t - 1, f));
      if (lhs != rhs) {
        auto c = mismatch("PT QT = QT PT", lhs, rhs);
        c.detail = "f = " + to_string(f);
        return c;
      }
    }
  }
  if (s == 1) detail = "first clause uses s-1 = 0 formally";
  if (t < 2) detail += std::string(detail.empty() ? "" : "; ") + "second clause needs t >= 2";
  return CheckOutcome::pass(detail);
}

CheckOutcome check_sym_recursion(int s, int t, const Polynomial& f_numerator) {
  const int n = s + t - 1;
  if (s < 0 || t < 0 || n - 1 < 1) throw std::invalid_argument("check_sym_recursion: needs s+t-2 >= 1");
  if (f_numerator.nvars() != n - 1) throw VariableCountMismatch(f_numerator.nvars(), n - 1);
  const Polynomial sym_f = sym_over_vandermonde(OverVandermonde<Rational>{f_numerator});
  const Polynomial v = vandermonde(n);
  for (auto l : {WordLetter::PS, WordLetter::PT, WordLetter::QS, WordLetter::QT}) {
    Polynomial lhs = sym_over_vandermonde(OverVandermonde<Rational>{apply_letter(l, s, t, f_numerator)}) * v;
    Polynomial rhs(n);
    for (int i = 0; i < n; ++i) {
      Polynomial term = letter_kernel(l, s, t, n, i) * vandermonde_without(n, i) * embed_without(sym_f, n, i);
      if (i % 2 == 0) {
        rhs += term;
      } else {
        rhs -= term;
      }
    }
    if (lhs != rhs) {
      auto c = mismatch("Sym " + letter_name(l) + "[f] expansion", lhs, rhs);
      c.detail = "f numerator = " + to_string(f_numerator);
      return c;
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_sym_recursion(int s, int t, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    auto c = check_sym_recursion(s, t, random_numerator(rng, s + t - 2));
    if (!c.passed) return c;
  }
  return CheckOutcome::pass();
}

std::vector<OperatorWord> valid_words(int length) {
  std::vector<OperatorWord> out;
  OperatorWord w;
  auto rec = [&](auto&& self, int s, int t) -> void {
    if (w.size() == length) {
      out.push_back(w);
      return;
    }
    for (auto l : {WordLetter::PS, WordLetter::PT, WordLetter::QS, WordLetter::QT}) {
      int s2 = s + (is_s(l) ? 1 : 0);
      int t2 = t + (is_s(l) ? 0 : 1);
      if (s2 > t2) continue;
      w.letters.push_back(l);
      self(self, s2, t2);
      w.letters.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

WordSweepReport sweep_words(int max_length, int threads) {
  WordSweepReport r;
  std::vector<OperatorWord> words;
  for (int len = 0; len <= max_length; ++len) {
    for (auto& w : valid_words(len)) words.push_back(std::move(w));
  }
  r.words = static_cast<int>(words.size());
  std::vector<Polynomial> syms(words.size());
  std::vector<std::string> pure(words.size());
  parallel_blocks(words.size(), threads, [&](std::size_t k) {
    const auto& w = words[k];
    syms[k] = sym_of_word(w, 1);
    bool all_p = true;
    bool all_q = true;
    for (auto l : w.letters) (is_q(l) ? all_p : all_q) = false;
    const int s = w.s_count() + 1;
    const int t = w.t_count() + 1;
    if (w.size() > 4 || !(all_p || all_q)) return;
    auto f = build_F(w);
    if (all_p && f.numerator != build_P(s, t).numerator) pure[k] = w.to_string() + " differs from P";
    if (all_q && f.numerator != q_numerator(s, t)) pure[k] = w.to_string() + " differs from Q";
  });
  for (const auto& p : pure) {
    if (!p.empty()) {
      r.pure_words = CheckOutcome::fail("pure words match P and Q", "differs", p);
      break;
    }
  }
  std::map<std::pair<int, int>, std::size_t> by_end;
  std::map<std::tuple<int, int, int>, std::size_t> by_last;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& w = words[k];
    auto end = std::make_pair(w.s_count(), w.t_count());
    auto [it, fresh] = by_end.emplace(end, k);
    if (!fresh) {
      ++r.pairs;
      if (r.endpoint_invariance.passed && syms[k] != syms[it->second]) {
        r.endpoint_invariance = mismatch("Sym F depends only on the endpoint", syms[k], syms[it->second]);
        r.endpoint_invariance.detail = w.to_string() + " vs " + words[it->second].to_string();
      }
    }
    if (w.size() == 0) continue;
    auto key = std::make_tuple(end.first, end.second, static_cast<int>(w.letters.back()));
    auto [jt, fresh2] = by_last.emplace(key, k);
    if (!fresh2 && r.last_letter_invariance.passed && syms[k] != syms[jt->second]) {
      r.last_letter_invariance = mismatch("Sym F depends only on endpoint and last letter", syms[k], syms[jt->second]);
      r.last_letter_invariance.detail = w.to_string() + " vs " + words[jt->second].to_string();
    }
  }
  return r;
}

}  // namespace vsasm
