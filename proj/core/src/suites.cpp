#include "vsasm/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "vsasm/alpha.hpp"
#include "vsasm/genfun.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/opwords.hpp"
#include "vsasm/parallel.hpp"
#include "vsasm/permutation.hpp"
#include "vsasm/random.hpp"
#include "vsasm/shiftcalc.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {

namespace {

using Entries = std::vector<ReportEntry>;

struct Job {
  std::string id;
  Params params;
  std::function<Entries()> run;
};

using Jobs = std::vector<Job>;

std::string str(long long v) { return std::to_string(v); }

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

ReportEntry entry(const CheckOutcome& c, std::string id = {}, Params p = {}) {
  ReportEntry e = entry_from(c);
  e.check_id = std::move(id);
  e.params = std::move(p);
  return e;
}

ReportEntry finding(std::string actual, std::string witness = {}, std::string id = {}, Params p = {}) {
  ReportEntry e;
  e.check_id = std::move(id);
  e.params = std::move(p);
  e.status = Status::kFinding;
  e.actual = std::move(actual);
  e.witness = std::move(witness);
  return e;
}

Entries one(const CheckOutcome& c) { return {entry(c)}; }

CheckOutcome equal(const Rational& expected, const Rational& actual, std::string witness = {}) {
  if (expected == actual) return CheckOutcome::pass(actual.to_string());
  return CheckOutcome::fail(expected.to_string(), actual.to_string(), std::move(witness));
}

// Runs `samples` instances of a randomized check and folds them into one
// outcome; the first failing sample is the witness.
CheckOutcome sampled(int samples, const std::function<CheckOutcome(int)>& check) {
  for (int k = 0; k < samples; ++k) {
    CheckOutcome c = check(k);
    if (!c.passed) {
      c.witness = "sample " + str(k) + (c.witness.empty() ? "" : ": " + c.witness);
      return c;
    }
  }
  return CheckOutcome::pass(str(samples) + "/" + str(samples) + " instances");
}

Params with_seed(Params p, const SuiteOptions& o, int samples) {
  p["seed"] = std::to_string(o.seed);
  p["samples"] = str(samples);
  return p;
}

std::mt19937_64 rng_for(const SuiteOptions& o, const std::string& id, const Params& p, int sample) {
  std::vector<std::string> labels{id};
  for (const auto& [k, v] : p) labels.push_back(k + "=" + v);
  labels.push_back(str(sample));
  return seeded_rng(o.seed, labels);
}

int or_default(int v, int d) { return v > 0 ? v : d; }

std::vector<int> row(int n, int first, int step) {
  std::vector<int> r;
  for (int i = 0; i < n; ++i) r.push_back(first + step * i);
  return r;
}

// ---------------------------------------------------------------------------

void conjecture_1(Jobs& jobs, const SuiteOptions& o) {
  for (int n = 1; n <= o.max_vars; ++n) {
    for (int s = 0; 2 * s <= n + 1; ++s) {
      const int t = n + 1 - s;
      Params p{{"s", str(s)}, {"t", str(t)}};
      jobs.push_back({"conjecture-1.inversion", p, [s, t, p] {
                        Polynomial r = build_R(s, t, 1);
                        Entries out{entry(check_inversion_invariance(r, InversionMode::kEachVariable))};
                        out.back().actual = str(static_cast<long long>(r.size())) + " terms";
                        try {
                          GammaExpansion g = gamma_expand(r);
                          const bool back = gamma_recombine(g, r.nvars()) == r;
                          out.push_back(entry(back ? CheckOutcome::pass(str(static_cast<long long>(g.coefficients.size())) +
                                                                        " gamma terms")
                                                   : CheckOutcome::fail("recombines to R", "differs"),
                                              "conjecture-1.gamma-expansion", p));
                          std::string witness;
                          if (!g.all_nonnegative_integers) {
                            for (const auto& [idx, c] : g.coefficients) {
                              if (c.sign() < 0 || !c.is_integer()) {
                                witness = "gamma^(" + join(idx) + "): " + c.to_string();
                                break;
                              }
                            }
                          }
                          out.push_back(finding(g.all_nonnegative_integers ? "non-negative integers" : "not all non-negative",
                                                witness, "conjecture-1.gamma-nonnegative", p));
                        } catch (const std::invalid_argument& e) {
                          out.push_back(entry(CheckOutcome::fail("gamma expansion", "none", e.what()),
                                              "conjecture-1.gamma-expansion", p));
                        }
                        return out;
                      }});
    }
  }
  // Outside the conjectured range: recorded, never asserted.
  for (int n = 1; n <= std::min(o.max_vars, 5); ++n) {
    for (int t = 0; 2 * t < n + 1; ++t) {
      const int s = n + 1 - t;
      jobs.push_back({"conjecture-1.s-greater-than-t", {{"s", str(s)}, {"t", str(t)}}, [s, t] {
                        auto c = check_inversion_invariance(build_R(s, t, 1), InversionMode::kEachVariable);
                        return Entries{finding(c.passed ? "invariant" : "not invariant", c.witness)};
                      }});
    }
  }
}

void conjecture_62(Jobs& jobs, const SuiteOptions& o) {
  const int samples = or_default(o.seeds, 10);
  const int cases[][2] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}};
  for (const auto& c : cases) {
    const int s = c[0];
    const int t = c[1];
    const int n = s + t - 1;
    Params p{{"s", str(s)}, {"t", str(t)}};
    jobs.push_back({"conjecture-6.2.alpha", p, [s, t, n] { return one(verify_conjecture_62(s, t, alpha_polynomial(n))); }});
    Params rp = with_seed(p, o, samples);
    jobs.push_back({"conjecture-6.2.random", rp, [s, t, n, rp, samples, o] {
                      std::vector<Polynomial> as;
                      for (int k = 0; k < samples; ++k) {
                        auto rng = rng_for(o, "conjecture-6.2.random", rp, k);
                        Polynomial b;
                        while (b.is_zero()) {
                          Polynomial r = random_polynomial(rng, n, 3, 0, n + 1);
                          b = n == 1 ? r : asym(r, 1);
                        }
                        as.push_back(antisym_seed_to_a(b));
                      }
                      Entries out;
                      out.push_back(entry(sampled(samples, [&](int k) { return verify_shift_antisymmetry(as[k]); }),
                                          "conjecture-6.2.seed-antisymmetry", rp));
                      out.push_back(entry(sampled(samples, [&](int k) { return verify_conjecture_62(s, t, as[k]); })));
                      return out;
                    }});
  }
  for (int n = 2; n <= 3; ++n) {
    Params p = with_seed({{"n", str(n)}}, o, samples);
    jobs.push_back({"conjecture-6.2.laurent-to-op", p, [n, p, samples, o] {
                      return one(sampled(samples, [&](int k) {
                        auto rng = rng_for(o, "conjecture-6.2.laurent-to-op", p, k);
                        Polynomial h = random_polynomial(rng, n, 3, -2, 2);
                        Polynomial op = h + permute(h, Permutation::transposition(n, 0, 1));
                        Polynomial a = asym(random_polynomial(rng, n, 3, 0, 3), 1);
                        return verify_laurent_to_op(op, a);
                      }));
                    }});
  }
}

void les(Jobs& jobs, const SuiteOptions& o) {
  const int max_n = or_default(o.max_n, 10);
  const int brute_n = std::min(max_n, 5);
  const int rank_n = std::min(max_n, 6);
  auto want = [&](Family f) { return !o.family || *o.family == f; };
  auto les_job = [&](const std::string& id, LesSystem sys, int n, ValueSource src, const std::string& src_name) {
    jobs.push_back({id, {{"n", str(n)}, {"source", src_name}}, [sys, n, src] { return one(verify_les(sys, n, src)); }});
  };
  if (want(Family::kA)) {
    for (int n = 1; n <= brute_n; ++n) {
      les_job("les.A14", LesSystem::kA14, n, ValueSource::kBruteForce, "bruteforce");
      les_job("les.A14", LesSystem::kA14, n, ValueSource::kCDNumbers, "cd");
    }
    for (int m = 1; m <= std::min(max_n, 7); ++m) {
      jobs.push_back({"les.dpp-determinant", {{"m", str(m)}},
                      [m] { return one(equal(asm_count(m), dpp_determinant(m - 1))); }});
    }
  }
  if (want(Family::kB)) {
    for (int n = 1; n <= max_n; ++n) {
      les_job("les.B1516", LesSystem::kB1516, n, ValueSource::kFormula, "formula");
      les_job("les.B65", LesSystem::kB65, n, ValueSource::kFormula, "formula");
    }
    for (int n = 1; n <= brute_n; ++n) {
      les_job("les.B1516", LesSystem::kB1516, n, ValueSource::kBruteForce, "bruteforce");
      les_job("les.B65", LesSystem::kB65, n, ValueSource::kBruteForce, "bruteforce");
    }
  }
  const std::pair<LesSystem, std::string> systems[] = {
      {LesSystem::kA14, "A14"}, {LesSystem::kB1516, "B1516"}, {LesSystem::kB65, "B65"}};
  for (const auto& [sys, name] : systems) {
    if (!want(sys == LesSystem::kA14 ? Family::kA : Family::kB)) continue;
    for (int n = 1; n <= rank_n; ++n) {
      Params p{{"n", str(n)}, {"system", name}};
      jobs.push_back({"les.solution-dimension", p, [sys, n] {
                        LesRankReport r = les_rank(n, sys);
                        const std::string got = str(r.solution_dimension);
                        CheckOutcome c = r.solution_dimension == 1
                                             ? CheckOutcome::pass(got)
                                             : CheckOutcome::fail("1", got, "rank " + str(r.rank) + " of " + str(r.unknowns));
                        Entries out{entry(c)};
                        if (sys == LesSystem::kB1516) {
                          out.push_back(entry(equal(Rational(2 * n - 1), Rational(r.eigen_rank)), "les.eigen-rank"));
                        }
                        if (sys == LesSystem::kB65) {
                          out.push_back(finding("corank " + str(r.unknowns - r.rank) + " of " + str(r.unknowns), {},
                                                "les.B65-corank"));
                        }
                        return out;
                      }});
    }
  }
  if (want(Family::kC)) {
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
      for (int d = 1; d <= o.max_d; ++d) {
        Params p{{"d", str(d)}, {"n", str(n)}};
        jobs.push_back({"les.prop31", p, [n, d] { return one(verify_prop31(n, d)); }});
        jobs.push_back({"les.prop52", p, [n, d] { return one(verify_prop52(n, d)); }});
      }
    }
  }
}

void cd(Jobs& jobs, const SuiteOptions& o) {
  for (int n = 1; n <= or_default(o.max_n, 5); ++n) {
    jobs.push_back({"cd.equal", {{"n", str(n)}}, [n] { return one(verify_cd_equal(n)); }});
  }
  for (int i = 0; i <= 20; ++i) {
    jobs.push_back({"cd.hypergeom", {{"i", str(i)}}, [i] {
                      const int top = std::max(4, i + 3);
                      for (int d1 = 4; d1 <= top; ++d1) {
                        CheckOutcome c = hypergeom_63(i, d1);
                        if (!c.passed) {
                          c.witness = "d1 " + str(d1) + (c.witness.empty() ? "" : ": " + c.witness);
                          return one(c);
                        }
                      }
                      return one(CheckOutcome::pass("d1 = 4.." + str(top)));
                    }});
  }
}

void symmetry_c(Jobs& jobs, const SuiteOptions& o) {
  const int max_n = or_default(o.max_n, 5);
  for (int n = 1; n <= max_n; ++n) {
    jobs.push_back({"symmetry-c.d2", {{"n", str(n)}}, [n] { return one(verify_symmetry_c(n, 2)); }});
    jobs.push_back({"symmetry-c.d3", {{"n", str(n)}}, [n] {
                      auto c = verify_symmetry_c(n, 3);
                      return Entries{finding(c.passed ? "symmetric" : "not symmetric", c.witness)};
                    }});
  }
  const int samples = or_default(o.seeds, 25);
  Params p = with_seed({}, o, samples);
  jobs.push_back({"symmetry-c.prop61", p, [p, samples, o] {
                    return one(sampled(samples, [&](int k) {
                      auto rng = rng_for(o, "symmetry-c.prop61", p, k);
                      Polynomial q = random_polynomial(rng, 1, 5, 0, 6);
                      CheckOutcome c = verify_prop61(q, 4);
                      if (!c.passed) c.witness = to_string(q) + (c.witness.empty() ? "" : "; " + c.witness);
                      return c;
                    }));
                  }});
}

void words(Jobs& jobs, const SuiteOptions& o) {
  const int max_len = o.max_word_length;
  const int samples = or_default(o.seeds, 20);
  jobs.push_back({"words.example-pair", {}, [] {
                    return one(check_word_pair(parse_word("PT,PS,QT,PT,QS,QT"), parse_word("PT,PS,PT,QT,QT,QS"), 1));
                  }});
  jobs.push_back({"words.sweep", {{"max_length", str(max_len)}}, [max_len] {
                    WordSweepReport r = sweep_words(max_len, 1);
                    const std::string size = str(r.words) + " words, " + str(r.pairs) + " pairs";
                    Entries out{entry(r.endpoint_invariance, "words.endpoint-invariance"),
                                entry(r.last_letter_invariance, "words.last-letter-invariance"),
                                entry(r.pure_words, "words.pure-words")};
                    for (auto& e : out) {
                      if (e.status == Status::kPass) e.actual = size;
                    }
                    return out;
                  }});
  for (int s = 0; s <= 3; ++s) {
    for (int t = 0; t <= 3; ++t) {
      Params p = with_seed({{"s", str(s)}, {"t", str(t)}}, o, samples);
      const std::uint64_t base = rng_for(o, "words", p, 0)();
      if (s >= 1 && t >= 1) {
        jobs.push_back({"words.commutations", p, [s, t, base, samples] {
                          return one(check_commutations(s, t, base, samples));
                        }});
      }
      if (s + t >= 3) {
        jobs.push_back({"words.sym-recursion", p, [s, t, base, samples] {
                          return one(check_sym_recursion(s, t, base, samples));
                        }});
      }
    }
  }
  // Words that leave the prefix-Dyck region still give Laurent Sym F_w.
  for (int len = 1; len <= std::min(max_len, 3); ++len) {
    const int total = 1 << (2 * len);
    for (int code = 0; code < total; ++code) {
      OperatorWord w;
      for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<WordLetter>((code >> (2 * (len - 1 - k))) & 3));
      if (w.prefix_dyck()) continue;
      jobs.push_back({"words.invalid-word", {{"word", w.to_string()}}, [w] {
                        Polynomial f = sym_of_word(w, 1);
                        return Entries{finding("Laurent, " + str(static_cast<long long>(f.size())) + " terms")};
                      }});
    }
  }
}

void genfun(Jobs& jobs, const SuiteOptions& o) {
  const int max_n = or_default(o.max_n, 5);
  const std::vector<std::vector<long long>> ks{{4}, {0, 2}, {1, 3}, {0, 2, 4}, {1, 2, 3}, {0, 1, 5}};
  for (const auto& k : ks) {
    for (int m = 0; m <= 3; ++m) {
      jobs.push_back({"genfun.prop91", {{"k", join(k)}, {"m", str(m)}},
                      [k, m] { return one(check_prop_91(static_cast<int>(k.size()), k, m)); }});
    }
  }
  const std::vector<std::vector<int>> bottoms{{0, 2}, {0, 2, 4}, {1, 2, 3}};
  for (const auto& b : bottoms) {
    for (int top = b.front(); top <= b.back(); ++top) {
      jobs.push_back({"genfun.cor92", {{"bottom", join(b)}, {"top", str(top)}}, [b, top] { return one(check_cor_92(b, top)); }});
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    for (GenfunKind kind : {GenfunKind::kASM, GenfunKind::kVSASM}) {
      const bool is_asm = kind == GenfunKind::kASM;
      jobs.push_back({"genfun.recursive", {{"kind", is_asm ? "ASM" : "VSASM"}, {"n", str(n)}}, [kind, is_asm, n] {
                        RecursiveGenfun r = build_recursive_genfun(kind, n);
                        Rational expected = asm_count(n);
                        if (!is_asm) {
                          expected = Rational(0);
                          for (int i = 1; i <= n; ++i) expected += b_formula(n, i);
                        }
                        if (!r.agreement.passed) return one(r.agreement);
                        return one(equal(expected, all_ones(r.value)));
                      }});
    }
  }
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    Params p{{"n", str(n)}};
    jobs.push_back({"genfun.t-family.closed-form", p,
                    [n] { return one(t_family_report({Rational(1), Rational(0), Rational(0), Rational(0)}, n).closed_form); }});
    jobs.push_back({"genfun.t-family.example", p,
                    [n] { return one(t_family_check({Rational(1), Rational(1), Rational(1), Rational(0)}, n)); }});
    jobs.push_back({"genfun.top-symmetry", p, [n] { return one(check_top_symmetry(n)); }});
    jobs.push_back({"genfun.s0-relation", p, [n] { return one(check_s0_relation(n)); }});

    const int samples = or_default(o.seeds, 10);
    Params rp = with_seed(p, o, samples);
    jobs.push_back({"genfun.t-family.a-zero", rp, [n, rp, samples, o] {
                      std::vector<TFamilyParams> params;
                      for (int k = 0; k < samples; ++k) {
                        auto rng = rng_for(o, "genfun.t-family.a-zero", rp, k);
                        std::uniform_int_distribution<int> num(-4, 4);
                        std::uniform_int_distribution<int> den(1, 3);
                        auto r = [&] { return Rational(num(rng), den(rng)); };
                        params.push_back({Rational(0), r(), r(), r()});
                      }
                      return one(sampled(samples, [&](int k) { return t_family_report(params[k], n).a_zero; }));
                    }});
    // The general T-family claim is experimental: swept, reported as findings.
    Params fp = with_seed(p, o, samples);
    jobs.push_back({"genfun.t-family.sweep", fp, [n, fp, samples, o] {
                      int invariant = 0;
                      std::string witness;
                      for (int k = 0; k < samples; ++k) {
                        auto rng = rng_for(o, "genfun.t-family.sweep", fp, k);
                        std::uniform_int_distribution<int> num(-3, 3);
                        TFamilyParams tp{Rational(num(rng)), Rational(num(rng)), Rational(num(rng)), Rational(num(rng))};
                        if (tp.a.is_zero()) tp.a = Rational(1);
                        if (t_family_report(tp, n).inversion.passed) {
                          ++invariant;
                        } else if (witness.empty()) {
                          witness = "(" + tp.a.to_string() + "," + tp.b.to_string() + "," + tp.c.to_string() + "," +
                                    tp.d.to_string() + ")";
                        }
                      }
                      return Entries{finding(str(invariant) + "/" + str(samples) + " inversion-invariant", witness)};
                    }});
  }
}

void identities(Jobs& jobs, const SuiteOptions& o) {
  const int samples = or_default(o.seeds, 50);
  jobs.push_back({"identities.mt-count", {{"bottom", "1,2,3"}},
                  [] { return one(equal(Rational(7), Rational(static_cast<long long>(enumerate_mt(row(3, 1, 1)))))); }});
  for (int n = 1; n <= 5; ++n) {
    jobs.push_back({"identities.asm-count", {{"n", str(n)}}, [n] {
                      MTFilter all = [](const MTStatistics&) { return true; };
                      return one(equal(asm_count(n), Rational(static_cast<long long>(enumerate_mt(row(n, 1, 1), all)))));
                    }});
  }
  for (int n = 1; n <= 6; ++n) {
    jobs.push_back({"identities.vsasm-count", {{"n", str(n)}}, [n] {
                      Rational total;
                      for (int i = 1; i <= n; ++i) total += b_formula(n, i);
                      return one(equal(total, Rational(static_cast<long long>(count_mt(row(n, 2, 2))))));
                    }});
  }
  for (int n = 1; n <= 5; ++n) {
    jobs.push_back({"identities.b-bruteforce", {{"n", str(n)}}, [n] {
                      RefinedFamily b = refined_vsasm_bruteforce(n);
                      for (int i = 1; i <= n; ++i) {
                        if (b.at(i) != b_formula(n, i)) return one(equal(b_formula(n, i), b.at(i), "i = " + str(i)));
                      }
                      return one(CheckOutcome::pass(str(n) + " values"));
                    }});
  }
  for (int n = 2; n <= 8; ++n) {
    jobs.push_back({"identities.cross", {{"n", str(n)}, {"source", "formula"}},
                    [n] { return one(verify_cross_identities(n, ValueSource::kFormula)); }});
  }
  for (int n = 2; n <= 5; ++n) {
    jobs.push_back({"identities.cross", {{"n", str(n)}, {"source", "bruteforce"}},
                    [n] { return one(verify_cross_identities(n, ValueSource::kBruteForce)); }});
  }

  Params rp = with_seed({}, o, samples);
  jobs.push_back({"identities.right-inverse", rp, [rp, samples, o] {
                    std::vector<Polynomial> ps;
                    for (int k = 0; k < samples; ++k) {
                      auto rng = rng_for(o, "identities.right-inverse", rp, k);
                      // Slots: x, y, then the symbolic constants.
                      ps.push_back(random_polynomial(rng, 2, 6, 0, 3).with_nvars(5));
                    }
                    Entries out{entry(sampled(samples, [&](int k) { return check_right_inverse_identities(ps[k], 0, 1, 2); }))};
                    out.push_back(entry(sampled(samples,
                                                [&](int k) {
                                                  for (std::vector<int> z : {std::vector<int>{2}, {2, 3}, {2, 3, 4}}) {
                                                    CheckOutcome c = check_delta_conversion(ps[k], 0, z);
                                                    if (!c.passed) return c;
                                                  }
                                                  return CheckOutcome::pass();
                                                }),
                                        "identities.delta-conversion", rp));
                    return out;
                  }});

  auto constants = [](std::mt19937_64& rng, int i) {
    std::uniform_int_distribution<int> v(-6, 8);
    std::vector<long long> x;
    for (int r = 0; r < -i; ++r) x.push_back(v(rng));
    return x;
  };
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (int i = -2; i <= 2; ++i) {
        Params p = with_seed({{"d", str(d)}, {"i", str(i)}, {"n", str(n)}}, o, samples);
        jobs.push_back({"identities.lemma51", p, [n, d, i, p, samples, o, constants] {
                          return one(sampled(samples, [&](int k) {
                            auto rng = rng_for(o, "identities.lemma51", p, k);
                            return check_lemma_51(n, d, i, constants(rng, i));
                          }));
                        }});
      }
    }
    for (int j = 1; j <= n; ++j) {
      for (int i = -2; i <= -1; ++i) {
        Params p = with_seed({{"i", str(i)}, {"j", str(j)}, {"n", str(n)}}, o, samples);
        jobs.push_back({"identities.lemma71", p, [n, j, i, p, samples, o, constants] {
                          return one(sampled(samples, [&](int k) {
                            auto rng = rng_for(o, "identities.lemma71", p, k);
                            return check_lemma_71(n, j, i, constants(rng, i));
                          }));
                        }});
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    jobs.push_back({"identities.alpha-cyclic", {{"n", str(n)}}, [n] { return one(check_alpha_cyclic(n)); }});
    jobs.push_back({"identities.alpha-shift", {{"n", str(n)}}, [n] { return one(check_alpha_shift(n)); }});
  }
  for (const auto& b : {row(3, 1, 1), row(4, 2, 2), std::vector<int>{0, 1, 5, 6, 9}}) {
    for (int i = 0; i <= 3; ++i) {
      jobs.push_back({"identities.diagonal-statistics", {{"bottom", join(b)}, {"i", str(i)}},
                      [b, i] { return one(check_diagonal_statistics(b, i)); }});
    }
  }
}

using SuiteFn = void (*)(Jobs&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"conjecture-1", conjecture_1}, {"conjecture-6.2", conjecture_62}, {"les", les},
      {"cd", cd},                     {"symmetry-c", symmetry_c},        {"words", words},
      {"genfun", genfun},             {"identities", identities}};
  return r;
}

void validate(const SuiteOptions& o) {
  if (o.max_vars < 1 || o.max_vars > 7) throw std::invalid_argument("max-vars must be in 1..7");
  if (o.max_n < 0 || o.max_n > 12) throw std::invalid_argument("n must be in 1..12");
  if (o.max_d < 1 || o.max_d > 6) throw std::invalid_argument("d must be in 1..6");
  if (o.seeds < 0) throw std::invalid_argument("seeds must be positive");
  if (o.max_word_length < 0 || o.max_word_length > 6) throw std::invalid_argument("max-word-length must be in 0..6");
  if (o.family && *o.family != Family::kA && *o.family != Family::kB && *o.family != Family::kC) {
    throw std::invalid_argument("les family must be A, B or C");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
  validate(opts);
  Jobs jobs;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name == suite || name == "all") {
      fn(jobs, opts);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown suite: " + name);

  std::vector<Entries> results(jobs.size());
  parallel_blocks(jobs.size(), opts.threads, [&](std::size_t k) {
    const Job& job = jobs[k];
    const auto start = std::chrono::steady_clock::now();
    Entries out;
    try {
      out = job.run();
    } catch (const std::exception& e) {
      out = {entry(CheckOutcome::fail("completes", "exception", e.what()))};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    for (auto& e : out) {
      if (e.check_id.empty()) e.check_id = job.id;
      if (e.params.empty()) e.params = job.params;
      e.elapsed_ms = opts.timings ? ms : 0;
    }
    results[k] = std::move(out);
  });

  VerificationReport report;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(report.entries));
  report.sort();
  return report;
}

}  // namespace vsasm
