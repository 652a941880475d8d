#pragma once

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "vsasm/check.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/xpoly.hpp"

namespace vsasm {

// Q = Sym(prod z_i^{k_i} prod_{i<j} (1 + z_i z_j + (X-2) z_i)/(z_j - z_i)).
struct PatternGenFun {
  int n = 0;
  std::vector<long long> k;
  XLaurent Q;
};

PatternGenFun build_Q(int n, std::span<const long long> k);

// Coefficients of Q(1, ..., 1, z) by power of z.
std::map<int, XPoly> last_variable_coefficients(const XLaurent& q);

// Q and the pattern-counting operator agree: sum_s q_s(X) binom(s, m) equals
// alpha_m(n; k).
CheckOutcome check_prop_91(int n, std::span<const long long> k, int m);

// The z^top coefficient of Q(1, ..., 1, z) against the pattern generating
// function of monotone triangles with this bottom row and top entry.
CheckOutcome check_cor_92(std::span<const int> bottom, int top);

enum class GenfunKind { kASM, kVSASM };

struct RecursiveGenfun {
  XLaurent value;
  // Direct symmetrization against the one-variable-removal recursion.
  CheckOutcome agreement;
};

RecursiveGenfun build_recursive_genfun(GenfunKind kind, int n);

// Value at z_1 = ... = z_n = 1 and the given X.
Rational all_ones(const XLaurent& q, const Rational& x = Rational(1));

// T(x,y) = [a(1/x+y)+c][b(x+1/y)+c]/(1-x/y) + ab y/x + d. With b = d = 0 the
// function is c times [a(1/x+y)+c]/(1-x/y), and that normalized form is used.
struct TFamilyParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

// Sym prod_{i<j} T(z_i, z_j).
Polynomial t_family_sym(const TFamilyParams& p, int n);

struct TFamilyReport {
  Polynomial sym;
  CheckOutcome inversion;   // every single z_i -> 1/z_i
  CheckOutcome a_zero;      // constant when a = 0 (pass otherwise)
  CheckOutcome closed_form; // (a,b,c,d) = (1,0,0,0) only (pass otherwise)
};

TFamilyReport t_family_report(const TFamilyParams& p, int n);
CheckOutcome t_family_check(const TFamilyParams& p, int n);

// Q(1..1,z) = z^{2n-2} Q(1..1,1/z) for k_i = 2(i-1), X = 1.
CheckOutcome check_top_symmetry(int n);

// Sym of prod_{i<j} (1/z_i + z_j - 1)/(1 - z_i/z_j) equals
// prod z_i^{1-n} Q(z) with k_i = 2(i-1), X = 1.
CheckOutcome check_s0_relation(int n);

// (t, k, coefficient of z^t X^k in Q(1..1,z)), sorted.
std::vector<std::tuple<int, int, Rational>> q_table(int n, std::span<const long long> k);

}  // namespace vsasm
