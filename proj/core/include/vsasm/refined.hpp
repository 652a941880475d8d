#pragma once

#include <map>
#include <string>
#include <vector>

#include "vsasm/check.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/rational.hpp"

namespace vsasm {

enum class Family { kA, kB, kBstar, kC, kD };

std::string family_name(Family f);

struct RefinedFamily {
  Family family = Family::kB;
  int n = 0;
  int d = 0;
  std::map<int, Rational> values;

  const Rational& at(int i) const;
};

// prod_{j=0}^{n-1} (3j+1)!/(n+j)!
Rational asm_count(int n);

Rational b_formula(int n, int i);
Rational bstar_formula(int n, int i);

// x_j = -2j+1 (C) or z_j = (n+2)(d+1)+j-5 (D), j < 0.
long long c_constant(int j);
long long d_constant(int n, int d, int j);

// C^{(d)}_{n,i} or D^{(d)}_{n,i} for i = -n..n-1.
RefinedFamily cd_numbers(int n, int d, Family which);

// MT-based counts: A_{n,i} from bottom (1..n), B_{n,i} from bottom (2,4,..,2n),
// both via the left-most NE-diagonal statistic.
RefinedFamily refined_asm_bruteforce(int n);
RefinedFamily refined_vsasm_bruteforce(int n);

enum class LesSystem { kA14, kB1516, kB65 };
enum class ValueSource { kFormula, kCDNumbers, kBruteForce };

CheckOutcome verify_les(LesSystem system, int n, ValueSource source);

// The LES for C^{(d)}, and the combined C/D system.
CheckOutcome verify_prop31(int n, int d);
CheckOutcome verify_prop52(int n, int d);

struct LesRankReport {
  int unknowns = 0;
  int rank = 0;
  int solution_dimension = 0;
  // rank(binom(4n-i-1, 2n-i-j+1)(-1)^{j+1} - delta) for the B1516 system.
  int eigen_rank = -1;
};

LesRankReport les_rank(int n, LesSystem system);

// det(binom(i+j, j-1) + delta_{ij})_{1 <= i,j <= size}.
Rational dpp_determinant(int size);

CheckOutcome hypergeom_63(int i, int d1);

// c_i with x_j = -2j+1 at y = 3 for a univariate p, i in [-max_i-1, max_i].
std::map<int, Rational> prop61_values(const Polynomial& p, int max_i);
CheckOutcome verify_prop61(const Polynomial& p, int max_i);

CheckOutcome verify_symmetry_c(int n, int d);
CheckOutcome verify_cd_equal(int n);
CheckOutcome verify_cross_identities(int n, ValueSource source);

}  // namespace vsasm
