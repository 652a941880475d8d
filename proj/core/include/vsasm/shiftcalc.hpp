#pragma once

#include <span>
#include <vector>

#include "vsasm/check.hpp"
#include "vsasm/laurent.hpp"

namespace vsasm {

// Values (c_i, c_{i+1}, ..., c_{-1}) of a constant sequence for an operator of
// order i < 0. Each value is a polynomial in the ambient variables, so both
// integer constants and symbolic ones are allowed.
struct ConstantVector {
  std::vector<Polynomial> values;

  int order() const { return -static_cast<int>(values.size()); }
};

ConstantVector make_constants(int nvars, std::span<const long long> values);

// p with z_var replaced by q. p must not contain negative powers of z_var.
Polynomial substitute(const Polynomial& p, int var, const Polynomial& q);

// E_var^k p.
Polynomial shift(const Polynomial& p, int var, int k);
Polynomial forward_difference(const Polynomial& p, int var, int power = 1);
Polynomial backward_difference(const Polynomial& p, int var, int power = 1);

// Q with Q(x) - Q(x-1) = p(x) in z_var, via the binomial basis.
Polynomial antiderivative(const Polynomial& p, int var);

// sum_{z_var = a}^{b} p with the extended convention for b < a.
Polynomial ext_sum(const Polynomial& p, int var, const Polynomial& a, const Polynomial& b);

enum class OpKind { kE, kDelta, kdelta, kInvDelta, kInvdelta, kV, kW, kWinv, kSwap };

// var2 is the second variable (y) of V_{x,y}, W_{x,y}, Winv_{x,y}, S_{x,y}.
struct OperatorSpec {
  OpKind kind = OpKind::kE;
  int var = 0;
  int var2 = -1;
  int power = 1;
  ConstantVector constants;
};

Polynomial apply_shift(const Polynomial& p, const OperatorSpec& op);
Polynomial apply_inverse(const Polynomial& p, const OperatorSpec& op);
Polynomial apply_vw(const Polynomial& p, const OperatorSpec& op);
Polynomial apply(const Polynomial& p, const OperatorSpec& op);

// ^{c}Delta^i_var and ^{c}delta^i_var with i = constants.order().
Polynomial inverse_Delta(const Polynomial& p, int var, const ConstantVector& constants);
Polynomial inverse_delta(const Polynomial& p, int var, const ConstantVector& constants);

// Delta^i for i >= 0, ^{c}Delta^i for i < 0 (c must then have length -i).
Polynomial Delta_power(const Polynomial& p, int var, int i, const ConstantVector& constants = {});
Polynomial delta_power(const Polynomial& p, int var, int i, const ConstantVector& constants = {});

Polynomial swap_vars(const Polynomial& p, int x, int y);
bool is_antisymmetric(const Polynomial& b);

// prod_{p<q} W_{z_q,z_p} b for antisymmetric b.
Polynomial antisym_seed_to_a(const Polynomial& b);

// (id + E_{k_{i+1}} E_{k_i}^{-1} S) V_{k_i,k_{i+1}} a == 0 for all adjacent pairs.
CheckOutcome verify_shift_antisymmetry(const Polynomial& a);

// Both operator products of the conjecture on a(y_1..y_s, k_2..k_t) and
// a(k_2..k_t, y_1..y_s), compared on the diagonal.
CheckOutcome verify_conjecture_62(int s, int t, const Polynomial& a);

// The four clauses of the right-inverse identities for p in slots x, y, with
// the constant z kept symbolic in slot z (p must not involve z).
CheckOutcome check_right_inverse_identities(const Polynomial& p, int x, int y, int z);

// ^{z}Delta^i_x == E_x^i E_{z_i}^{i+2} ... E_{z_{-1}}^1 ^{z}delta^i_x with the
// constants symbolic in the given slots (z_slots[0] holds z_i).
CheckOutcome check_delta_conversion(const Polynomial& p, int x, std::span<const int> z_slots);

// All variables identified with one variable.
Polynomial restrict_to_diagonal(const Polynomial& p);

// Op(E_{z_1}, ..., E_{z_n}) a for a Laurent polynomial Op.
Polynomial apply_laurent_operator(const Polynomial& op, const Polynomial& a);

// If ASym(Op) == 0 and a is antisymmetric, Op(E) a vanishes on the diagonal.
CheckOutcome verify_laurent_to_op(const Polynomial& op, const Polynomial& a);

}  // namespace vsasm
