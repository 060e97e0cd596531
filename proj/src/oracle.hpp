#pragma once

#include "formal.hpp"

namespace orjuhl {

// Literal expansion of the R-operator compositions. M-symbols are free
// noncommuting generators; rho-derivatives act on the rho-polynomial part and
// on the formal f^{(R)} factor of WithF keys.

struct ExpansionOptions {
  // Extra rho-orders kept beyond what can still reach rho = 0. Nonzero only
  // for pruning-soundness checks.
  unsigned margin = 0;
};

// D_j = -rho d^2/drho^2 + j d/drho.
FormalExpr apply_D(const Rational &j, const FormalExpr &e);

// P_k: multiplication by rho^k.
FormalExpr apply_P(unsigned k, const FormalExpr &e);

struct BudgetedExpr {
  FormalExpr expr;
  // R-applications still to come before rho = 0 evaluation.
  unsigned remaining_ops = 0;
};

// sum_{N <= max_order} (1/(N!)^2) (-rho/2)^N M_{2(N+1)} applied at `slot`.
FormalExpr apply_Mtilde_to_order(const FormalExpr &e, Slot slot, unsigned max_order);

// Mtilde(rho) with pruning: e.remaining_ops counts the R-applications after
// this one, and a term of rho-power q is dropped once q > remaining + margin.
FormalExpr apply_Mtilde(const BudgetedExpr &e, Slot slot, const ExpansionOptions &opts = {});

// R_j = 2 D_j + Mtilde(rho). Throws BudgetExhausted when remaining_ops == 0.
BudgetedExpr apply_R(const Rational &j, const BudgetedExpr &e, Slot slot,
                     const ExpansionOptions &opts = {});

// R_{L+1-2M} ... R_{L-3} R_{L-1}, rightmost factor applied first.
BudgetedExpr compose_D(unsigned M, const Rational &L, const BudgetedExpr &e, Slot slot,
                       const ExpansionOptions &opts = {});
// Same, with no operator applied afterwards.
FormalExpr compose_D(unsigned M, const Rational &L, const FormalExpr &e, Slot slot,
                     const ExpansionOptions &opts = {});

CoeffTable eval_rho0(const FormalExpr &e);

// D_{M,L} o P_N (u) on Plain keys.
CoeffTable oracle_DML_PN(unsigned M, const Rational &L, unsigned N,
                         const ExpansionOptions &opts = {});
// D_{M,L} o P_N (f u) on WithF keys (M-words outside f).
CoeffTable oracle_DML_PN_f(unsigned M, const Rational &L, unsigned N,
                           const ExpansionOptions &opts = {});

// GJMS operator P_{2k} = R_{1-k} ... R_{k-1} (u) |_{rho=0}.
CoeffTable oracle_P2k(unsigned k, const ExpansionOptions &opts = {});

// L_k = n/6 + 2k/3.
Rational ovsienko_redou_L(unsigned k, const Rational &n);
// a_{r,s,t} with r+s+t = k, as integer-offset Gamma ratios at L_k.
Rational coefficient_a(unsigned r, unsigned s, unsigned t, const Rational &Lk);
// b_{r,s} with r+s = k.
Rational coefficient_b(unsigned r, unsigned s, const Rational &ell);

// Curved Ovsienko-Redou operator D_{2k}(u (x) v).
CoeffTable oracle_D2k(unsigned k, const Rational &n, const ExpansionOptions &opts = {});
// Linear analogue D_{2k;I}(u) with the invariant as formal f.
CoeffTable oracle_D2kI(unsigned k, const Rational &ell, const ExpansionOptions &opts = {});

struct BilinearParams {
  unsigned U = 0, V = 0;
  Rational L, Ks, Kd;
  unsigned Ns = 0, Nd = 0;
  ParamPoint point() const;
};

struct LinearParams {
  unsigned U = 0, V = 0;
  Rational L, K;
  unsigned N = 0;
  ParamPoint point() const;
};

// D_{U,V,L,K*,K⋄}(rho^{N*} u (x) rho^{N⋄} v) from its defining triple sum.
CoeffTable oracle_bilinear_general(const BilinearParams &p, const ExpansionOptions &opts = {});
// D_{U,V,L,K;f}(rho^N u) from its defining double sum.
CoeffTable oracle_linear_general(const LinearParams &p, const ExpansionOptions &opts = {});

} // namespace orjuhl
