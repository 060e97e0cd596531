#include "oracle.hpp"

#include "errors.hpp"
#include "special.hpp"

namespace orjuhl {

namespace {

Rational mtilde_weight(unsigned N) {
  // (1/(N!)^2) (-1/2)^N
  Rational f = factorial(N);
  return power(Rational(-1, 2), N) / (f * f);
}

CoeffTable tagged(CoeffTable t, ParamPoint params) {
  t.params = std::move(params);
  t.provenance = Provenance::Oracle;
  return t;
}

void accumulate(CoeffTable &into, const CoeffTable &part, const Rational &weight) {
  for (const auto &[k, c] : part.entries)
    into.add(k, c * weight);
}

} // namespace

FormalExpr apply_D(const Rational &j, const FormalExpr &e) {
  FormalExpr r;
  for (const auto &[t, c] : e.terms()) {
    const unsigned p = t.rho_power;
    const Rational rp(static_cast<long>(p));
    if (p >= 1)
      r.add_term(p - 1, t.key, c * rp * (j + Rational(1) - rp));
    if (t.key.kind == KeyKind::WithF) {
      BasisKey once = t.key;
      once.f_order += 1;
      r.add_term(p, once, c * (j - Rational(2) * rp));
      BasisKey twice = t.key;
      twice.f_order += 2;
      r.add_term(p + 1, twice, -c);
    }
  }
  return r;
}

FormalExpr apply_P(unsigned k, const FormalExpr &e) {
  FormalExpr r;
  for (const auto &[t, c] : e.terms())
    r.add_term(t.rho_power + k, t.key, c);
  return r;
}

FormalExpr apply_Mtilde_to_order(const FormalExpr &e, Slot slot, unsigned max_order) {
  FormalExpr r;
  for (unsigned N = 0; N <= max_order; ++N)
    r = add(r, apply_P(N, scale(attach_M(e, N, slot), mtilde_weight(N))));
  return r;
}

FormalExpr apply_Mtilde(const BudgetedExpr &e, Slot slot, const ExpansionOptions &opts) {
  const unsigned bound = e.remaining_ops + opts.margin;
  FormalExpr r;
  for (const auto &[t, c] : e.expr.terms()) {
    if (t.rho_power > bound)
      continue;
    FormalExpr single;
    single.add_term(t, c);
    for (unsigned N = 0; t.rho_power + N <= bound; ++N) {
      const FormalExpr attached = attach_M(single, N, slot);
      for (const auto &[mt, mc] : attached.terms())
        r.add_term(mt.rho_power + N, mt.key, mc * mtilde_weight(N));
    }
  }
  return r;
}

BudgetedExpr apply_R(const Rational &j, const BudgetedExpr &e, Slot slot,
                     const ExpansionOptions &opts) {
  if (e.remaining_ops == 0)
    throw BudgetExhausted("apply_R called with no remaining operator budget");
  BudgetedExpr next{{}, e.remaining_ops - 1};
  const unsigned bound = next.remaining_ops + opts.margin;
  FormalExpr d = apply_D(j, e.expr);
  for (const auto &[t, c] : d.terms())
    if (t.rho_power <= bound)
      next.expr.add_term(t, c * Rational(2));
  const FormalExpr mt = apply_Mtilde(BudgetedExpr{e.expr, next.remaining_ops}, slot, opts);
  for (const auto &[t, c] : mt.terms())
    next.expr.add_term(t, c);
  return next;
}

BudgetedExpr compose_D(unsigned M, const Rational &L, const BudgetedExpr &e, Slot slot,
                       const ExpansionOptions &opts) {
  if (e.remaining_ops < M)
    throw BudgetExhausted("composition longer than the remaining operator budget");
  BudgetedExpr cur = e;
  for (unsigned i = 0; i < M; ++i)
    cur = apply_R(L - Rational(static_cast<long>(2 * i + 1)), cur, slot, opts);
  return cur;
}

FormalExpr compose_D(unsigned M, const Rational &L, const FormalExpr &e, Slot slot,
                     const ExpansionOptions &opts) {
  return compose_D(M, L, BudgetedExpr{e, M}, slot, opts).expr;
}

CoeffTable eval_rho0(const FormalExpr &e) {
  CoeffTable t;
  for (const auto &[term, c] : e.terms())
    if (term.rho_power == 0)
      t.add(term.key, c);
  return t;
}

CoeffTable oracle_DML_PN(unsigned M, const Rational &L, unsigned N,
                         const ExpansionOptions &opts) {
  ParamPoint pp;
  pp.set("L", L).set_int("M", M).set_int("N", N);
  FormalExpr start = FormalExpr::unit(KeyKind::Plain, N);
  return tagged(eval_rho0(compose_D(M, L, start, Slot::Inner, opts)), pp);
}

CoeffTable oracle_DML_PN_f(unsigned M, const Rational &L, unsigned N,
                           const ExpansionOptions &opts) {
  ParamPoint pp;
  pp.set("L", L).set_int("M", M).set_int("N", N);
  FormalExpr start = FormalExpr::unit(KeyKind::WithF, N);
  return tagged(eval_rho0(compose_D(M, L, start, Slot::Outer, opts)), pp);
}

CoeffTable oracle_P2k(unsigned k, const ExpansionOptions &opts) {
  if (k == 0)
    throw InvalidArgument("P_2k needs k >= 1");
  ParamPoint pp;
  pp.set_int("k", k);
  FormalExpr start = FormalExpr::unit(KeyKind::Plain);
  auto t = eval_rho0(compose_D(k, Rational(static_cast<long>(k)), start, Slot::Inner, opts));
  return tagged(std::move(t), pp);
}

Rational ovsienko_redou_L(unsigned k, const Rational &n) {
  return n / Rational(6) + Rational(2 * static_cast<long>(k), 3);
}

Rational coefficient_a(unsigned r, unsigned s, unsigned t, const Rational &Lk) {
  const long k = static_cast<long>(r + s + t);
  // Gamma(Lk-r)/Gamma(Lk-k) * Gamma(Lk-s)/Gamma(Lk) * Gamma(Lk-t)/Gamma(Lk)
  return multinomial({r, s, t}) * gamma_ratio(Lk - Rational(k), k - static_cast<long>(r)) *
         gamma_ratio(Lk, -static_cast<long>(s)) * gamma_ratio(Lk, -static_cast<long>(t));
}

Rational coefficient_b(unsigned r, unsigned s, const Rational &ell) {
  return multinomial({r, s}) * gamma_ratio(ell, s) * gamma_ratio(ell, r);
}

CoeffTable oracle_D2k(unsigned k, const Rational &n, const ExpansionOptions &opts) {
  if (k == 0)
    throw InvalidArgument("D_2k needs k >= 1");
  const Rational Lk = ovsienko_redou_L(k, n);
  ParamPoint pp;
  pp.set("n", n).set("L_k", Lk).set_int("k", k);
  CoeffTable total;
  for (unsigned r = 0; r <= k; ++r) {
    for (unsigned s = 0; r + s <= k; ++s) {
      const unsigned t = k - r - s;
      const Rational a = coefficient_a(r, s, t, Lk);
      auto eu = compose_D(s, Lk, BudgetedExpr{FormalExpr::unit(KeyKind::Plain), s + r},
                          Slot::Inner, opts);
      auto ev = compose_D(t, Lk, BudgetedExpr{FormalExpr::unit(KeyKind::Plain), t + r},
                          Slot::Inner, opts);
      BudgetedExpr prod{pair_product(eu.expr, ev.expr), r};
      auto outer = compose_D(r, -Lk + Rational(2 * static_cast<long>(r)), prod, Slot::Outer, opts);
      accumulate(total, eval_rho0(outer.expr), a);
    }
  }
  return tagged(std::move(total), pp);
}

CoeffTable oracle_D2kI(unsigned k, const Rational &ell, const ExpansionOptions &opts) {
  if (k == 0)
    throw InvalidArgument("D_2k;I needs k >= 1");
  ParamPoint pp;
  pp.set("ell", ell).set_int("k", k);
  const long kk = static_cast<long>(k);
  CoeffTable total;
  for (unsigned s = 0; s <= k; ++s) {
    const unsigned r = k - s;
    const Rational b = coefficient_b(r, s, ell);
    auto inner = compose_D(s, Rational(kk) + ell,
                           BudgetedExpr{FormalExpr::unit(KeyKind::Plain), s + r}, Slot::Inner,
                           opts);
    BudgetedExpr withf{inject_f(inner.expr), r};
    auto outer = compose_D(r, Rational(kk) - ell - Rational(2 * static_cast<long>(s)), withf,
                           Slot::Outer, opts);
    accumulate(total, eval_rho0(outer.expr), b);
  }
  return tagged(std::move(total), pp);
}

ParamPoint BilinearParams::point() const {
  ParamPoint pp;
  pp.set("L", L).set("K*", Ks).set("K⋄", Kd);
  pp.set_int("U", U).set_int("V", V).set_int("N*", Ns).set_int("N⋄", Nd);
  return pp;
}

ParamPoint LinearParams::point() const {
  ParamPoint pp;
  pp.set("L", L).set("K", K);
  pp.set_int("U", U).set_int("V", V).set_int("N", N);
  return pp;
}

CoeffTable oracle_bilinear_general(const BilinearParams &p, const ExpansionOptions &opts) {
  const long U = p.U, V = p.V;
  CoeffTable total;
  for (unsigned Ms = 0; Ms <= p.U; ++Ms) {
    for (unsigned Md = 0; Ms + Md <= p.U; ++Md) {
      const unsigned Mp = p.U - Ms - Md;
      // Gamma(U+K*+1)Gamma(U+K⋄+1) / (Gamma(M*+K*+1)Gamma(M⋄+K⋄+1)Gamma(M'+1))
      //   * Gamma(L-M*)Gamma(L-M⋄)Gamma(L+V-M') / (Gamma(L-U)Gamma(L)^2)
      Rational pre = gamma_ratio(p.Ks + Rational(static_cast<long>(Ms) + 1), U - Ms) *
                     gamma_ratio(p.Kd + Rational(static_cast<long>(Md) + 1), U - Md) /
                     factorial(Mp) * gamma_ratio(p.L - Rational(U), U - Ms) *
                     gamma_ratio(p.L, -static_cast<long>(Md)) *
                     gamma_ratio(p.L, V - static_cast<long>(Mp));
      auto eu = compose_D(Ms, p.L - p.Ks,
                          BudgetedExpr{FormalExpr::unit(KeyKind::Plain, p.Ns), Ms + Mp},
                          Slot::Inner, opts);
      auto ev = compose_D(Md, p.L - p.Kd,
                          BudgetedExpr{FormalExpr::unit(KeyKind::Plain, p.Nd), Md + Mp},
                          Slot::Inner, opts);
      BudgetedExpr prod{pair_product(eu.expr, ev.expr), Mp};
      auto outer = compose_D(Mp, -p.L - Rational(V) + Rational(2 * static_cast<long>(Mp)), prod,
                             Slot::Outer, opts);
      accumulate(total, eval_rho0(outer.expr), pre);
    }
  }
  return tagged(std::move(total), p.point());
}

CoeffTable oracle_linear_general(const LinearParams &p, const ExpansionOptions &opts) {
  const long U = p.U, V = p.V;
  CoeffTable total;
  for (unsigned M = 0; M <= p.U; ++M) {
    const unsigned Mp = p.U - M;
    // binom(U+K, M') Gamma(L+M')Gamma(L+V-M') / Gamma(L)^2
    Rational pre = gen_binomial(Rational(U) + p.K, Mp) * gamma_ratio(p.L, Mp) *
                   gamma_ratio(p.L, V - static_cast<long>(Mp));
    auto inner = compose_D(M, p.L - p.K + Rational(U),
                           BudgetedExpr{FormalExpr::unit(KeyKind::Plain, p.N), M + Mp},
                           Slot::Inner, opts);
    BudgetedExpr withf{inject_f(inner.expr), Mp};
    auto outer = compose_D(Mp, -p.L - Rational(V) + Rational(2 * static_cast<long>(Mp)), withf,
                           Slot::Outer, opts);
    accumulate(total, eval_rho0(outer.expr), pre);
  }
  return tagged(std::move(total), p.point());
}

} // namespace orjuhl
