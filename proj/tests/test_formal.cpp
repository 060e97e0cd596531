#include <gtest/gtest.h>

#include "errors.hpp"
#include "formal.hpp"
#include "naive_expansion.hpp"
#include "oracle.hpp"

using namespace orjuhl;

namespace {

FormalExpr single(unsigned p, const BasisKey &k, const Rational &c) {
  FormalExpr e;
  e.add_term(p, k, c);
  return e;
}

const BasisKey kU = BasisKey::plain({});

CoeffTable naive_table(unsigned M, const Rational &L, unsigned N, bool with_f) {
  CoeffTable t;
  for (const auto &[s, c] : naive::compose(M, L, N, with_f)) {
    MWord w(s.word);
    t.add(with_f ? BasisKey::with_f(w, unsigned(s.r), {}) : BasisKey::plain(w), c);
  }
  return t;
}

} // namespace

TEST(MWord, DegreeAndReversal) {
  MWord w{0, 2, 1};
  EXPECT_EQ(w.degree(), 6u);
  EXPECT_EQ(w.reversed(), (MWord{1, 2, 0}));
  EXPECT_EQ(MWord{}.degree(), 0u);
  w.push_outer(3);
  EXPECT_EQ(w[3], 3u);
}

TEST(BasisKey, Degree) {
  EXPECT_EQ(BasisKey::with_f({1}, 2, {0}).degree(), 5u);
  EXPECT_EQ(BasisKey::pair({0}, {1}, {0, 0}).degree(), 5u);
  EXPECT_LT(BasisKey::plain({0}), BasisKey::plain({1}));
}

TEST(FormalExpr, Add) {
  FormalExpr e = single(0, BasisKey::plain({0}), Rational(1));
  e.add_term(3, BasisKey::plain({2, 1}), Rational(-4, 5));
  EXPECT_EQ(add(e, FormalExpr{}), e);
  EXPECT_TRUE(add(e, scale(e, Rational(-1))).empty());
  EXPECT_EQ(add(single(0, BasisKey::plain({0}), Rational(1)),
                single(0, BasisKey::plain({0}), Rational(2))),
            single(0, BasisKey::plain({0}), Rational(3)));
  EXPECT_EQ(e.max_rho_power(), 3u);
  EXPECT_THROW(add(e, FormalExpr::unit(KeyKind::Pair)), VariantMismatch);
}

TEST(FormalExpr, Scale) {
  FormalExpr e = single(1, BasisKey::plain({2}), Rational(1, 2));
  EXPECT_EQ(scale(e, Rational(1)), e);
  EXPECT_TRUE(scale(e, Rational(0)).empty());
  EXPECT_EQ(scale(e, Rational(-2)), single(1, BasisKey::plain({2}), Rational(-1)));
}

TEST(FormalExpr, AttachM) {
  EXPECT_EQ(attach_M(single(0, BasisKey::plain({0}), Rational(1)), 1, Slot::Inner),
            single(0, BasisKey::plain({0, 1}), Rational(1)));
  EXPECT_EQ(attach_M(FormalExpr::unit(KeyKind::Pair), 0, Slot::Outer),
            single(0, BasisKey::pair({0}, {}, {}), Rational(1)));
  EXPECT_EQ(attach_M(FormalExpr::unit(KeyKind::Pair), 2, Slot::Right),
            single(0, BasisKey::pair({}, {}, {2}), Rational(1)));
  EXPECT_TRUE(attach_M(FormalExpr{}, 3, Slot::Inner).empty());
  EXPECT_THROW(attach_M(FormalExpr::unit(), 0, Slot::Left), InvalidArgument);
}

TEST(FormalExpr, PairProduct) {
  EXPECT_EQ(pair_product(FormalExpr::unit(), FormalExpr::unit()),
            single(0, BasisKey::pair({}, {}, {}), Rational(1)));
  EXPECT_EQ(pair_product(single(1, BasisKey::plain({0}), Rational(-1, 2)), FormalExpr::unit()),
            single(1, BasisKey::pair({}, {0}, {}), Rational(-1, 2)));
  auto prod = pair_product(FormalExpr::unit(KeyKind::Plain, 2), FormalExpr::unit(KeyKind::Plain, 3));
  EXPECT_EQ(prod.terms().begin()->first.rho_power, 5u);
  EXPECT_THROW(pair_product(prod, FormalExpr::unit()), VariantMismatch);
}

TEST(FormalExpr, InjectF) {
  EXPECT_EQ(inject_f(FormalExpr::unit()), single(0, BasisKey::with_f({}, 0, {}), Rational(1)));
  EXPECT_EQ(inject_f(single(2, BasisKey::plain({1}), Rational(3, 7))),
            single(2, BasisKey::with_f({}, 0, {1}), Rational(3, 7)));
  EXPECT_TRUE(inject_f(FormalExpr{}).empty());
}

TEST(Operators, ApplyD) {
  EXPECT_EQ(apply_D(Rational(2), FormalExpr::unit(KeyKind::Plain, 1)),
            single(0, kU, Rational(2)));
  EXPECT_TRUE(apply_D(Rational(5, 3), FormalExpr::unit()).empty());
  const Rational ell(7, 4);
  FormalExpr expect = single(0, BasisKey::with_f({}, 1, {}), ell);
  expect.add_term(1, BasisKey::with_f({}, 2, {}), Rational(-1));
  EXPECT_EQ(apply_D(ell, FormalExpr::unit(KeyKind::WithF)), expect);
  // rho^n -> n (j + 1 - n) rho^{n-1}
  EXPECT_EQ(apply_D(Rational(6), FormalExpr::unit(KeyKind::Plain, 3)),
            single(2, kU, Rational(12)));
}

TEST(Operators, ApplyP) {
  FormalExpr e = single(1, BasisKey::plain({4}), Rational(9));
  EXPECT_EQ(apply_P(0, e), e);
  EXPECT_EQ(apply_P(2, e), single(3, BasisKey::plain({4}), Rational(9)));
  EXPECT_TRUE(apply_P(1, FormalExpr{}).empty());
}

TEST(Operators, Mtilde) {
  EXPECT_EQ(apply_Mtilde(BudgetedExpr{FormalExpr::unit(), 0}, Slot::Inner),
            single(0, BasisKey::plain({0}), Rational(1)));
  FormalExpr order1 = single(0, BasisKey::plain({0}), Rational(1));
  order1.add_term(1, BasisKey::plain({1}), Rational(-1, 2));
  EXPECT_EQ(apply_Mtilde_to_order(FormalExpr::unit(), Slot::Inner, 1), order1);
  auto order2 = apply_Mtilde_to_order(FormalExpr::unit(), Slot::Inner, 2);
  EXPECT_EQ(order2.coefficient(2, BasisKey::plain({2})), Rational(1, 16));
  EXPECT_EQ(apply_Mtilde(BudgetedExpr{FormalExpr::unit(), 1}, Slot::Inner), order1);
}

TEST(Operators, ApplyR) {
  const Rational L(17, 3);
  auto r = apply_R(L - Rational(1), BudgetedExpr{FormalExpr::unit(), 2}, Slot::Inner);
  FormalExpr expect = single(0, BasisKey::plain({0}), Rational(1));
  expect.add_term(1, BasisKey::plain({1}), Rational(-1, 2));
  EXPECT_EQ(r.expr, expect);
  EXPECT_EQ(r.remaining_ops, 1u);
  const Rational j(-5, 2);
  auto rho = apply_R(j, BudgetedExpr{FormalExpr::unit(KeyKind::Plain, 1), 1}, Slot::Inner);
  EXPECT_EQ(eval_rho0(rho.expr).coefficient(kU), Rational(2) * j);
  EXPECT_EQ(eval_rho0(rho.expr).size(), 1u);
  EXPECT_THROW(apply_R(j, BudgetedExpr{FormalExpr::unit(), 0}, Slot::Inner), BudgetExhausted);
}

TEST(Operators, ComposeD) {
  const Rational L(11, 2);
  FormalExpr e = single(2, BasisKey::plain({1}), Rational(3));
  EXPECT_EQ(compose_D(0, L, e, Slot::Inner), e);
  EXPECT_EQ(compose_D(1, L, FormalExpr::unit(), Slot::Inner),
            single(0, BasisKey::plain({0}), Rational(1)));
  CoeffTable two = eval_rho0(compose_D(2, L, FormalExpr::unit(), Slot::Inner));
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(two.coefficient(BasisKey::plain({0, 0})), Rational(1));
  EXPECT_EQ(two.coefficient(BasisKey::plain({1})), -(L - Rational(3)));
  EXPECT_THROW(compose_D(3, L, BudgetedExpr{FormalExpr::unit(), 2}, Slot::Inner), BudgetExhausted);
}

TEST(Operators, EvalRho0) {
  FormalExpr e = single(0, BasisKey::plain({1}), Rational(2));
  e.add_term(1, BasisKey::plain({0}), Rational(5));
  CoeffTable t = eval_rho0(e);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.coefficient(BasisKey::plain({1})), Rational(2));
  EXPECT_TRUE(eval_rho0(FormalExpr{}).empty());
}

TEST(Oracle, GjmsSmallTables) {
  CoeffTable p2 = oracle_P2k(1);
  EXPECT_EQ(p2.size(), 1u);
  EXPECT_EQ(p2.coefficient(BasisKey::plain({0})), Rational(1));
  CoeffTable p4 = oracle_P2k(2);
  EXPECT_EQ(p4.size(), 2u);
  EXPECT_EQ(p4.coefficient(BasisKey::plain({1})), Rational(1));
  EXPECT_EQ(p4.coefficient(BasisKey::plain({0, 0})), Rational(1));
  CoeffTable p6 = oracle_P2k(3);
  EXPECT_EQ(p6.size(), 4u);
  EXPECT_EQ(p6.coefficient(BasisKey::plain({2})), Rational(1));
  EXPECT_EQ(p6.coefficient(BasisKey::plain({1, 0})), Rational(2));
  EXPECT_EQ(p6.coefficient(BasisKey::plain({0, 1})), Rational(2));
  EXPECT_EQ(p6.coefficient(BasisKey::plain({0, 0, 0})), Rational(1));
  EXPECT_EQ(p6.provenance, Provenance::Oracle);
}

TEST(Oracle, GjmsKeysAreAllCompositions) {
  for (unsigned k = 1; k <= 6; ++k) {
    CoeffTable t = oracle_P2k(k);
    EXPECT_EQ(t.size(), 1u << (k - 1)) << k;
    for (const auto &[key, c] : t.entries)
      EXPECT_EQ(key.left.degree(), k);
  }
}

TEST(Oracle, MatchesNaiveExpansion) {
  for (const Rational &L : {Rational(23, 7), Rational(-9, 4), Rational(101, 3)})
    for (unsigned M = 0; M <= 5; ++M)
      for (unsigned N = 0; N <= M + 1; ++N) {
        EXPECT_EQ(oracle_DML_PN(M, L, N).entries, naive_table(M, L, N, false).entries)
            << "M=" << M << " N=" << N << " L=" << L;
        EXPECT_EQ(oracle_DML_PN_f(M, L, N).entries, naive_table(M, L, N, true).entries)
            << "f M=" << M << " N=" << N << " L=" << L;
      }
}

TEST(Oracle, SingleRhoPower) {
  const Rational L(8, 3);
  CoeffTable t = oracle_DML_PN(1, L, 1);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.coefficient(kU), Rational(2) * (L - Rational(1)));
  EXPECT_TRUE(oracle_DML_PN(2, L, 3).empty());
}

TEST(Oracle, OvsienkoRedouFirstOrder) {
  CoeffTable t = oracle_D2k(1, Rational(5, 7));
  EXPECT_EQ(t.size(), 3u);
  for (const auto &key : {BasisKey::pair({}, {0}, {}), BasisKey::pair({}, {}, {0}),
                          BasisKey::pair({0}, {}, {})})
    EXPECT_EQ(t.coefficient(key), Rational(1)) << key.str();
  EXPECT_EQ(coefficient_a(1, 0, 0, Rational(3, 11)), Rational(1));
  EXPECT_EQ(coefficient_a(0, 1, 0, Rational(3, 11)), Rational(1));
  EXPECT_EQ(coefficient_a(0, 0, 1, Rational(3, 11)), Rational(1));
  EXPECT_EQ(ovsienko_redou_L(2, Rational(3)), Rational(11, 6));
}

TEST(Oracle, OvsienkoRedouDegreeAndSwap) {
  for (unsigned k = 1; k <= 3; ++k) {
    CoeffTable t = oracle_D2k(k, Rational(-13, 5));
    for (const auto &[key, c] : t.entries) {
      EXPECT_EQ(key.degree(), k);
      EXPECT_EQ(t.coefficient(BasisKey::pair(key.outer, key.right, key.left)), c);
    }
  }
}

TEST(Oracle, LinearFirstOrder) {
  const Rational ell(2);
  CoeffTable t = oracle_D2kI(1, ell);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.coefficient(BasisKey::with_f({}, 0, {0})), Rational(2));
  EXPECT_EQ(t.coefficient(BasisKey::with_f({0}, 0, {})), Rational(2));
  EXPECT_EQ(t.coefficient(BasisKey::with_f({}, 1, {})), Rational(-8));
  EXPECT_EQ(coefficient_b(1, 0, Rational(3, 5)), Rational(3, 5));
  EXPECT_EQ(coefficient_b(0, 1, Rational(3, 5)), Rational(3, 5));
}

TEST(Oracle, LinearDegreeAndDerivativeOrder) {
  for (unsigned k = 1; k <= 3; ++k) {
    CoeffTable t = oracle_D2kI(k, Rational(9, 7));
    for (const auto &[key, c] : t.entries) {
      EXPECT_EQ(key.degree(), k);
      EXPECT_LE(key.f_order, 2 * k);
    }
  }
}

TEST(Oracle, GeneralFamiliesSpecialize) {
  for (unsigned k = 1; k <= 3; ++k) {
    const Rational n(19, 6);
    BilinearParams bp{k, 0, ovsienko_redou_L(k, n), Rational(0), Rational(0), 0, 0};
    EXPECT_EQ(scale(oracle_bilinear_general(bp), reciprocal(factorial(k))).entries,
              oracle_D2k(k, n).entries);
    const Rational ell(-4, 9);
    LinearParams lp{k, k, ell, Rational(0), 0};
    EXPECT_EQ(oracle_linear_general(lp).entries, oracle_D2kI(k, ell).entries);
  }
  BilinearParams one{1, 0, Rational(7, 2), Rational(0), Rational(0), 0, 0};
  EXPECT_EQ(oracle_bilinear_general(one).coefficient(BasisKey::pair({}, {0}, {})), Rational(1));
  BilinearParams id{0, 2, Rational(7, 2), Rational(1, 3), Rational(2, 5), 0, 0};
  EXPECT_EQ(oracle_bilinear_general(id).size(), 1u);
  LinearParams lid{0, 3, Rational(7, 2), Rational(1, 3), 0};
  CoeffTable l0 = oracle_linear_general(lid);
  EXPECT_EQ(l0.size(), 1u);
  EXPECT_EQ(l0.entries.begin()->first, BasisKey::with_f({}, 0, {}));
}

TEST(Oracle, MarginDoesNotChangeResult) {
  ExpansionOptions wide{3};
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_EQ(oracle_P2k(k, wide).entries, oracle_P2k(k).entries);
    EXPECT_EQ(oracle_D2k(k, Rational(7, 3), wide).entries, oracle_D2k(k, Rational(7, 3)).entries);
    EXPECT_EQ(oracle_D2kI(k, Rational(7, 3), wide).entries,
              oracle_D2kI(k, Rational(7, 3)).entries);
  }
}
