#include "closed_forms.hpp"

#include <numeric>

#include "errors.hpp"
#include "special.hpp"

namespace orjuhl {

namespace {

Rational R_(long v) { return Rational(v); }

Rational sign_power(long e) { return (e % 2 == 0) ? R_(1) : R_(-1); }

Rational inv_factorial_squares(const MWord &w) {
  Rational r(1);
  for (unsigned a : w) {
    Rational f = factorial(a);
    r /= f * f;
  }
  return r;
}

// prod_i 1/(offset + sign * s_i) with s_i the running prefix sums of (A_j+1).
Rational prefix_factor(const MWord &w, const Rational &offset, int sign, std::size_t count) {
  Rational r(1);
  long s = 0;
  for (std::size_t i = 0; i < count && i < w.size(); ++i) {
    s += w[i] + 1;
    r /= offset + R_(sign * s);
  }
  return r;
}

Rational prefix_factor(const MWord &w, const Rational &offset, int sign) {
  return prefix_factor(w, offset, sign, w.size());
}

CoeffTable tagged(CoeffTable t, ParamPoint params) {
  t.params = std::move(params);
  t.provenance = Provenance::ClosedForm;
  return t;
}

// M! prod_{n=0}^{M-1} (L-M-n) (reverse prefix factors), with the factor n = skip
// cancelled against the last reverse factor 1/(L-M-skip) when w is nonempty.
Rational generalized_juhl_body(unsigned M, const Rational &L, const MWord &w, unsigned skip) {
  const MWord rw = w.reversed();
  Rational c = factorial(M) * inv_factorial_squares(w) * prefix_factor(rw, R_(0), 1);
  const long Ml = M;
  for (unsigned n = 0; n < M; ++n)
    if (w.empty() || n != skip)
      c *= L - R_(Ml + n);
  c *= prefix_factor(rw, L - R_(2 * Ml), 1, w.empty() ? 0 : w.size() - 1);
  return c;
}

void validate_ab(const IndexSeq &A, const IndexSeq &B, unsigned M) {
  if (A.role != SeqRole::AWord || B.role != SeqRole::BExponents)
    throw InvalidArgument("sab: expected an A-word and a B-sequence");
  if (B.size() != A.size() + 1)
    throw InvalidArgument("sab: B must be one longer than A");
  if (A.size() + B.sum() != M)
    throw InvalidArgument("sab: r + sum B must equal M");
}

Rational sab_product(const IndexSeq &A, const IndexSeq &B, const Rational &L, long N) {
  Rational c(1);
  long sA = 0, sB = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (i > 0)
      sA += A.entries[i - 1];
    const unsigned b = B.entries[i];
    Rational f = factorial(b);
    c *= f * f * gen_binomial(R_(N + sA - sB), b) *
         gen_binomial(L - R_(N + 2 * static_cast<long>(i) + sA + sB), b);
    sB += b;
  }
  return c;
}

} // namespace

unsigned IndexSeq::sum() const { return std::accumulate(entries.begin(), entries.end(), 0u); }

std::vector<MWord> words_of_degree(unsigned total) {
  std::vector<MWord> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  for (unsigned a = 0; a < total; ++a) {
    for (const MWord &rest : words_of_degree(total - a - 1)) {
      std::vector<unsigned> e{a};
      e.insert(e.end(), rest.begin(), rest.end());
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

std::vector<std::vector<unsigned>> weak_compositions(unsigned total, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0)
      out.emplace_back();
    return out;
  }
  for (unsigned x = 0; x <= total; ++x) {
    for (auto &rest : weak_compositions(total - x, parts - 1)) {
      std::vector<unsigned> e{x};
      e.insert(e.end(), rest.begin(), rest.end());
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<WordTuple> enumerate_words(unsigned total, unsigned slots, bool with_R) {
  if (slots < 1 || slots > 3)
    throw InvalidArgument("enumerate_words supports 1 to 3 slots");
  std::vector<WordTuple> out;
  const unsigned parts = slots + (with_R ? 1 : 0);
  for (const auto &split : weak_compositions(total, parts)) {
    const unsigned R = with_R ? split[0] : 0;
    std::vector<WordTuple> partial{WordTuple{R, {}}};
    for (unsigned slot = 0; slot < slots; ++slot) {
      std::vector<WordTuple> next;
      for (const WordTuple &t : partial)
        for (const MWord &w : words_of_degree(split[slot + (with_R ? 1 : 0)])) {
          WordTuple e = t;
          e.words.push_back(w);
          next.push_back(std::move(e));
        }
      partial = std::move(next);
    }
    for (auto &t : partial)
      out.push_back(std::move(t));
  }
  return out;
}

bool sab_vanishing_condition(const IndexSeq &A, const IndexSeq &B, unsigned N) {
  long sA = N, sB = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (i > 0)
      sA += A.entries[i - 1];
    sB += B.entries[i];
    if (sA < sB)
      return true;
  }
  return false;
}

SabResult sab_coeff(const IndexSeq &A, const IndexSeq &B, unsigned M, const Rational &L,
                    unsigned N) {
  validate_ab(A, B, M);
  SabResult r;
  r.rho_exponent = static_cast<long>(N + A.sum()) - static_cast<long>(B.sum());
  r.coeff = sab_vanishing_condition(A, B, N) ? Rational(0) : sab_product(A, B, L, N);
  return r;
}

SabResult sab_f_coeff(const IndexSeq &A, const IndexSeq &B, unsigned M, const Rational &L,
                      unsigned N, unsigned R) {
  validate_ab(A, B, M);
  SabResult r;
  r.rho_exponent = static_cast<long>(R + N + A.sum()) - static_cast<long>(B.sum());
  if (R > 2 * B.sum()) {
    r.coeff = Rational(0);
    return r;
  }
  Rational acc(0);
  for (unsigned l = 0; l <= R; ++l) {
    const Rational term = sab_vanishing_condition(A, B, N + l)
                              ? Rational(0)
                              : sab_product(A, B, L, static_cast<long>(N + l));
    acc += sign_power(R - l) * gen_binomial(R_(R), l) * term;
  }
  r.coeff = acc / factorial(R);
  return r;
}

CoeffTable cf_DML_PN(unsigned M, const Rational &L, unsigned N) {
  ParamPoint pp;
  pp.set("L", L).set_int("M", M).set_int("N", N);
  CoeffTable t;
  if (N > M)
    return tagged(std::move(t), pp);
  for (const MWord &w : words_of_degree(M - N)) {
    const long e = static_cast<long>(M - N - w.size());
    Rational c = sign_power(e) * power(R_(2), N) * generalized_juhl_body(M, L, w, N);
    t.add(BasisKey::plain(w), c);
  }
  return tagged(std::move(t), pp);
}

CoeffTable cf_DML_PN_f(unsigned M, const Rational &L, unsigned N) {
  ParamPoint pp;
  pp.set("L", L).set_int("M", M).set_int("N", N);
  CoeffTable t;
  if (N > M)
    return tagged(std::move(t), pp);
  for (unsigned R = 0; R <= M - N; ++R) {
    for (const MWord &w : words_of_degree(M - N - R)) {
      const long e = static_cast<long>(M - N - R - w.size());
      Rational c = sign_power(e) * power(R_(2), N + R) / factorial(R) *
                   generalized_juhl_body(M, L, w, N + R);
      t.add(BasisKey::with_f(w, R, {}), c);
    }
  }
  return tagged(std::move(t), pp);
}

CoeffTable cf_P2k(unsigned k) {
  if (k == 0)
    throw InvalidArgument("P_2k needs k >= 1");
  ParamPoint pp;
  pp.set_int("k", k);
  CoeffTable t;
  const Rational f = factorial(k - 1);
  for (const MWord &w : words_of_degree(k)) {
    const std::size_t inner = w.size() - 1;
    Rational c = f * f * inv_factorial_squares(w) * prefix_factor(w, R_(0), 1, inner) *
                 prefix_factor(w.reversed(), R_(0), 1, inner);
    t.add(BasisKey::plain(w), c);
  }
  return tagged(std::move(t), pp);
}

const char *to_string(Normalization n) {
  return n == Normalization::Printed ? "printed" : "corrected";
}

CoeffTable cf_bilinear_general(const BilinearParams &p, Normalization norm) {
  CoeffTable t;
  if (p.Ns + p.Nd > p.U)
    return tagged(std::move(t), p.point());
  Rational pre = power(R_(-2), p.Ns + p.Nd);
  // prod_{n=0}^U (K+n) / (K+N) with the n = N factor removed symbolically
  for (unsigned n = 0; n <= p.U; ++n) {
    if (n != p.Ns)
      pre *= p.Ks + R_(n);
    if (n != p.Nd)
      pre *= p.Kd + R_(n);
  }
  for (unsigned n = 1; n <= p.U; ++n)
    pre *= p.L - R_(n);
  for (unsigned n = 0; n < p.V; ++n)
    pre *= p.L + R_(n);
  pre /= (p.L - R_(p.Ns)) * (p.L - R_(p.Nd));
  if (norm == Normalization::Corrected)
    pre *= p.L * p.L;
  const Rational LV = p.L + R_(p.V);
  for (const WordTuple &wt : enumerate_words(p.U - p.Ns - p.Nd, 3, false)) {
    const MWord &As = wt.words[0], &Ad = wt.words[1], &Ap = wt.words[2];
    const MWord rAp = Ap.reversed();
    Rational c = pre * inv_factorial_squares(As) * inv_factorial_squares(Ad) *
                 inv_factorial_squares(Ap);
    c *= prefix_factor(As, p.Ks + R_(p.Ns), 1) * prefix_factor(As, p.L - R_(p.Ns), -1);
    c *= prefix_factor(Ad, p.Kd + R_(p.Nd), 1) * prefix_factor(Ad, p.L - R_(p.Nd), -1);
    c *= prefix_factor(rAp, R_(0), 1) * prefix_factor(rAp, LV, -1);
    t.add(BasisKey::pair(Ap, As, Ad), c);
  }
  return tagged(std::move(t), p.point());
}

CoeffTable cf_D2k(unsigned k, const Rational &n, Normalization norm) {
  if (k == 0)
    throw InvalidArgument("D_2k needs k >= 1");
  const Rational Lk = ovsienko_redou_L(k, n);
  ParamPoint pp;
  pp.set("n", n).set("L_k", Lk).set_int("k", k);
  Rational pre = factorial(k);
  for (unsigned i = 1; i <= k; ++i)
    pre *= Lk - R_(i);
  if (norm == Normalization::Printed)
    pre /= Lk * Lk;
  CoeffTable t;
  for (const WordTuple &wt : enumerate_words(k, 3, false)) {
    const MWord &As = wt.words[0], &Ad = wt.words[1], &Ap = wt.words[2];
    const MWord rAp = Ap.reversed();
    Rational c = pre * inv_factorial_squares(As) * inv_factorial_squares(Ad) *
                 inv_factorial_squares(Ap);
    c *= prefix_factor(As, R_(0), 1) * prefix_factor(As, Lk, -1);
    c *= prefix_factor(Ad, R_(0), 1) * prefix_factor(Ad, Lk, -1);
    c *= prefix_factor(rAp, R_(0), 1) * prefix_factor(rAp, Lk, -1);
    t.add(BasisKey::pair(Ap, As, Ad), c);
  }
  return tagged(std::move(t), pp);
}

CoeffTable cf_linear_general(const LinearParams &p) {
  CoeffTable t;
  if (p.N > p.U)
    return tagged(std::move(t), p.point());
  Rational base(1);
  for (unsigned n = 0; n <= p.U; ++n) {
    if (n != p.N)
      base *= p.K + R_(n);
    if (n != p.U - p.N)
      base *= p.L + R_(n);
  }
  for (unsigned n = 0; n < p.V; ++n)
    base *= p.L + R_(n);
  const Rational inner_off = p.L + R_(static_cast<long>(p.U) - static_cast<long>(p.N));
  const Rational LV = p.L + R_(p.V);
  for (const WordTuple &wt : enumerate_words(p.U - p.N, 2, true)) {
    const MWord &A = wt.words[0], &Ap = wt.words[1];
    const MWord rAp = Ap.reversed();
    Rational c = base * power(R_(-2), p.N + wt.R) / factorial(wt.R);
    c *= inv_factorial_squares(A) * inv_factorial_squares(Ap);
    c *= prefix_factor(A, p.K + R_(p.N), 1) * prefix_factor(A, inner_off, -1);
    c *= prefix_factor(rAp, R_(0), 1) * prefix_factor(rAp, LV, -1);
    t.add(BasisKey::with_f(Ap, wt.R, A), c);
  }
  return tagged(std::move(t), p.point());
}

CoeffTable cf_D2kI(unsigned k, const Rational &ell) {
  if (k == 0)
    throw InvalidArgument("D_2k;I needs k >= 1");
  ParamPoint pp;
  pp.set("ell", ell).set_int("k", k);
  Rational sq(1);
  for (unsigned n = 0; n < k; ++n)
    sq *= (ell + R_(n)) * (ell + R_(n));
  const Rational top = ell + R_(k);
  CoeffTable t;
  for (const WordTuple &wt : enumerate_words(k, 2, true)) {
    const MWord &A = wt.words[0], &Ap = wt.words[1];
    const MWord rAp = Ap.reversed();
    Rational c = power(R_(-2), wt.R) * factorial(k) / factorial(wt.R) * sq;
    c *= inv_factorial_squares(A) * inv_factorial_squares(Ap);
    c *= prefix_factor(A, R_(0), 1) * prefix_factor(A, top, -1);
    c *= prefix_factor(rAp, R_(0), 1) * prefix_factor(rAp, top, -1);
    t.add(BasisKey::with_f(Ap, wt.R, A), c);
  }
  return tagged(std::move(t), pp);
}

} // namespace orjuhl
