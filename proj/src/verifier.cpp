#include "verifier.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "errors.hpp"
#include "special.hpp"

namespace orjuhl {

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::ExactMatch:
    return "exact-match";
  case Verdict::Proportional:
    return "proportional";
  case Verdict::Mismatch:
    return "mismatch";
  }
  return "?";
}

ComparisonReport compare_tables(const CoeffTable &first, const CoeffTable &second) {
  if (first.kind() && second.kind() && *first.kind() != *second.kind())
    throw VariantMismatch("compare_tables: key variants differ");
  ComparisonReport rep;
  rep.params = first.params;
  if (first.entries == second.entries) {
    rep.verdict = Verdict::ExactMatch;
    return rep;
  }
  // union of keys in canonical order
  auto a = first.entries.begin(), b = second.entries.begin();
  bool same_keys = true;
  std::optional<Rational> ratio;
  bool uniform = true;
  while (a != first.entries.end() || b != second.entries.end()) {
    if (b == second.entries.end() || (a != first.entries.end() && a->first < b->first)) {
      rep.mismatched_keys.push_back({a->first, a->second, Rational(0)});
      same_keys = false;
      ++a;
    } else if (a == first.entries.end() || b->first < a->first) {
      rep.mismatched_keys.push_back({b->first, Rational(0), b->second});
      same_keys = false;
      ++b;
    } else {
      if (!(a->second == b->second))
        rep.mismatched_keys.push_back({a->first, a->second, b->second});
      Rational q = a->second / b->second;
      if (!ratio)
        ratio = q;
      else if (!(*ratio == q))
        uniform = false;
      ++a;
      ++b;
    }
  }
  if (same_keys && uniform && ratio) {
    rep.verdict = Verdict::Proportional;
    rep.ratio = ratio;
    rep.mismatched_keys.clear();
  } else {
    rep.verdict = Verdict::Mismatch;
  }
  return rep;
}

const char *to_string(Relation r) {
  switch (r) {
  case Relation::Reversal:
    return "reversal";
  case Relation::SwapFactors:
    return "swap-factors";
  case Relation::StarOuter:
    return "left-outer";
  case Relation::DiamondOuter:
    return "right-outer";
  case Relation::StarThrough:
    return "left-through";
  case Relation::DiamondThrough:
    return "right-through";
  case Relation::InsertionSwap:
    return "insertion-swap";
  }
  return "?";
}

const std::vector<Relation> &pair_relations() {
  static const std::vector<Relation> all{Relation::SwapFactors, Relation::StarOuter,
                                         Relation::DiamondOuter, Relation::StarThrough,
                                         Relation::DiamondThrough};
  return all;
}

BasisKey relabel(const BasisKey &key, Relation r) {
  switch (r) {
  case Relation::Reversal:
    if (key.kind != KeyKind::Plain)
      break;
    return BasisKey::plain(key.left.reversed());
  case Relation::InsertionSwap:
    if (key.kind != KeyKind::WithF)
      break;
    return BasisKey::with_f(key.left.reversed(), key.f_order, key.outer.reversed());
  default:
    if (key.kind != KeyKind::Pair)
      break;
    {
      const MWord &o = key.outer, &l = key.left, &rt = key.right;
      switch (r) {
      case Relation::SwapFactors:
        return BasisKey::pair(o, rt, l);
      case Relation::StarOuter:
        return BasisKey::pair(l.reversed(), o.reversed(), rt);
      case Relation::DiamondOuter:
        return BasisKey::pair(rt.reversed(), o.reversed(), l);
      case Relation::StarThrough:
        return BasisKey::pair(l.reversed(), rt, o.reversed());
      case Relation::DiamondThrough:
        return BasisKey::pair(rt.reversed(), l, o.reversed());
      default:
        break;
      }
    }
  }
  throw InvalidArgument(std::string("relation ") + to_string(r) + " does not apply to " +
                        to_string(key.kind) + " keys");
}

SymmetryReport check_symmetry(const CoeffTable &t, Relation r) {
  SymmetryReport rep;
  rep.relation = r;
  for (const auto &[key, c] : t.entries) {
    BasisKey img = relabel(key, r);
    Rational d = t.coefficient(img);
    if (!(c == d)) {
      rep.pass = false;
      rep.witness = KeyWitness{key, c, d};
      rep.image = img;
      return rep;
    }
  }
  return rep;
}

namespace {

Rational R_(long v) { return Rational(v); }
Rational sign_power(long e) { return (e % 2 == 0) ? R_(1) : R_(-1); }

Rational rev_prefix(const std::vector<unsigned> &A, const Rational &offset) {
  Rational r(1);
  long s = 0;
  for (auto it = A.rbegin(); it != A.rend(); ++it) {
    s += *it + 1;
    r /= offset + R_(s);
  }
  return r;
}

Rational fwd_prefix_neg(const std::vector<unsigned> &A, const Rational &offset) {
  Rational r(1);
  long s = 0;
  for (unsigned a : A) {
    s += a + 1;
    r /= offset - R_(s);
  }
  return r;
}

long degree_of(const std::vector<unsigned> &A) {
  long d = 0;
  for (unsigned a : A)
    d += a + 1;
  return d;
}

} // namespace

IdentityReport check_aux_sum_1(const std::vector<unsigned> &A, const std::vector<Rational> &xs) {
  IdentityReport rep;
  const std::size_t r = A.size();
  const long N = degree_of(A);
  const unsigned total = static_cast<unsigned>(N - static_cast<long>(r));
  const auto Bs = weak_compositions(total, static_cast<unsigned>(r));
  for (const Rational &X : xs) {
    Rational lhs(0);
    for (const auto &B : Bs) {
      Rational t(1);
      long sA = 0, sB = 0;
      for (std::size_t i = 1; i <= r; ++i) {
        sA += A[i - 1];
        const unsigned b = B[i - 1];
        Rational f = factorial(b);
        t *= f * f * gen_binomial(R_(sA - sB), b) *
             gen_binomial(X - R_(2 * static_cast<long>(i) + sA + sB), b);
        sB += b;
      }
      lhs += t;
    }
    Rational rhs = factorial(static_cast<unsigned>(N)) * rev_prefix(A, R_(0)) *
                   rev_prefix(A, X - R_(2 * N));
    for (long n = 0; n < N; ++n)
      rhs *= X - R_(N + n);
    ++rep.samples;
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.witness = ParamPoint{};
      rep.witness->set("X", X);
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
  }
  return rep;
}

IdentityReport check_aux_sum_2(const std::vector<unsigned> &A, unsigned M,
                               const std::vector<std::pair<Rational, Rational>> &xys) {
  const std::size_t r = A.size();
  if (M < r)
    throw InvalidArgument("aux sum 2 needs M >= |A|");
  IdentityReport rep;
  const auto Cs = weak_compositions(M - static_cast<unsigned>(r), static_cast<unsigned>(r + 1));
  const long Ml = M;
  for (const auto &[X, Y] : xys) {
    Rational lhs(0);
    for (const auto &C : Cs) {
      const unsigned cl = C[r];
      Rational f = factorial(cl);
      Rational t = f * f * gen_binomial(X + R_(static_cast<long>(cl) - 1), cl) *
                   gen_binomial(R_(Ml) - Y, cl);
      long sA = 0, sC = 0;
      for (std::size_t i = 1; i <= r; ++i) {
        sA += A[i - 1];
        const unsigned c = C[i - 1];
        Rational fc = factorial(c);
        t *= sign_power(c) * fc * fc * gen_binomial(R_(sA - sC), c) *
             gen_binomial(X + Y + R_(Ml - 2 * static_cast<long>(i) - sA - sC), c);
        sC += c;
      }
      lhs += t;
    }
    Rational rhs = sign_power(Ml - static_cast<long>(r)) * fwd_prefix_neg(A, X + R_(Ml)) *
                   fwd_prefix_neg(A, Y);
    for (long n = 0; n < Ml; ++n)
      rhs *= (X + R_(n)) * (Y - R_(1 + n));
    ++rep.samples;
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.witness = ParamPoint{};
      rep.witness->set("X", X).set("Y", Y);
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
  }
  return rep;
}

IdentityReport check_pfaff_saalschutz(unsigned n, const Rational &a, const Rational &b,
                                      const Rational &c) {
  IdentityReport rep;
  rep.samples = 1;
  const Rational d = R_(1) + a + b - c - R_(n);
  Rational lhs(0);
  for (unsigned j = 0; j <= n; ++j)
    lhs += pochhammer(R_(-static_cast<long>(n)), j) * pochhammer(a, j) * pochhammer(b, j) /
           (pochhammer(c, j) * pochhammer(d, j) * factorial(j));
  Rational rhs = pochhammer(c - a, n) * pochhammer(c - b, n) /
                 (pochhammer(c, n) * pochhammer(c - a - b, n));
  rep.lhs = lhs;
  rep.rhs = rhs;
  if (!(lhs == rhs)) {
    rep.pass = false;
    rep.witness = ParamPoint{};
    rep.witness->set("a", a).set("b", b).set("c", c).set_int("n", n);
  }
  return rep;
}

FormalExpr expand_sab_direct(const std::vector<unsigned> &A, const std::vector<unsigned> &B,
                             const Rational &L, unsigned N, bool with_f) {
  if (B.size() != A.size() + 1)
    throw InvalidArgument("expand_sab_direct: B must be one longer than A");
  FormalExpr e = FormalExpr::unit(with_f ? KeyKind::WithF : KeyKind::Plain, N);
  long position = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (i > 0) {
      e = apply_P(A[i - 1], e);
      ++position;
    }
    for (unsigned j = 0; j < B[i]; ++j) {
      e = apply_D(L - R_(1 + 2 * position), e);
      ++position;
    }
  }
  return e;
}

bool SuiteReport::pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellResult &c) { return c.pass; });
}

std::size_t SuiteReport::failed_cells() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellResult &c) { return !c.pass; }));
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"juhl",       "gen-juhl", "f-insertion",
                                              "linear",     "bilinear", "selfadjoint",
                                              "appendix",   "soundness"};
  return names;
}

unsigned effective_threads(unsigned requested) {
  if (requested > 0)
    return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

using CellFn = std::function<CellResult()>;

struct CellTask {
  std::string suite;
  CellFn run;
};

std::string word_list(const std::vector<unsigned> &w) { return BasisKey::plain(MWord(w)).str(); }

// Draws the index-th pole-free point of a cell's stream and evaluates fn on
// it. A PoleError raised during evaluation redraws the point.
template <class Fn>
SampleRecord sampled(std::uint64_t stream, std::uint64_t index,
                     const std::vector<std::string> &labels, const PointPredicate &is_pole,
                     Fn &&fn) {
  constexpr unsigned kRedraws = 64;
  for (unsigned attempt = 0; attempt < kRedraws; ++attempt) {
    ParamPoint p = sample_point(mix_seed(stream, attempt), index, labels, is_pole);
    try {
      SampleRecord rec = fn(p);
      rec.index = index;
      return rec;
    } catch (const PoleError &) {
    }
  }
  throw SamplingExhausted("evaluation kept hitting poles");
}

PointPredicate small_integer_any(const std::vector<std::string> &labels, long radius) {
  return [labels, radius](const ParamPoint &p) {
    for (const auto &l : labels)
      if (is_small_integer(p.value(l), radius))
        return true;
    return false;
  };
}

std::uint64_t stream_for(const VerifyConfig &cfg, const std::string &cell) {
  return mix_seed(cfg.seed, hash_name(cell));
}

unsigned samples_for(const VerifyConfig &cfg, unsigned degree_bound) {
  return std::max(cfg.samples, degree_bound + 2);
}

SampleRecord from_comparison(const ComparisonReport &c) {
  SampleRecord s;
  s.params = c.params;
  s.outcome = to_string(c.verdict);
  s.ratio = c.ratio;
  s.witnesses = c.mismatched_keys;
  return s;
}

// Fills a sampled cell: sample_count points, each evaluated by fn which
// returns the record and whether it meets the expectation.
template <class Fn>
void run_samples(CellResult &cell, const VerifyConfig &cfg, const std::vector<std::string> &labels,
                 const PointPredicate &pred, Fn &&fn) {
  const std::uint64_t stream = stream_for(cfg, cell.suite + "/" + cell.name);
  for (unsigned i = 0; i < cell.sample_count; ++i) {
    bool ok = true;
    SampleRecord rec = sampled(stream, i, labels, pred, [&](const ParamPoint &p) {
      auto [r, good] = fn(p);
      ok = good;
      return r;
    });
    cell.samples.push_back(std::move(rec));
    if (!ok)
      cell.pass = false;
  }
}

CellResult make_cell(const std::string &suite, std::string name, std::string expectation,
                     unsigned degree_bound, unsigned sample_count) {
  CellResult c;
  c.suite = suite;
  c.name = std::move(name);
  c.expectation = std::move(expectation);
  c.degree_bound = degree_bound;
  c.sample_count = sample_count;
  return c;
}

std::string fmt(const char *prefix, std::initializer_list<std::pair<const char *, long>> kv) {
  std::ostringstream os;
  os << prefix;
  for (const auto &[k, v] : kv)
    os << ' ' << k << '=' << v;
  return os.str();
}

void add_juhl(std::vector<CellTask> &tasks, const VerifyConfig &cfg) {
  for (unsigned k = 1; k <= cfg.max_k; ++k) {
    tasks.push_back({"juhl", [k] {
      CellResult cell = make_cell("juhl", fmt("gjms", {{"k", k}}),
                                  "exact-match; reversal-symmetric", 0, 1);
      CoeffTable o = oracle_P2k(k), c = cf_P2k(k);
      SampleRecord rec = from_comparison(compare_tables(o, c));
      cell.pass = rec.outcome == "exact-match";
      for (const CoeffTable *t : {&o, &c}) {
        SymmetryReport s = check_symmetry(*t, Relation::Reversal);
        if (!s.pass) {
          cell.pass = false;
          rec.note = "not reversal-symmetric at " + s.witness->key.str();
        }
      }
      if (!(cf_DML_PN(k, Rational(static_cast<long>(k)), 0).entries == c.entries)) {
        cell.pass = false;
        cell.notes.push_back("specialization of the generalized formula differs");
      }
      cell.samples.push_back(std::move(rec));
      return cell;
    }});
  }
}

void add_dml(std::vector<CellTask> &tasks, const VerifyConfig &cfg, bool with_f) {
  const std::string suite = with_f ? "f-insertion" : "gen-juhl";
  for (unsigned M = 0; M <= cfg.max_m; ++M) {
    for (unsigned N = 0; N <= M; ++N) {
      tasks.push_back({suite, [=, &cfg] {
        const unsigned deg = 4 * (M + 2);
        CellResult cell = make_cell(suite, fmt(with_f ? "dml-f" : "dml", {{"M", M}, {"N", N}}),
                                    "exact-match", deg, samples_for(cfg, deg));
        run_samples(cell, cfg, {"L"}, small_integer_any({"L"}, 2 * M + 2),
                    [&](const ParamPoint &p) {
                      const Rational &L = p.value("L");
                      auto rep = with_f ? compare_tables(oracle_DML_PN_f(M, L, N), cf_DML_PN_f(M, L, N))
                                        : compare_tables(oracle_DML_PN(M, L, N), cf_DML_PN(M, L, N));
                      return std::pair{from_comparison(rep), rep.verdict == Verdict::ExactMatch};
                    });
        return cell;
      }});
    }
  }
}

void add_linear(std::vector<CellTask> &tasks, const VerifyConfig &cfg) {
  for (unsigned U = 0; U <= cfg.max_u_linear; ++U)
    for (unsigned V = 0; V <= cfg.max_v_linear; ++V)
      for (unsigned N = 0; N <= U; ++N)
        tasks.push_back({"linear", [=, &cfg] {
          const unsigned deg = 4 * (U + V + 2);
          CellResult cell = make_cell("linear", fmt("linear-general", {{"U", U}, {"V", V}, {"N", N}}),
                                      "exact-match", deg, samples_for(cfg, deg));
          run_samples(cell, cfg, {"K", "L"},
                      small_integer_any({"K", "L"}, 2 * static_cast<long>(U + V) + 4),
                      [&](const ParamPoint &p) {
                        LinearParams lp{U, V, p.value("L"), p.value("K"), N};
                        auto rep = compare_tables(oracle_linear_general(lp), cf_linear_general(lp));
                        return std::pair{from_comparison(rep), rep.verdict == Verdict::ExactMatch};
                      });
          return cell;
        }});
  for (unsigned k = 1; k <= cfg.max_k_insertion; ++k)
    tasks.push_back({"linear", [=, &cfg] {
      const unsigned deg = 4 * (2 * k + 2);
      CellResult cell = make_cell("linear", fmt("insertion", {{"k", k}}),
                                  "exact-match; equals the general family at U=V=k, K=0, N=0",
                                  deg, samples_for(cfg, deg));
      run_samples(cell, cfg, {"ell"}, small_integer_any({"ell"}, 2 * k + 4),
                  [&](const ParamPoint &p) {
                    const Rational &ell = p.value("ell");
                    CoeffTable o = oracle_D2kI(k, ell), c = cf_D2kI(k, ell);
                    auto rep = compare_tables(o, c);
                    SampleRecord rec = from_comparison(rep);
                    bool ok = rep.verdict == Verdict::ExactMatch;
                    LinearParams lp{k, k, ell, Rational(0), 0};
                    if (!(oracle_linear_general(lp).entries == o.entries) ||
                        !(cf_linear_general(lp).entries == c.entries)) {
                      ok = false;
                      rec.note = "general family specialization differs";
                    }
                    if (k == 1) {
                      CoeffTable pinned;
                      pinned.add(BasisKey::with_f({}, 0, {0}), ell);
                      pinned.add(BasisKey::with_f({0}, 0, {}), ell);
                      pinned.add(BasisKey::with_f({}, 1, {}), Rational(-2) * ell * ell);
                      if (!(pinned.entries == o.entries)) {
                        ok = false;
                        rec.note = "k=1 table differs from (ell, ell, -2 ell^2)";
                      }
                    }
                    return std::pair{rec, ok};
                  });
      return cell;
    }});
}

void add_bilinear(std::vector<CellTask> &tasks, const VerifyConfig &cfg) {
  for (unsigned U = 0; U <= cfg.max_u_bilinear; ++U)
    for (unsigned V = 0; V <= cfg.max_v_bilinear; ++V)
      for (unsigned Ns = 0; Ns <= U; ++Ns)
        for (unsigned Nd = 0; Nd <= U; ++Nd)
          tasks.push_back({"bilinear", [=, &cfg] {
            const unsigned deg = 4 * (U + V + 2);
            CellResult cell = make_cell(
                "bilinear",
                fmt("bilinear-general", {{"U", U}, {"V", V}, {"N*", Ns}, {"N⋄", Nd}}),
                "printed: proportional with word-independent ratio L^2; corrected: exact-match",
                deg, samples_for(cfg, deg));
            run_samples(cell, cfg, {"K*", "K⋄", "L"},
                        small_integer_any({"K*", "K⋄", "L"}, 2 * static_cast<long>(U + V) + 4),
                        [&](const ParamPoint &p) {
                          BilinearParams bp{U, V, p.value("L"), p.value("K*"), p.value("K⋄"), Ns, Nd};
                          CoeffTable o = oracle_bilinear_general(bp);
                          auto printed = compare_tables(o, cf_bilinear_general(bp, Normalization::Printed));
                          auto corrected = compare_tables(o, cf_bilinear_general(bp, Normalization::Corrected));
                          SampleRecord rec = from_comparison(printed);
                          const Rational L2 = bp.L * bp.L;
                          bool ok = (printed.verdict == Verdict::Proportional && *printed.ratio == L2) ||
                                    (printed.verdict == Verdict::ExactMatch && o.empty());
                          if (corrected.verdict != Verdict::ExactMatch) {
                            ok = false;
                            rec.note = std::string("corrected form: ") + to_string(corrected.verdict);
                          } else {
                            rec.note = "corrected form: exact-match";
                          }
                          return std::pair{rec, ok};
                        });
            return cell;
          }});
  for (unsigned k = 1; k <= cfg.max_k_or; ++k)
    tasks.push_back({"bilinear", [=, &cfg] {
      const unsigned deg = 4 * (k + 2);
      CellResult cell = make_cell("bilinear", fmt("ovsienko-redou", {{"k", k}}),
                                  "printed: proportional with ratio L_k^2; corrected: exact-match; "
                                  "equals the general family over k!",
                                  deg, samples_for(cfg, deg));
      const long radius = 2 * static_cast<long>(k) + 4;
      run_samples(cell, cfg, {"n"},
                  [k, radius](const ParamPoint &p) {
                    return is_small_integer(ovsienko_redou_L(k, p.value("n")), radius);
                  },
                  [&](const ParamPoint &p) {
                    const Rational &n = p.value("n");
                    const Rational Lk = ovsienko_redou_L(k, n);
                    CoeffTable o = oracle_D2k(k, n);
                    auto printed = compare_tables(o, cf_D2k(k, n, Normalization::Printed));
                    auto corrected = compare_tables(o, cf_D2k(k, n, Normalization::Corrected));
                    SampleRecord rec = from_comparison(printed);
                    bool ok = printed.verdict == Verdict::Proportional && *printed.ratio == Lk * Lk;
                    rec.note = std::string("corrected form: ") + to_string(corrected.verdict);
                    if (corrected.verdict != Verdict::ExactMatch)
                      ok = false;
                    BilinearParams bp{k, 0, Lk, Rational(0), Rational(0), 0, 0};
                    CoeffTable general = scale(oracle_bilinear_general(bp), reciprocal(factorial(k)));
                    if (!(general.entries == o.entries)) {
                      ok = false;
                      rec.note = "general family over k! differs";
                    }
                    return std::pair{rec, ok};
                  });
      return cell;
    }});
}

void add_selfadjoint(std::vector<CellTask> &tasks, const VerifyConfig &cfg) {
  for (unsigned M = 0; M <= cfg.max_m; ++M)
    for (unsigned N = 0; N <= M; ++N)
      tasks.push_back({"selfadjoint", [=] {
        CellResult cell = make_cell("selfadjoint", fmt("balanced", {{"M", M}, {"N", N}, {"L", M + N}}),
                                    "reversal-symmetric", 0, 1);
        const Rational L(static_cast<long>(M + N));
        SampleRecord rec;
        rec.params.set("L", L).set_int("M", M).set_int("N", N);
        rec.outcome = "pass";
        for (const CoeffTable &t : {cf_DML_PN(M, L, N), oracle_DML_PN(M, L, N)}) {
          SymmetryReport s = check_symmetry(t, Relation::Reversal);
          if (!s.pass) {
            cell.pass = false;
            rec.outcome = "fail";
            rec.witnesses.push_back(*s.witness);
          }
        }
        cell.samples.push_back(std::move(rec));
        return cell;
      }});
  for (unsigned M = 3; M <= cfg.max_m; ++M)
    for (unsigned N = 0; N + 3 <= M; ++N)
      tasks.push_back({"selfadjoint", [=, &cfg] {
        const unsigned deg = 4 * (M + 2);
        CellResult cell = make_cell("selfadjoint", fmt("unbalanced", {{"M", M}, {"N", N}}),
                                    "asymmetry witness at every sampled L != M+N", deg,
                                    samples_for(cfg, deg));
        run_samples(cell, cfg, {"L"}, small_integer_any({"L"}, 2 * M + 2),
                    [&](const ParamPoint &p) {
                      const Rational &L = p.value("L");
                      SampleRecord rec;
                      rec.params = p;
                      bool ok = true;
                      for (const CoeffTable &t : {cf_DML_PN(M, L, N), oracle_DML_PN(M, L, N)}) {
                        SymmetryReport s = check_symmetry(t, Relation::Reversal);
                        if (s.pass)
                          ok = false;
                        else if (rec.witnesses.empty())
                          rec.witnesses.push_back(*s.witness);
                      }
                      rec.outcome = ok ? "asymmetric" : "symmetric";
                      return std::pair{rec, ok};
                    });
        return cell;
      }});
  for (unsigned k = 1; k <= cfg.max_k_or; ++k)
    tasks.push_back({"selfadjoint", [=, &cfg] {
      const unsigned deg = 4 * (k + 2);
      CellResult cell = make_cell("selfadjoint", fmt("pair-relations", {{"k", k}}),
                                  "all five pair relabelings preserve coefficients", deg,
                                  samples_for(cfg, deg));
      const long radius = 2 * static_cast<long>(k) + 4;
      run_samples(cell, cfg, {"n"},
                  [k, radius](const ParamPoint &p) {
                    return is_small_integer(ovsienko_redou_L(k, p.value("n")), radius);
                  },
                  [&](const ParamPoint &p) {
                    const Rational &n = p.value("n");
                    SampleRecord rec;
                    rec.params = p;
                    bool ok = true;
                    for (const CoeffTable &t : {oracle_D2k(k, n), cf_D2k(k, n, Normalization::Corrected)})
                      for (Relation r : pair_relations()) {
                        SymmetryReport s = check_symmetry(t, r);
                        if (!s.pass) {
                          ok = false;
                          rec.witnesses.push_back(*s.witness);
                          rec.note = std::string("fails ") + to_string(r);
                        }
                      }
                    rec.outcome = ok ? "pass" : "fail";
                    return std::pair{rec, ok};
                  });
      return cell;
    }});
  for (unsigned k = 1; k <= cfg.max_k_or; ++k)
    tasks.push_back({"selfadjoint", [=, &cfg] {
      const unsigned deg = 4 * (2 * k + 2);
      CellResult cell = make_cell("selfadjoint", fmt("insertion-swap", {{"k", k}}),
                                  "(A', R, A) and (rev A, R, rev A') carry equal coefficients",
                                  deg, samples_for(cfg, deg));
      run_samples(cell, cfg, {"ell"}, small_integer_any({"ell"}, 2 * k + 4),
                  [&](const ParamPoint &p) {
                    const Rational &ell = p.value("ell");
                    SampleRecord rec;
                    rec.params = p;
                    bool ok = true;
                    for (const CoeffTable &t : {oracle_D2kI(k, ell), cf_D2kI(k, ell)}) {
                      SymmetryReport s = check_symmetry(t, Relation::InsertionSwap);
                      if (!s.pass) {
                        ok = false;
                        rec.witnesses.push_back(*s.witness);
                      }
                    }
                    rec.outcome = ok ? "pass" : "fail";
                    return std::pair{rec, ok};
                  });
      return cell;
    }});
}

SampleRecord identity_record(const IdentityReport &r, const ParamPoint &p) {
  SampleRecord rec;
  rec.params = p;
  rec.outcome = r.pass ? "pass" : "fail";
  if (!r.pass)
    rec.sides = std::pair{r.lhs, r.rhs};
  return rec;
}

void add_appendix(std::vector<CellTask> &tasks, const VerifyConfig &cfg) {
  for (unsigned d = 0; d <= cfg.max_weight; ++d)
    for (const MWord &w : words_of_degree(d))
      tasks.push_back({"appendix", [=, &cfg] {
        const std::vector<unsigned> A = w.entries();
        CellResult cell = make_cell("appendix", "aux-sum-1 A=" + word_list(A), "identity holds",
                                    2 * d, std::max(cfg.samples, 2 * d + 2));
        run_samples(cell, cfg, {"X"}, small_integer_any({"X"}, 2 * static_cast<long>(d) + 2),
                    [&](const ParamPoint &p) {
                      IdentityReport r = check_aux_sum_1(A, {p.value("X")});
                      return std::pair{identity_record(r, p), r.pass};
                    });
        return cell;
      }});
  for (unsigned d = 0; d <= cfg.aux2_max_degree; ++d)
    for (const MWord &w : words_of_degree(d))
      for (unsigned M = static_cast<unsigned>(w.size()); M <= w.size() + cfg.aux2_extra_m; ++M)
        tasks.push_back({"appendix", [=, &cfg] {
          const std::vector<unsigned> A = w.entries();
          const unsigned deg = 2 * (M + d);
          CellResult cell = make_cell("appendix",
                                      "aux-sum-2 A=" + word_list(A) + " M=" + std::to_string(M),
                                      "identity holds", deg, samples_for(cfg, deg));
          if (M < d)
            cell.notes.push_back("M is below the degree of A");
          const long radius = static_cast<long>(M + d) + 2;
          run_samples(cell, cfg, {"X", "Y"}, small_integer_any({"X", "Y"}, radius),
                      [&](const ParamPoint &p) {
                        IdentityReport r = check_aux_sum_2(A, M, {{p.value("X"), p.value("Y")}});
                        return std::pair{identity_record(r, p), r.pass};
                      });
          return cell;
        }});
  for (unsigned n = 0; n <= cfg.ps_max_n; ++n)
    tasks.push_back({"appendix", [=, &cfg] {
      const unsigned deg = 4 * n;
      CellResult cell = make_cell("appendix", fmt("pfaff-saalschutz", {{"n", n}}),
                                  "identity holds", deg, samples_for(cfg, deg));
      const long radius = static_cast<long>(n) + 2;
      run_samples(cell, cfg, {"a", "b", "c"},
                  [radius, n](const ParamPoint &p) {
                    const Rational &a = p.value("a"), &b = p.value("b"), &c = p.value("c");
                    const Rational d = Rational(1) + a + b - c - Rational(static_cast<long>(n));
                    return is_small_integer(c, radius) || is_small_integer(d, radius) ||
                           is_small_integer(c - a - b, radius);
                  },
                  [&](const ParamPoint &p) {
                    IdentityReport r =
                        check_pfaff_saalschutz(n, p.value("a"), p.value("b"), p.value("c"));
                    return std::pair{identity_record(r, p), r.pass};
                  });
      return cell;
    }});
}

template <class Build>
CellTask pruning_cell(const VerifyConfig &cfg, std::string name, std::vector<std::string> labels,
                      long radius, Build build) {
  return {"soundness", [=, &cfg] {
    const unsigned count = std::max(1u, std::min(cfg.samples, 3u));
    CellResult cell = make_cell("soundness", "pruning " + name,
                                "identical tables with margin 0 and margin " +
                                    std::to_string(cfg.soundness_margin),
                                0, labels.empty() ? 1 : count);
    ExpansionOptions wide{cfg.soundness_margin};
    auto eval = [&](const ParamPoint &p) {
      auto rep = compare_tables(build(p, ExpansionOptions{}), build(p, wide));
      return std::pair{from_comparison(rep), rep.verdict == Verdict::ExactMatch};
    };
    if (labels.empty()) {
      auto [rec, ok] = eval(ParamPoint{});
      cell.samples.push_back(rec);
      cell.pass = ok;
    } else {
      run_samples(cell, cfg, labels, small_integer_any(labels, radius), eval);
    }
    return cell;
  }};
}

void add_soundness(std::vector<CellTask> &tasks, const VerifyConfig &cfg) {
  const unsigned K = cfg.soundness_k;
  for (unsigned k = 1; k <= K; ++k)
    tasks.push_back(pruning_cell(cfg, fmt("gjms", {{"k", k}}), {}, 0,
                                 [k](const ParamPoint &, const ExpansionOptions &o) {
                                   return oracle_P2k(k, o);
                                 }));
  for (unsigned M = 0; M <= K; ++M)
    for (unsigned N = 0; N <= M; ++N) {
      tasks.push_back(pruning_cell(cfg, fmt("dml", {{"M", M}, {"N", N}}), {"L"}, 2 * M + 2,
                                   [M, N](const ParamPoint &p, const ExpansionOptions &o) {
                                     return oracle_DML_PN(M, p.value("L"), N, o);
                                   }));
      tasks.push_back(pruning_cell(cfg, fmt("dml-f", {{"M", M}, {"N", N}}), {"L"}, 2 * M + 2,
                                   [M, N](const ParamPoint &p, const ExpansionOptions &o) {
                                     return oracle_DML_PN_f(M, p.value("L"), N, o);
                                   }));
    }
  for (unsigned k = 1; k <= K; ++k) {
    tasks.push_back(pruning_cell(cfg, fmt("ovsienko-redou", {{"k", k}}), {"n"}, 0,
                                 [k](const ParamPoint &p, const ExpansionOptions &o) {
                                   return oracle_D2k(k, p.value("n"), o);
                                 }));
    tasks.push_back(pruning_cell(cfg, fmt("insertion", {{"k", k}}), {"ell"}, 2 * k + 4,
                                 [k](const ParamPoint &p, const ExpansionOptions &o) {
                                   return oracle_D2kI(k, p.value("ell"), o);
                                 }));
  }
  for (unsigned U = 0; U <= K; ++U)
    for (unsigned V = 0; V <= 1; ++V)
      for (unsigned N = 0; N <= U; ++N) {
        tasks.push_back(pruning_cell(
            cfg, fmt("linear-general", {{"U", U}, {"V", V}, {"N", N}}), {"K", "L"},
            2 * static_cast<long>(U + V) + 4, [=](const ParamPoint &p, const ExpansionOptions &o) {
              return oracle_linear_general({U, V, p.value("L"), p.value("K"), N}, o);
            }));
        tasks.push_back(pruning_cell(
            cfg, fmt("bilinear-general", {{"U", U}, {"V", V}, {"N*", N}, {"N⋄", U - N}}),
            {"K*", "K⋄", "L"}, 2 * static_cast<long>(U + V) + 4,
            [=](const ParamPoint &p, const ExpansionOptions &o) {
              return oracle_bilinear_general(
                  {U, V, p.value("L"), p.value("K*"), p.value("K⋄"), N, U - N}, o);
            }));
      }
  for (unsigned M = 0; M <= cfg.sab_max_m; ++M)
    tasks.push_back({"soundness", [M, &cfg] {
      const unsigned deg = 2 * M;
      CellResult cell = make_cell("soundness", fmt("sab-terms", {{"M", M}}),
                                  "direct expansion is the single predicted monomial; vanishing "
                                  "condition implies zero; insertion coefficients agree",
                                  deg, samples_for(cfg, deg));
      const std::uint64_t stream = stream_for(cfg, cell.suite + "/" + cell.name);
      std::size_t tuples = 0, vanishing = 0;
      std::uint64_t index = 0;
      for (unsigned r = 0; r <= M; ++r) {
        std::vector<std::vector<unsigned>> As{{}};
        for (unsigned i = 0; i < r; ++i) {
          std::vector<std::vector<unsigned>> next;
          for (const auto &a : As)
            for (unsigned v = 0; v <= cfg.sab_max_entry; ++v) {
              auto e = a;
              e.push_back(v);
              next.push_back(std::move(e));
            }
          As = std::move(next);
        }
        for (const auto &A : As)
          for (const auto &B : weak_compositions(M - r, r + 1))
            for (unsigned N = 0; N <= cfg.sab_max_n; ++N) {
              ++tuples;
              const IndexSeq a = IndexSeq::a(A), b = IndexSeq::b(B);
              const bool vanishes = sab_vanishing_condition(a, b, N);
              if (vanishes)
                ++vanishing;
              for (unsigned s = 0; s < cell.sample_count; ++s) {
                Rational L = sample_rational(stream, index++);
                std::string problem;
                FormalExpr plain = expand_sab_direct(A, B, L, N, false);
                SabResult pred = sab_coeff(a, b, M, L, N);
                BasisKey pk = BasisKey::plain({});
                for (const auto &[t, c] : plain.terms())
                  if (static_cast<long>(t.rho_power) != pred.rho_exponent)
                    problem = "monomial at unexpected exponent";
                const Rational got = pred.rho_exponent >= 0
                                         ? plain.coefficient(static_cast<unsigned>(pred.rho_exponent), pk)
                                         : Rational(0);
                if (!(got == pred.coeff))
                  problem = "plain coefficient differs";
                if (vanishes && !plain.empty())
                  problem = "vanishing condition holds but expansion is nonzero";
                FormalExpr withf = expand_sab_direct(A, B, L, N, true);
                const unsigned maxR = 2 * b.sum() + 2;
                for (unsigned R = 0; R <= maxR && problem.empty(); ++R) {
                  SabResult pf = sab_f_coeff(a, b, M, L, N, R);
                  const Rational g = pf.rho_exponent >= 0
                                         ? withf.coefficient(static_cast<unsigned>(pf.rho_exponent),
                                                             BasisKey::with_f({}, R, {}))
                                         : Rational(0);
                  if (!(g == pf.coeff))
                    problem = "insertion coefficient differs at R=" + std::to_string(R);
                }
                if (!problem.empty()) {
                  cell.pass = false;
                  SampleRecord rec;
                  rec.index = index - 1;
                  rec.params.set("L", L).set_int("N", N);
                  rec.outcome = "fail";
                  rec.note = "A=" + word_list(A) + " B=" + word_list(B) + ": " + problem;
                  cell.samples.push_back(std::move(rec));
                }
              }
            }
      }
      cell.notes.push_back(std::to_string(tuples) + " (A,B,N) tuples, " +
                           std::to_string(vanishing) + " satisfy the vanishing condition");
      return cell;
    }});
}

std::vector<CellTask> collect(const std::string &suite, const VerifyConfig &cfg) {
  std::vector<CellTask> tasks;
  if (suite == "juhl")
    add_juhl(tasks, cfg);
  else if (suite == "gen-juhl")
    add_dml(tasks, cfg, false);
  else if (suite == "f-insertion")
    add_dml(tasks, cfg, true);
  else if (suite == "linear")
    add_linear(tasks, cfg);
  else if (suite == "bilinear")
    add_bilinear(tasks, cfg);
  else if (suite == "selfadjoint")
    add_selfadjoint(tasks, cfg);
  else if (suite == "appendix")
    add_appendix(tasks, cfg);
  else if (suite == "soundness")
    add_soundness(tasks, cfg);
  else
    throw InvalidArgument("unknown suite '" + suite + "'");
  return tasks;
}

} // namespace

std::vector<SuiteReport> run_equivalence_suite(const std::string &suite, const VerifyConfig &cfg) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  std::vector<CellTask> tasks;
  for (const auto &n : names) {
    auto t = collect(n, cfg);
    tasks.insert(tasks.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }

  std::vector<CellResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned nthreads =
      std::min<unsigned>(effective_threads(cfg.threads), std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &th : pool)
    th.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  std::vector<SuiteReport> out;
  for (const auto &n : names) {
    SuiteReport rep;
    rep.suite = n;
    rep.seed = cfg.seed;
    for (std::size_t i = 0; i < tasks.size(); ++i)
      if (tasks[i].suite == n)
        rep.cells.push_back(std::move(results[i]));
    out.push_back(std::move(rep));
  }
  return out;
}

} // namespace orjuhl
