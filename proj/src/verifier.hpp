#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "closed_forms.hpp"

namespace orjuhl {

enum class Verdict { ExactMatch, Proportional, Mismatch };

const char *to_string(Verdict v);

struct KeyWitness {
  BasisKey key;
  Rational first;
  Rational second;
};

struct ComparisonReport {
  Verdict verdict = Verdict::ExactMatch;
  std::optional<Rational> ratio; // first/second, set for Proportional
  std::vector<KeyWitness> mismatched_keys;
  ParamPoint params;
  std::uint64_t sample_index = 0;
};

// Throws VariantMismatch if the tables hold different key variants.
ComparisonReport compare_tables(const CoeffTable &first, const CoeffTable &second);

enum class Relation {
  Reversal,      // plain words: A -> rev A
  SwapFactors,   // (A', A*, A⋄) -> (A', A⋄, A*)
  StarOuter,     // -> (rev A*, rev A', A⋄)
  DiamondOuter,  // -> (rev A⋄, rev A', A*)
  StarThrough,   // -> (rev A*, A⋄, rev A')
  DiamondThrough,// -> (rev A⋄, A*, rev A')
  InsertionSwap, // with-f keys: (A', R, A) -> (rev A, R, rev A')
};

const char *to_string(Relation r);
// The five nontrivial relabelings of (outer, left, right) for pair tables.
const std::vector<Relation> &pair_relations();
BasisKey relabel(const BasisKey &key, Relation r);

struct SymmetryReport {
  Relation relation = Relation::Reversal;
  bool pass = true;
  std::optional<KeyWitness> witness; // key, its coefficient, coefficient of its image
  std::optional<BasisKey> image;
};

SymmetryReport check_symmetry(const CoeffTable &t, Relation r);

struct IdentityReport {
  bool pass = true;
  std::size_t samples = 0;
  std::optional<ParamPoint> witness;
  Rational lhs, rhs;
};

// Exhaustive sum over B of the binomial products against the product form.
IdentityReport check_aux_sum_1(const std::vector<unsigned> &A, const std::vector<Rational> &xs);
// Exhaustive sum over C (length r+1, total M-r). Requires M >= |A|.
IdentityReport check_aux_sum_2(const std::vector<unsigned> &A, unsigned M,
                               const std::vector<std::pair<Rational, Rational>> &xys);
// Terminating balanced 3F2 at 1 against its product evaluation.
IdentityReport check_pfaff_saalschutz(unsigned n, const Rational &a, const Rational &b,
                                      const Rational &c);

// S_{A,B}(rho^N) or S_{A,B}(rho^N f) expanded by applying the D-blocks and
// rho-insertions one at a time.
FormalExpr expand_sab_direct(const std::vector<unsigned> &A, const std::vector<unsigned> &B,
                             const Rational &L, unsigned N, bool with_f);

struct VerifyConfig {
  std::uint64_t seed = 1;
  unsigned samples = 12;
  unsigned max_k = 5;          // juhl
  unsigned max_m = 5;          // gen-juhl, f-insertion, self-adjoint (a)
  unsigned max_u_linear = 4;
  unsigned max_v_linear = 4;
  unsigned max_u_bilinear = 3;
  unsigned max_v_bilinear = 2;
  unsigned max_k_or = 3;       // Ovsienko-Redou type cells
  unsigned max_k_insertion = 4;
  unsigned max_weight = 7;     // first auxiliary sum
  unsigned aux2_max_degree = 5;
  unsigned aux2_extra_m = 4;
  unsigned ps_max_n = 8;
  unsigned soundness_k = 3;
  unsigned soundness_margin = 3;
  unsigned sab_max_m = 4;
  unsigned sab_max_entry = 3;
  unsigned sab_max_n = 4;
  unsigned threads = 0;        // 0 = available parallelism
};

struct SampleRecord {
  std::uint64_t index = 0;
  ParamPoint params;
  std::string outcome; // exact-match, proportional, mismatch, pass, fail, asymmetric
  std::optional<Rational> ratio;
  std::vector<KeyWitness> witnesses;
  std::optional<std::pair<Rational, Rational>> sides; // lhs, rhs of a failed identity
  std::optional<std::string> note;
};

struct CellResult {
  std::string suite;
  std::string name;
  std::string expectation;
  bool pass = true;
  unsigned degree_bound = 0;
  unsigned sample_count = 0;
  std::vector<SampleRecord> samples;
  std::vector<std::string> notes;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CellResult> cells;
  bool pass() const;
  std::size_t failed_cells() const;
};

const std::vector<std::string> &suite_names(); // excluding "all"

// Runs one named suite ("juhl", ..., "soundness") or "all". The result is a
// deterministic function of the config minus its thread count.
std::vector<SuiteReport> run_equivalence_suite(const std::string &suite, const VerifyConfig &config);

unsigned effective_threads(unsigned requested);

} // namespace orjuhl
