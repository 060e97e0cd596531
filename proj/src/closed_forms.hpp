#pragma once

#include <vector>

#include "formal.hpp"
#include "oracle.hpp"

namespace orjuhl {

enum class SeqRole { AWord, BExponents, CExponents };

struct IndexSeq {
  std::vector<unsigned> entries;
  SeqRole role = SeqRole::AWord;

  static IndexSeq a(std::vector<unsigned> e) { return {std::move(e), SeqRole::AWord}; }
  static IndexSeq b(std::vector<unsigned> e) { return {std::move(e), SeqRole::BExponents}; }
  static IndexSeq c(std::vector<unsigned> e) { return {std::move(e), SeqRole::CExponents}; }
  unsigned sum() const;
  std::size_t size() const { return entries.size(); }
};

struct WordTuple {
  unsigned R = 0;
  std::vector<MWord> words;
};

// All words of a given degree (compositions of `total`), in canonical order.
std::vector<MWord> words_of_degree(unsigned total);

// Every tuple of `slots` words (and optionally R) with sum of word degrees
// plus R equal to total.
std::vector<WordTuple> enumerate_words(unsigned total, unsigned slots, bool with_R);

// All sequences of `parts` nonnegative integers summing to `total`.
std::vector<std::vector<unsigned>> weak_compositions(unsigned total, unsigned parts);

struct SabResult {
  long rho_exponent = 0;
  Rational coeff;
};

// Coefficient and rho-exponent of S_{A,B}(rho^N): the D-blocks of lengths
// B_0..B_r separated by P_{A_1}..P_{A_r}. Requires |B| = |A|+1 and
// r + sum B = M; throws InvalidArgument otherwise.
SabResult sab_coeff(const IndexSeq &A, const IndexSeq &B, unsigned M, const Rational &L,
                    unsigned N);
// True when N + sum_{j<=i} A_j < sum_{j<=i} B_j for some i.
bool sab_vanishing_condition(const IndexSeq &A, const IndexSeq &B, unsigned N);

// Coefficient of rho^{R+N+sum A-sum B} f^{(R)} in S_{A,B}(rho^N f).
SabResult sab_f_coeff(const IndexSeq &A, const IndexSeq &B, unsigned M, const Rational &L,
                      unsigned N, unsigned R);

CoeffTable cf_DML_PN(unsigned M, const Rational &L, unsigned N);
// Keys WithF{outer = A, R, inner = []}: the M-word acts on f^{(R)} u.
CoeffTable cf_DML_PN_f(unsigned M, const Rational &L, unsigned N);
CoeffTable cf_P2k(unsigned k);

// Printed lacks a word-independent factor L^2 relative to the defining sum;
// Corrected includes it.
enum class Normalization { Printed, Corrected };

const char *to_string(Normalization n);

CoeffTable cf_bilinear_general(const BilinearParams &p, Normalization norm);
CoeffTable cf_D2k(unsigned k, const Rational &n, Normalization norm);
CoeffTable cf_linear_general(const LinearParams &p);
CoeffTable cf_D2kI(unsigned k, const Rational &ell);

} // namespace orjuhl
