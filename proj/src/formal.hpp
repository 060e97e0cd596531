#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "sampling.hpp"

namespace orjuhl {

// Composition M_{2(A_r+1)} ... M_{2(A_1+1)} stored as [A_1, ..., A_r]:
// index 0 is applied first (innermost).
class MWord {
public:
  MWord() = default;
  MWord(std::initializer_list<unsigned> entries) : entries_(entries) {}
  explicit MWord(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

  const std::vector<unsigned> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Appends a new outermost (last-applied) symbol.
  void push_outer(unsigned symbol) { entries_.push_back(symbol); }
  MWord reversed() const;
  // Sum of (A_i + 1): the rho-degree this word absorbs.
  unsigned degree() const;

  friend auto operator<=>(const MWord &, const MWord &) = default;
  friend bool operator==(const MWord &, const MWord &) = default;

private:
  std::vector<unsigned> entries_;
};

enum class KeyKind : std::uint8_t { Plain, WithF, Pair };

const char *to_string(KeyKind kind);

// One noncommutative basis element.
//   Plain : M_left(u)
//   WithF : M_outer( f^{(f_order)} M_left(u) )
//   Pair  : M_outer( M_left(u) M_right(v) )
struct BasisKey {
  KeyKind kind = KeyKind::Plain;
  MWord outer;
  unsigned f_order = 0;
  MWord left;
  MWord right;

  static BasisKey plain(MWord word) { return {KeyKind::Plain, {}, 0, std::move(word), {}}; }
  static BasisKey with_f(MWord outer, unsigned f_order, MWord inner) {
    return {KeyKind::WithF, std::move(outer), f_order, std::move(inner), {}};
  }
  static BasisKey pair(MWord outer, MWord left, MWord right) {
    return {KeyKind::Pair, std::move(outer), 0, std::move(left), std::move(right)};
  }

  // Total rho-degree: sum of word degrees plus the f-derivative order.
  unsigned degree() const;
  std::string str() const;

  friend auto operator<=>(const BasisKey &, const BasisKey &) = default;
  friend bool operator==(const BasisKey &, const BasisKey &) = default;
};

enum class Slot { Inner, Left, Right, Outer };

struct Term {
  unsigned rho_power = 0;
  BasisKey key;
  friend auto operator<=>(const Term &, const Term &) = default;
  friend bool operator==(const Term &, const Term &) = default;
};

// rho-graded linear combination of basis keys with exact coefficients.
class FormalExpr {
public:
  using Map = std::map<Term, Rational>;

  FormalExpr() = default;
  static FormalExpr unit(KeyKind kind = KeyKind::Plain, unsigned rho_power = 0);

  void add_term(unsigned rho_power, const BasisKey &key, const Rational &coeff);
  void add_term(Term term, const Rational &coeff);

  const Map &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<KeyKind> kind() const { return kind_; }
  Rational coefficient(unsigned rho_power, const BasisKey &key) const;
  unsigned max_rho_power() const;

  friend bool operator==(const FormalExpr &a, const FormalExpr &b) { return a.terms_ == b.terms_; }

private:
  void check_kind(KeyKind k);

  Map terms_;
  std::optional<KeyKind> kind_;
};

FormalExpr add(const FormalExpr &a, const FormalExpr &b);
FormalExpr scale(const FormalExpr &e, const Rational &c);
FormalExpr attach_M(const FormalExpr &e, unsigned symbol_index, Slot slot);
FormalExpr pair_product(const FormalExpr &eu, const FormalExpr &ev);
FormalExpr inject_f(const FormalExpr &e);

enum class Provenance { Unspecified, Oracle, ClosedForm };

const char *to_string(Provenance p);

// Coefficients of the rho = 0 slice of an expansion.
struct CoeffTable {
  std::map<BasisKey, Rational> entries;
  ParamPoint params;
  Provenance provenance = Provenance::Unspecified;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  std::optional<KeyKind> kind() const;
  Rational coefficient(const BasisKey &key) const;
  // Accumulates; zero results are erased.
  void add(const BasisKey &key, const Rational &coeff);

  friend bool operator==(const CoeffTable &a, const CoeffTable &b) {
    return a.entries == b.entries && a.params == b.params;
  }
};

CoeffTable scale(const CoeffTable &t, const Rational &c);

} // namespace orjuhl
