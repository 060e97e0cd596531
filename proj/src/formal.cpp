#include "formal.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace orjuhl {

MWord MWord::reversed() const {
  std::vector<unsigned> r(entries_.rbegin(), entries_.rend());
  return MWord(std::move(r));
}

unsigned MWord::degree() const {
  unsigned d = 0;
  for (unsigned a : entries_)
    d += a + 1;
  return d;
}

namespace {

std::string word_str(const MWord &w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i)
    os << (i ? "," : "") << w[i];
  os << ']';
  return os.str();
}

} // namespace

const char *to_string(KeyKind kind) {
  switch (kind) {
  case KeyKind::Plain:
    return "plain";
  case KeyKind::WithF:
    return "with-f";
  case KeyKind::Pair:
    return "pair";
  }
  return "?";
}

const char *to_string(Provenance p) {
  switch (p) {
  case Provenance::Oracle:
    return "oracle";
  case Provenance::ClosedForm:
    return "closed-form";
  case Provenance::Unspecified:
    break;
  }
  return "unspecified";
}

unsigned BasisKey::degree() const {
  unsigned d = outer.degree() + left.degree() + right.degree();
  return kind == KeyKind::WithF ? d + f_order : d;
}

std::string BasisKey::str() const {
  switch (kind) {
  case KeyKind::Plain:
    return word_str(left);
  case KeyKind::WithF:
    return "F(" + word_str(outer) + "," + std::to_string(f_order) + "," + word_str(left) + ")";
  case KeyKind::Pair:
    return "P(" + word_str(outer) + "," + word_str(left) + "," + word_str(right) + ")";
  }
  return "?";
}

FormalExpr FormalExpr::unit(KeyKind kind, unsigned rho_power) {
  FormalExpr e;
  BasisKey key;
  key.kind = kind;
  e.add_term(rho_power, key, Rational(1));
  return e;
}

void FormalExpr::check_kind(KeyKind k) {
  if (kind_ && *kind_ != k)
    throw VariantMismatch(std::string("expression holds ") + to_string(*kind_) +
                          " keys, got " + to_string(k));
  kind_ = k;
}

void FormalExpr::add_term(unsigned rho_power, const BasisKey &key, const Rational &coeff) {
  add_term(Term{rho_power, key}, coeff);
}

void FormalExpr::add_term(Term term, const Rational &coeff) {
  if (coeff.is_zero())
    return;
  check_kind(term.key.kind);
  auto [it, inserted] = terms_.try_emplace(std::move(term), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Rational FormalExpr::coefficient(unsigned rho_power, const BasisKey &key) const {
  auto it = terms_.find(Term{rho_power, key});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned FormalExpr::max_rho_power() const {
  unsigned m = 0;
  for (const auto &[term, c] : terms_)
    m = std::max(m, term.rho_power);
  return m;
}

FormalExpr add(const FormalExpr &a, const FormalExpr &b) {
  if (a.kind() && b.kind() && *a.kind() != *b.kind())
    throw VariantMismatch("add: basis variants differ");
  FormalExpr r = a;
  for (const auto &[term, c] : b.terms())
    r.add_term(term, c);
  return r;
}

FormalExpr scale(const FormalExpr &e, const Rational &c) {
  FormalExpr r;
  if (c.is_zero())
    return r;
  for (const auto &[term, v] : e.terms())
    r.add_term(term, v * c);
  return r;
}

FormalExpr attach_M(const FormalExpr &e, unsigned symbol_index, Slot slot) {
  FormalExpr r;
  for (const auto &[term, c] : e.terms()) {
    Term t = term;
    BasisKey &k = t.key;
    switch (k.kind) {
    case KeyKind::Plain:
      if (slot != Slot::Inner)
        throw InvalidArgument("plain keys accept only the inner slot");
      k.left.push_outer(symbol_index);
      break;
    case KeyKind::WithF:
      if (slot == Slot::Inner)
        k.left.push_outer(symbol_index);
      else if (slot == Slot::Outer)
        k.outer.push_outer(symbol_index);
      else
        throw InvalidArgument("with-f keys accept the inner or outer slot");
      break;
    case KeyKind::Pair:
      if (slot == Slot::Left)
        k.left.push_outer(symbol_index);
      else if (slot == Slot::Right)
        k.right.push_outer(symbol_index);
      else if (slot == Slot::Outer)
        k.outer.push_outer(symbol_index);
      else
        throw InvalidArgument("pair keys accept the left, right or outer slot");
      break;
    }
    r.add_term(std::move(t), c);
  }
  return r;
}

FormalExpr pair_product(const FormalExpr &eu, const FormalExpr &ev) {
  auto require_plain = [](const FormalExpr &e) {
    if (e.kind() && *e.kind() != KeyKind::Plain)
      throw VariantMismatch("pair_product needs plain factors");
  };
  require_plain(eu);
  require_plain(ev);
  FormalExpr r;
  for (const auto &[tu, cu] : eu.terms())
    for (const auto &[tv, cv] : ev.terms())
      r.add_term(tu.rho_power + tv.rho_power, BasisKey::pair({}, tu.key.left, tv.key.left),
                 cu * cv);
  return r;
}

FormalExpr inject_f(const FormalExpr &e) {
  if (e.kind() && *e.kind() != KeyKind::Plain)
    throw VariantMismatch("inject_f needs a plain expression");
  FormalExpr r;
  for (const auto &[t, c] : e.terms())
    r.add_term(t.rho_power, BasisKey::with_f({}, 0, t.key.left), c);
  return r;
}

std::optional<KeyKind> CoeffTable::kind() const {
  if (entries.empty())
    return std::nullopt;
  return entries.begin()->first.kind;
}

Rational CoeffTable::coefficient(const BasisKey &key) const {
  auto it = entries.find(key);
  return it == entries.end() ? Rational(0) : it->second;
}

void CoeffTable::add(const BasisKey &key, const Rational &coeff) {
  if (coeff.is_zero())
    return;
  if (auto k = kind(); k && *k != key.kind)
    throw VariantMismatch("coefficient table mixes basis variants");
  auto [it, inserted] = entries.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      entries.erase(it);
  }
}

CoeffTable scale(const CoeffTable &t, const Rational &c) {
  CoeffTable r;
  r.params = t.params;
  r.provenance = t.provenance;
  if (c.is_zero())
    return r;
  for (const auto &[k, v] : t.entries)
    r.entries.emplace(k, v * c);
  return r;
}

} // namespace orjuhl
