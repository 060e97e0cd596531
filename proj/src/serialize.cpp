#include "serialize.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "errors.hpp"

namespace orjuhl {

using ojson = nlohmann::ordered_json;

namespace {

ojson rational_json(const Rational &q) { return ojson{{"num", q.num_str()}, {"den", q.den_str()}}; }

Rational rational_from(const ojson &j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string())
    throw ParseError("rational must be {\"num\": str, \"den\": str}");
  return Rational::from_parts(j["num"].get<std::string>(), j["den"].get<std::string>());
}

ojson word_json(const MWord &w) {
  ojson a = ojson::array();
  for (unsigned x : w)
    a.push_back(x);
  return a;
}

MWord word_from(const ojson &j) {
  if (!j.is_array())
    throw ParseError("word must be an array of nonnegative integers");
  std::vector<unsigned> e;
  for (const auto &x : j) {
    if (!x.is_number_unsigned())
      throw ParseError("word entries must be nonnegative integers");
    e.push_back(x.get<unsigned>());
  }
  return MWord(std::move(e));
}

ojson params_json(const ParamPoint &p) {
  // values and integers share one namespace; std::map keeps labels sorted
  std::map<std::string, ojson> merged;
  for (const auto &[k, v] : p.values)
    merged[k] = rational_json(v);
  for (const auto &[k, v] : p.integers)
    merged[k] = v;
  ojson o = ojson::object();
  for (auto &[k, v] : merged)
    o[k] = std::move(v);
  return o;
}

ParamPoint params_from(const ojson &j) {
  if (!j.is_object())
    throw ParseError("params must be an object");
  ParamPoint p;
  for (const auto &[k, v] : j.items()) {
    if (v.is_number_integer()) {
      if (v.get<long>() < 0)
        throw ParseError("integer parameter '" + k + "' is negative");
      p.set_int(k, v.get<long>());
    } else {
      p.set(k, rational_from(v));
    }
  }
  return p;
}

ojson key_json(const BasisKey &k) {
  ojson t;
  t["outer"] = word_json(k.outer);
  t["f_order"] = k.kind == KeyKind::WithF ? ojson(k.f_order) : ojson(nullptr);
  t["left"] = word_json(k.left);
  t["right"] = k.kind == KeyKind::Pair ? word_json(k.right) : ojson(nullptr);
  return t;
}

BasisKey key_from(const ojson &t) {
  for (const char *f : {"outer", "f_order", "left", "right"})
    if (!t.contains(f))
      throw ParseError(std::string("term is missing '") + f + "'");
  const bool has_f = !t["f_order"].is_null();
  const bool has_right = !t["right"].is_null();
  if (has_f && has_right)
    throw ParseError("a term cannot carry both f_order and right");
  MWord outer = word_from(t["outer"]);
  MWord left = word_from(t["left"]);
  if (has_right)
    return BasisKey::pair(std::move(outer), std::move(left), word_from(t["right"]));
  if (has_f) {
    if (!t["f_order"].is_number_unsigned())
      throw ParseError("f_order must be a nonnegative integer");
    return BasisKey::with_f(std::move(outer), t["f_order"].get<unsigned>(), std::move(left));
  }
  if (!outer.empty())
    throw ParseError("plain terms have an empty outer word");
  return BasisKey::plain(std::move(left));
}

std::string csv_word(const MWord &w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string symbol(unsigned index) {
  const unsigned order = 2 * (index + 1);
  return order < 10 ? "M_" + std::to_string(order) : "M_{" + std::to_string(order) + "}";
}

std::string applied(const MWord &w, const char *arg) {
  if (w.empty())
    return arg;
  return "(" + word_to_latex(w) + " " + arg + ")";
}

std::string key_latex(const BasisKey &k) {
  switch (k.kind) {
  case KeyKind::Plain:
    return word_to_latex(k.left);
  case KeyKind::WithF: {
    std::string body = "f^{(" + std::to_string(k.f_order) + ")}\\," + applied(k.left, "u");
    return k.outer.empty() ? body : word_to_latex(k.outer) + "\\left(" + body + "\\right)";
  }
  case KeyKind::Pair: {
    std::string body = applied(k.left, "u") + "\\," + applied(k.right, "v");
    return k.outer.empty() ? body : word_to_latex(k.outer) + "\\left(" + body + "\\right)";
  }
  }
  return {};
}

std::size_t word_count(const BasisKey &k) { return k.outer.size() + k.left.size() + k.right.size(); }

ojson witness_json(const KeyWitness &w) {
  ojson o;
  o["key"] = key_json(w.key);
  o["first"] = rational_json(w.first);
  o["second"] = rational_json(w.second);
  return o;
}

} // namespace

std::string table_to_json(const CoeffTable &t) {
  ojson j;
  j["schema"] = kTableSchema;
  j["params"] = params_json(t.params);
  ojson terms = ojson::array();
  for (const auto &[k, c] : t.entries) {
    ojson term = key_json(k);
    term["coeff"] = rational_json(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

CoeffTable table_from_json(const std::string &text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != kTableSchema)
    throw ParseError(std::string("expected schema ") + kTableSchema);
  if (!j.contains("params") || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("table needs 'params' and 'terms'");
  CoeffTable t;
  t.params = params_from(j["params"]);
  std::optional<KeyKind> kind;
  for (const auto &term : j["terms"]) {
    BasisKey k = key_from(term);
    if (kind && *kind != k.kind)
      throw ParseError("terms mix key variants");
    kind = k.kind;
    if (!term.contains("coeff"))
      throw ParseError("term is missing 'coeff'");
    Rational c = rational_from(term["coeff"]);
    if (c.is_zero())
      throw ParseError("zero coefficients are not stored");
    if (t.entries.count(k))
      throw ParseError("duplicate term " + k.str());
    t.entries.emplace(std::move(k), c);
  }
  return t;
}

std::string table_to_csv(const CoeffTable &t) {
  std::ostringstream os;
  for (const auto &[k, v] : t.params.values)
    os << "# " << k << '=' << v << '\n';
  for (const auto &[k, v] : t.params.integers)
    os << "# " << k << '=' << v << '\n';
  os << "variant,outer,f_order,left,right,coeff\n";
  for (const auto &[k, c] : t.entries) {
    os << to_string(k.kind) << ',' << csv_word(k.outer) << ',';
    if (k.kind == KeyKind::WithF)
      os << k.f_order;
    os << ',' << csv_word(k.left) << ',' << csv_word(k.right) << ',' << c << '\n';
  }
  return os.str();
}

std::string word_to_latex(const MWord &w) {
  std::string out;
  // outermost symbol first
  for (std::size_t i = w.size(); i > 0;) {
    std::size_t j = i;
    while (j > 0 && w[j - 1] == w[i - 1])
      --j;
    const std::size_t run = i - j;
    if (!out.empty())
      out += ' ';
    out += symbol(w[i - 1]);
    if (run > 1)
      out += run < 10 ? "^" + std::to_string(run) : "^{" + std::to_string(run) + "}";
    i = j;
  }
  return out;
}

std::string rational_to_latex(const Rational &q) {
  if (q.is_integer())
    return q.num_str();
  std::string num = q.num_str();
  std::string sign;
  if (num[0] == '-') {
    sign = "-";
    num.erase(0, 1);
  }
  return sign + "\\frac{" + num + "}{" + q.den_str() + "}";
}

std::string table_to_latex(const CoeffTable &t) {
  if (t.empty())
    return "0";
  std::vector<std::pair<BasisKey, Rational>> items(t.entries.begin(), t.entries.end());
  std::stable_sort(items.begin(), items.end(), [](const auto &a, const auto &b) {
    return word_count(a.first) < word_count(b.first);
  });
  std::string out;
  bool first = true;
  for (const auto &[k, c] : items) {
    std::string body = key_latex(k);
    if (body.empty())
      body = k.kind == KeyKind::Pair ? "u\\,v" : "1";
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string term;
    if (mag == Rational(1))
      term = body;
    else
      term = rational_to_latex(mag) + (body == "1" ? "" : "\\, " + body);
    if (first)
      out += negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

std::string report_to_json(const SuiteReport &r) {
  ojson j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  j["cell_count"] = r.cells.size();
  j["failed_cells"] = r.failed_cells();
  ojson cells = ojson::array();
  for (const CellResult &c : r.cells) {
    ojson cj;
    cj["name"] = c.name;
    cj["expectation"] = c.expectation;
    cj["pass"] = c.pass;
    cj["degree_bound"] = c.degree_bound;
    cj["sample_count"] = c.sample_count;
    cj["notes"] = c.notes;
    ojson samples = ojson::array();
    for (const SampleRecord &s : c.samples) {
      ojson sj;
      sj["index"] = s.index;
      sj["params"] = params_json(s.params);
      sj["outcome"] = s.outcome;
      if (s.ratio)
        sj["ratio"] = rational_json(*s.ratio);
      if (!s.witnesses.empty()) {
        ojson w = ojson::array();
        for (const KeyWitness &kw : s.witnesses)
          w.push_back(witness_json(kw));
        sj["witnesses"] = std::move(w);
      }
      if (s.sides) {
        sj["lhs"] = rational_json(s.sides->first);
        sj["rhs"] = rational_json(s.sides->second);
      }
      if (s.note)
        sj["note"] = *s.note;
      samples.push_back(std::move(sj));
    }
    cj["samples"] = std::move(samples);
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

std::string report_summary(const SuiteReport &r) {
  std::ostringstream os;
  for (const CellResult &c : r.cells)
    os << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " (" << c.sample_count
       << " samples)\n";
  os << r.suite << ": " << (r.cells.size() - r.failed_cells()) << "/" << r.cells.size()
     << " cells passed\n";
  return os.str();
}

} // namespace orjuhl
