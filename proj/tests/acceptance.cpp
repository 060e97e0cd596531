// One line per acceptance criterion; exit status is nonzero if any fails.
// Usage: acceptance <path-to-orjuhl-cli>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "closed_forms.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "verifier.hpp"

using namespace orjuhl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void require(bool cond, const std::string &what) {
    if (!cond) {
      pass = false;
      details.push_back(what);
    }
  }
};

std::map<std::string, SuiteReport> by_suite;

const SuiteReport &suite(const std::string &name) { return by_suite.at(name); }

std::vector<const CellResult *> cells_with_prefix(const std::string &s, const std::string &prefix) {
  std::vector<const CellResult *> out;
  for (const auto &c : suite(s).cells)
    if (c.name.rfind(prefix, 0) == 0)
      out.push_back(&c);
  return out;
}

// Every cell under the prefix passed with at least min_samples samples, all
// with the given outcome; and there are exactly expected_cells of them.
void require_cells(Outcome &o, const std::string &s, const std::string &prefix,
                   std::size_t expected_cells, unsigned min_samples, const std::string &outcome) {
  auto cells = cells_with_prefix(s, prefix);
  o.require(cells.size() == expected_cells, s + "/" + prefix + ": expected " +
                                                std::to_string(expected_cells) + " cells, found " +
                                                std::to_string(cells.size()));
  for (const CellResult *c : cells) {
    o.require(c->pass, s + ": " + c->name + " failed");
    o.require(c->samples.size() >= min_samples, s + ": " + c->name + " has only " +
                                                    std::to_string(c->samples.size()) + " samples");
    if (!outcome.empty())
      for (const auto &r : c->samples)
        o.require(r.outcome == outcome, s + ": " + c->name + " sample " + std::to_string(r.index) +
                                            " is " + r.outcome);
  }
}

unsigned count_tuples(unsigned max_u, unsigned max_v, bool square) {
  unsigned n = 0;
  for (unsigned U = 0; U <= max_u; ++U)
    n += (square ? (U + 1) * (U + 1) : (U + 1)) * (max_v + 1);
  return n;
}

Outcome gjms() {
  Outcome o;
  require_cells(o, "juhl", "gjms k=", 5, 1, "exact-match");
  for (unsigned k = 1; k <= 5; ++k) {
    o.require(cf_P2k(k).entries == oracle_P2k(k).entries, "P_2k differs at k=" + std::to_string(k));
    o.require(check_symmetry(oracle_P2k(k), Relation::Reversal).pass,
              "P_2k not palindromic at k=" + std::to_string(k));
  }
  return o;
}

Outcome generalized_juhl() {
  Outcome o;
  require_cells(o, "gen-juhl", "dml M=", 21, 12, "exact-match");
  return o;
}

Outcome f_insertion() {
  Outcome o;
  require_cells(o, "f-insertion", "dml-f M=", 21, 12, "exact-match");
  return o;
}

Outcome linear() {
  Outcome o;
  require_cells(o, "linear", "linear-general", count_tuples(4, 4, false), 12, "exact-match");
  require_cells(o, "linear", "insertion k=", 4, 12, "");
  for (const Rational &ell : {Rational(2), Rational(-5, 3), Rational(17, 4)}) {
    CoeffTable t = oracle_D2kI(1, ell);
    CoeffTable pinned;
    pinned.add(BasisKey::with_f({}, 0, {0}), ell);
    pinned.add(BasisKey::with_f({0}, 0, {}), ell);
    pinned.add(BasisKey::with_f({}, 1, {}), Rational(-2) * ell * ell);
    o.require(t.entries == pinned.entries, "first-order linear table differs at ell=" + ell.str());
    o.require(cf_D2kI(1, ell).entries == pinned.entries,
              "first-order closed form differs at ell=" + ell.str());
  }
  return o;
}

Outcome bilinear() {
  Outcome o;
  auto cells = cells_with_prefix("bilinear", "bilinear-general");
  require_cells(o, "bilinear", "bilinear-general", count_tuples(3, 2, true), 12, "");
  std::size_t proportional = 0;
  for (const CellResult *c : cells)
    for (const auto &r : c->samples) {
      const Rational L = r.params.value("L");
      if (r.outcome == "proportional") {
        ++proportional;
        o.require(r.ratio && *r.ratio == L * L,
                  c->name + ": ratio is not L^2 at sample " + std::to_string(r.index));
      } else {
        o.require(r.outcome == "exact-match" && r.witnesses.empty(),
                  c->name + ": printed form is " + r.outcome);
      }
      o.require(r.note && *r.note == "corrected form: exact-match",
                c->name + ": corrected form not exact at sample " + std::to_string(r.index));
    }
  o.details.push_back(std::to_string(proportional) +
                      " sampled points proportional with ratio exactly L^2, corrected form exact");
  require_cells(o, "bilinear", "ovsienko-redou k=", 3, 12, "proportional");
  return o;
}

Outcome selfadjoint() {
  Outcome o;
  require_cells(o, "selfadjoint", "balanced M=", 21, 1, "");
  auto unbalanced = cells_with_prefix("selfadjoint", "unbalanced");
  o.require(!unbalanced.empty(), "no asymmetry witness cells");
  for (const CellResult *c : unbalanced) {
    o.require(c->pass, c->name + " failed");
    o.require(!c->samples.empty() && !c->samples[0].witnesses.empty(),
              c->name + " carries no asymmetry witness");
  }
  require_cells(o, "selfadjoint", "pair-relations k=", 3, 1, "");
  require_cells(o, "selfadjoint", "insertion-swap k=", 3, 1, "");
  return o;
}

Outcome appendix() {
  Outcome o;
  const auto &rep = suite("appendix");
  std::size_t failed = 0, below_degree = 0;
  for (const auto &c : rep.cells) {
    if (c.pass)
      continue;
    ++failed;
    for (const auto &n : c.notes)
      if (n == "M is below the degree of A")
        ++below_degree;
  }
  for (const char *prefix : {"aux-sum-1", "aux-sum-2", "pfaff-saalschutz"})
    for (const CellResult *c : cells_with_prefix("appendix", prefix))
      o.require(c->samples.size() >= 12, c->name + " has fewer than 12 samples");
  o.require(failed == 0, std::to_string(failed) + " of " + std::to_string(rep.cells.size()) +
                             " cells fail");
  if (failed) {
    std::ostringstream os;
    os << below_degree << " of the failing cells are second-sum cells with |A| <= M < sum(A_i+1); "
       << "the product formula does not hold there";
    o.details.push_back(os.str());
    for (const auto &c : rep.cells)
      if (!c.pass) {
        o.details.push_back("first failure: " + c.name);
        break;
      }
  }
  return o;
}

Outcome soundness() {
  Outcome o;
  for (const char *family : {"gjms", "dml", "dml-f", "ovsienko-redou", "insertion",
                             "linear-general", "bilinear-general"}) {
    auto cells = cells_with_prefix("soundness", std::string("pruning ") + family + " ");
    o.require(!cells.empty(), std::string("no pruning cells for ") + family);
    for (const CellResult *c : cells)
      o.require(c->pass, c->name + " failed");
  }
  require_cells(o, "soundness", "sab-terms M=", 5, 0, "");
  return o;
}

std::string slurp(const fs::path &p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Outcome determinism(const std::string &cli) {
  Outcome o;
  const fs::path base =
      fs::temp_directory_path() / ("orjuhl-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(base);
  const std::vector<std::string> runs{"default", "one-thread"};
  for (const auto &run : runs) {
    std::string cmd = "\"" + cli + "\" verify all --seed 42 --report-dir \"" +
                      (base / run).string() + "\"" + (run == "one-thread" ? " --threads 1" : "") +
                      " > /dev/null";
    int rc = std::system(cmd.c_str());
    o.require(WIFEXITED(rc), "cli run '" + run + "' did not exit normally");
  }
  for (const auto &name : suite_names()) {
    const std::string file = name + ".json";
    const fs::path a = base / runs[0] / "verify" / "42" / file;
    const fs::path b = base / runs[1] / "verify" / "42" / file;
    if (!fs::exists(a) || !fs::exists(b)) {
      o.require(false, "missing report " + file);
      continue;
    }
    const std::string ta = slurp(a), tb = slurp(b);
    o.require(ta == tb, file + " differs between runs");
    o.require(ta == report_to_json(suite(name)), file + " differs from the in-process report");
  }
  fs::remove_all(base);
  return o;
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <orjuhl-cli>\n";
    return 2;
  }
  VerifyConfig cfg;
  cfg.seed = 42;
  for (auto &r : run_equivalence_suite("all", cfg))
    by_suite.emplace(r.suite, std::move(r));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 gjms closed form equals expansion, palindromic", gjms},
      {"2 generalized juhl formula, M <= 5", generalized_juhl},
      {"3 f-insertion formula, M <= 5", f_insertion},
      {"4 linear family U,V <= 4 and its specialization", linear},
      {"5 bilinear family: uniform L^2 ratio, corrected form exact", bilinear},
      {"6 self-adjointness relations", selfadjoint},
      {"7 auxiliary sums and Pfaff-Saalschutz", appendix},
      {"8 pruning soundness and vanishing condition", soundness},
      {"9 byte-identical reports for verify all --seed 42", [&] { return determinism(argv[1]); }},
  };
  int failed = 0;
  for (const auto &[label, fn] : criteria) {
    Outcome o = fn();
    std::cout << (o.pass ? "PASS " : "FAIL ") << label << "\n";
    const std::size_t shown = std::min<std::size_t>(o.details.size(), 8);
    for (std::size_t i = 0; i < shown; ++i)
      std::cout << "     " << o.details[i] << "\n";
    if (o.details.size() > shown)
      std::cout << "     ... " << (o.details.size() - shown) << " more\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
