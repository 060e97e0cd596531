#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "orjuhl/orjuhl.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
  char *p = nullptr;
  ~OwnedString() { orj_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Failure {
  orj_status status;
  std::string message;
};

void check(orj_status s) {
  if (s != ORJ_OK)
    throw Failure{s, orj_last_error()};
}

int exit_code_for(orj_status s) {
  return (s == ORJ_ERR_INVALID_ARGUMENT || s == ORJ_ERR_PARSE) ? kExitUsage : kExitFailure;
}

struct ExpandOptions {
  std::string family;
  std::string source = "closed-form";
  std::string format = "json";
  std::string output;
  std::map<std::string, std::string> rationals; // label -> "p/q"
  std::map<std::string, long> integers;
};

// Rational-valued indeterminates and integer parameters each family needs.
const std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> &
family_inputs() {
  static const std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> m{
      {"gjms", {{}, {"k"}}},
      {"or", {{"n"}, {"k"}}},
      {"linear", {{"ell"}, {"k"}}},
      {"dml", {{"L"}, {"M", "N"}}},
      {"dml-f", {{"L"}, {"M", "N"}}},
      {"bilinear", {{"L", "K*", "K⋄"}, {"U", "V", "N*", "N⋄"}}},
      {"linear-general", {{"L", "K"}, {"U", "V", "N"}}},
  };
  return m;
}

std::string render(const ExpandOptions &o) {
  std::unique_ptr<orj_params, decltype(&orj_params_destroy)> params(nullptr, orj_params_destroy);
  orj_params *raw = nullptr;
  check(orj_params_create(&raw));
  params.reset(raw);
  const auto &[rats, ints] = family_inputs().at(o.family);
  for (const auto &label : rats) {
    auto it = o.rationals.find(label);
    if (it == o.rationals.end())
      throw Failure{ORJ_ERR_INVALID_ARGUMENT, o.family + " needs a value for " + label};
    check(orj_params_set_rational(params.get(), label.c_str(), it->second.c_str()));
  }
  for (const auto &label : ints) {
    auto it = o.integers.find(label);
    if (it == o.integers.end())
      throw Failure{ORJ_ERR_INVALID_ARGUMENT, o.family + " needs a value for " + label};
    check(orj_params_set_integer(params.get(), label.c_str(), it->second));
  }
  orj_table *table = nullptr;
  check(orj_expand(o.family.c_str(), o.source.c_str(), params.get(), &table));
  std::unique_ptr<orj_table, decltype(&orj_table_destroy)> owned(table, orj_table_destroy);
  OwnedString s;
  if (o.format == "json")
    check(orj_table_to_json(table, &s.p));
  else if (o.format == "csv")
    check(orj_table_to_csv(table, &s.p));
  else
    check(orj_table_to_latex(table, &s.p));
  std::string text = s.str();
  if (o.format == "latex")
    text += "\n";
  return text;
}

void emit(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  if (fs::path(path).has_parent_path())
    fs::create_directories(fs::path(path).parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Failure{ORJ_ERR_INTERNAL, "cannot write " + path};
  f << text;
}

void add_family_options(CLI::App *cmd, ExpandOptions &o) {
  cmd->add_option("family", o.family, "gjms, or, linear, dml, dml-f, bilinear, linear-general")
      ->required()
      ->check(CLI::IsMember({"gjms", "or", "linear", "dml", "dml-f", "bilinear", "linear-general"}));
  cmd->add_option("--source", o.source, "oracle, closed-form or printed")
      ->check(CLI::IsMember({"oracle", "closed-form", "printed"}));
  cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  struct Rat {
    const char *flag;
    const char *label;
  };
  for (Rat r : {Rat{"--n", "n"}, Rat{"--ell", "ell"}, Rat{"--L", "L"}, Rat{"--K", "K"},
                Rat{"--K-star", "K*"}, Rat{"--K-diamond", "K⋄"}}) {
    std::string label = r.label;
    cmd->add_option_function<std::string>(
        r.flag, [&o, label](const std::string &v) { o.rationals[label] = v; },
        "rational value p or p/q for " + label);
  }
  for (Rat r : {Rat{"--k", "k"}, Rat{"--M", "M"}, Rat{"--N", "N"}, Rat{"--U", "U"},
                Rat{"--V", "V"}, Rat{"--N-star", "N*"}, Rat{"--N-diamond", "N⋄"}}) {
    std::string label = r.label;
    cmd->add_option_function<long>(
           r.flag, [&o, label](const long &v) { o.integers[label] = v; },
           "nonnegative integer " + label)
        ->check(CLI::NonNegativeNumber);
  }
}

struct VerifyOptions {
  std::string suite;
  unsigned long long seed = 1;
  std::optional<unsigned> samples, max_k, max_u, max_weight, threads;
  std::string report_dir = "reports";
};

int run_verify(const VerifyOptions &v) {
  orj_config *raw = nullptr;
  check(orj_config_create(&raw));
  std::unique_ptr<orj_config, decltype(&orj_config_destroy)> cfg(raw, orj_config_destroy);
  check(orj_config_set(raw, "seed", v.seed));
  std::optional<unsigned> threads = v.threads;
  if (!threads) {
    if (const char *env = std::getenv("ORJUHL_THREADS")) {
      try {
        threads = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception &) {
        throw Failure{ORJ_ERR_INVALID_ARGUMENT, "ORJUHL_THREADS must be a nonnegative integer"};
      }
    }
  }
  const std::pair<const char *, const std::optional<unsigned> *> settings[] = {
      {"samples", &v.samples}, {"max-k", &v.max_k},     {"max-u", &v.max_u},
      {"max-weight", &v.max_weight}, {"threads", &threads}};
  for (const auto &[key, val] : settings)
    if (*val)
      check(orj_config_set(raw, key, **val));

  orj_report *rep = nullptr;
  check(orj_verify(v.suite.c_str(), raw, &rep));
  std::unique_ptr<orj_report, decltype(&orj_report_destroy)> report(rep, orj_report_destroy);

  const fs::path dir = fs::path(v.report_dir) / "verify" / std::to_string(v.seed);
  fs::create_directories(dir);
  for (size_t i = 0; i < orj_report_suite_count(rep); ++i) {
    OwnedString json;
    check(orj_report_suite_json(rep, i, &json.p));
    emit(json.str(), (dir / (std::string(orj_report_suite_name(rep, i)) + ".json")).string());
  }
  OwnedString summary;
  check(orj_report_summary(rep, &summary.p));
  emit(summary.str(), (dir / "summary.txt").string());
  std::cout << summary.str();
  const bool ok = orj_report_passed(rep) != 0;
  std::cout << (ok ? "verification passed" : "verification FAILED") << " (reports in "
            << dir.string() << ")\n";
  return ok ? kExitPass : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact expansions of R-operator compositions and their closed forms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", orj_version());

  ExpandOptions expand_opts;
  auto *expand = app.add_subcommand("expand", "emit a coefficient table");
  add_family_options(expand, expand_opts);
  expand->add_option("--format", expand_opts.format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));

  ExpandOptions table_opts;
  table_opts.format = "latex";
  auto *table = app.add_subcommand("table", "render a coefficient table as LaTeX");
  add_family_options(table, table_opts);

  VerifyOptions verify_opts;
  auto *verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", verify_opts.suite,
                     "juhl, gen-juhl, f-insertion, linear, bilinear, selfadjoint, appendix, "
                     "soundness or all")
      ->required()
      ->check(CLI::IsMember({"juhl", "gen-juhl", "f-insertion", "linear", "bilinear",
                             "selfadjoint", "appendix", "soundness", "all"}));
  verify->add_option("--seed", verify_opts.seed, "sampling seed");
  verify->add_option("--samples", verify_opts.samples, "minimum samples per cell")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-k", verify_opts.max_k, "largest k for the juhl suite");
  verify->add_option("--max-u", verify_opts.max_u, "largest U for the general families");
  verify->add_option("--max-weight", verify_opts.max_weight,
                     "largest word degree for the first auxiliary sum");
  verify->add_option("--threads", verify_opts.threads,
                     "worker threads (default: ORJUHL_THREADS, then available parallelism)");
  verify->add_option("--report-dir", verify_opts.report_dir, "root directory for reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*expand) {
      emit(render(expand_opts), expand_opts.output);
      return kExitPass;
    }
    if (*table) {
      emit(render(table_opts), table_opts.output);
      return kExitPass;
    }
    return run_verify(verify_opts);
  } catch (const Failure &f) {
    std::cerr << "orjuhl: " << orj_status_name(f.status) << ": " << f.message << "\n";
    return exit_code_for(f.status);
  } catch (const std::exception &e) {
    std::cerr << "orjuhl: " << e.what() << "\n";
    return kExitFailure;
  }
}
