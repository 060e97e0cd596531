#include "orjuhl/orjuhl.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "closed_forms.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "verifier.hpp"

using namespace orjuhl;

struct orj_params {
  ParamPoint point;
};
struct orj_table {
  CoeffTable table;
};
struct orj_config {
  VerifyConfig config;
};
struct orj_report {
  std::vector<SuiteReport> suites;
};

namespace {

thread_local std::string last_error;

orj_status fail(orj_status s, const std::string &msg) {
  last_error = msg;
  return s;
}

orj_status guarded(const std::function<void()> &fn) {
  try {
    fn();
    last_error.clear();
    return ORJ_OK;
  } catch (const PoleError &e) {
    return fail(ORJ_ERR_POLE, e.what());
  } catch (const VariantMismatch &e) {
    return fail(ORJ_ERR_VARIANT, e.what());
  } catch (const BudgetExhausted &e) {
    return fail(ORJ_ERR_BUDGET, e.what());
  } catch (const SamplingExhausted &e) {
    return fail(ORJ_ERR_SAMPLING, e.what());
  } catch (const ParseError &e) {
    return fail(ORJ_ERR_PARSE, e.what());
  } catch (const InvalidArgument &e) {
    return fail(ORJ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception &e) {
    return fail(ORJ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ORJ_ERR_INTERNAL, "unknown error");
  }
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (p)
    std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

unsigned uint_param(const ParamPoint &p, const char *label) {
  long v = p.integer(label);
  return static_cast<unsigned>(v);
}

CoeffTable expand(const std::string &family, const std::string &source, const ParamPoint &p) {
  bool oracle = false;
  Normalization norm = Normalization::Corrected;
  if (source == "oracle")
    oracle = true;
  else if (source == "printed")
    norm = Normalization::Printed;
  else if (source != "closed-form")
    throw InvalidArgument("unknown source '" + source + "'");

  if (family == "gjms") {
    unsigned k = uint_param(p, "k");
    return oracle ? oracle_P2k(k) : cf_P2k(k);
  }
  if (family == "or") {
    unsigned k = uint_param(p, "k");
    const Rational &n = p.value("n");
    return oracle ? oracle_D2k(k, n) : cf_D2k(k, n, norm);
  }
  if (family == "linear") {
    unsigned k = uint_param(p, "k");
    const Rational &ell = p.value("ell");
    return oracle ? oracle_D2kI(k, ell) : cf_D2kI(k, ell);
  }
  if (family == "dml" || family == "dml-f") {
    unsigned M = uint_param(p, "M"), N = uint_param(p, "N");
    const Rational &L = p.value("L");
    if (family == "dml")
      return oracle ? oracle_DML_PN(M, L, N) : cf_DML_PN(M, L, N);
    return oracle ? oracle_DML_PN_f(M, L, N) : cf_DML_PN_f(M, L, N);
  }
  if (family == "bilinear") {
    BilinearParams bp{uint_param(p, "U"), uint_param(p, "V"), p.value("L"), p.value("K*"),
                      p.value("K⋄"),      uint_param(p, "N*"), uint_param(p, "N⋄")};
    return oracle ? oracle_bilinear_general(bp) : cf_bilinear_general(bp, norm);
  }
  if (family == "linear-general") {
    LinearParams lp{uint_param(p, "U"), uint_param(p, "V"), p.value("L"), p.value("K"),
                    uint_param(p, "N")};
    return oracle ? oracle_linear_general(lp) : cf_linear_general(lp);
  }
  throw InvalidArgument("unknown family '" + family + "'");
}

} // namespace

extern "C" {

const char *orj_version(void) { return "1.0.0"; }

const char *orj_status_name(orj_status status) {
  switch (status) {
  case ORJ_OK:
    return "ok";
  case ORJ_ERR_INVALID_ARGUMENT:
    return "invalid-argument";
  case ORJ_ERR_PARSE:
    return "parse-error";
  case ORJ_ERR_POLE:
    return "pole";
  case ORJ_ERR_VARIANT:
    return "variant-mismatch";
  case ORJ_ERR_BUDGET:
    return "budget-exhausted";
  case ORJ_ERR_SAMPLING:
    return "sampling-exhausted";
  case ORJ_ERR_INTERNAL:
    return "internal";
  }
  return "unknown";
}

const char *orj_last_error(void) { return last_error.c_str(); }

void orj_string_free(char *s) { std::free(s); }

orj_status orj_params_create(orj_params **out) {
  if (!out)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new orj_params; });
}

void orj_params_destroy(orj_params *p) { delete p; }

orj_status orj_params_set_rational(orj_params *p, const char *label, const char *value) {
  if (!p || !label || !value)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { p->point.set(label, Rational::parse(value)); });
}

orj_status orj_params_set_integer(orj_params *p, const char *label, long value) {
  if (!p || !label)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { p->point.set_int(label, value); });
}

orj_status orj_expand(const char *family, const char *source, const orj_params *params,
                      orj_table **out) {
  if (!family || !source || !params || !out)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new orj_table{expand(family, source, params->point)}; });
}

void orj_table_destroy(orj_table *t) { delete t; }

size_t orj_table_size(const orj_table *t) { return t ? t->table.size() : 0; }

#define ORJ_STRING_OUT(obj, out, expr)                                                         \
  if (!(obj) || !(out))                                                                        \
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");                                   \
  return guarded([&] { *(out) = dup(expr); })

orj_status orj_table_to_json(const orj_table *t, char **out) {
  ORJ_STRING_OUT(t, out, table_to_json(t->table));
}

orj_status orj_table_to_csv(const orj_table *t, char **out) {
  ORJ_STRING_OUT(t, out, table_to_csv(t->table));
}

orj_status orj_table_to_latex(const orj_table *t, char **out) {
  ORJ_STRING_OUT(t, out, table_to_latex(t->table));
}

orj_status orj_table_from_json(const char *json, orj_table **out) {
  if (!json || !out)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new orj_table{table_from_json(json)}; });
}

orj_status orj_table_compare(const orj_table *a, const orj_table *b, char **verdict, char **ratio) {
  if (!a || !b || !verdict)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ComparisonReport rep = compare_tables(a->table, b->table);
    *verdict = dup(to_string(rep.verdict));
    if (ratio)
      *ratio = rep.ratio ? dup(rep.ratio->str()) : nullptr;
  });
}

orj_status orj_config_create(orj_config **out) {
  if (!out)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new orj_config; });
}

void orj_config_destroy(orj_config *c) { delete c; }

orj_status orj_config_set(orj_config *c, const char *key, unsigned long long value) {
  if (!c || !key)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string k = key;
    VerifyConfig &cfg = c->config;
    const auto small = static_cast<unsigned>(value);
    if (k != "seed" && value > 1'000'000)
      throw InvalidArgument("value out of range for '" + k + "'");
    if (k == "seed")
      cfg.seed = value;
    else if (k == "samples") {
      if (value == 0)
        throw InvalidArgument("samples must be at least 1");
      cfg.samples = small;
    } else if (k == "threads")
      cfg.threads = small;
    else if (k == "max-k") {
      cfg.max_k = small;
      cfg.max_k_or = std::min(small, cfg.max_k_or);
    } else if (k == "max-u") {
      cfg.max_u_linear = small;
      cfg.max_u_bilinear = small;
    } else if (k == "max-weight")
      cfg.max_weight = small;
    else
      throw InvalidArgument("unknown config key '" + k + "'");
  });
}

orj_status orj_verify(const char *suite, const orj_config *config, orj_report **out) {
  if (!suite || !out)
    return fail(ORJ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    VerifyConfig cfg = config ? config->config : VerifyConfig{};
    *out = new orj_report{run_equivalence_suite(suite, cfg)};
  });
}

void orj_report_destroy(orj_report *r) { delete r; }

int orj_report_passed(const orj_report *r) {
  if (!r)
    return 0;
  for (const auto &s : r->suites)
    if (!s.pass())
      return 0;
  return 1;
}

size_t orj_report_suite_count(const orj_report *r) { return r ? r->suites.size() : 0; }

const char *orj_report_suite_name(const orj_report *r, size_t index) {
  if (!r || index >= r->suites.size())
    return nullptr;
  return r->suites[index].suite.c_str();
}

orj_status orj_report_suite_json(const orj_report *r, size_t index, char **out) {
  if (r && index >= r->suites.size())
    return fail(ORJ_ERR_INVALID_ARGUMENT, "suite index out of range");
  ORJ_STRING_OUT(r, out, report_to_json(r->suites[index]));
}

orj_status orj_report_summary(const orj_report *r, char **out) {
  ORJ_STRING_OUT(r, out, [&] {
    std::string s;
    for (const auto &suite : r->suites)
      s += report_summary(suite);
    return s;
  }());
}

} // extern "C"
