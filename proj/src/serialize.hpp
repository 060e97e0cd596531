#pragma once

#include <string>
#include <vector>

#include "formal.hpp"
#include "verifier.hpp"

namespace orjuhl {

inline constexpr const char *kTableSchema = "orjuhl/v1";
inline constexpr const char *kReportSchema = "orjuhl/report/v1";

// Canonical JSON: params by label, terms in canonical key order, rationals
// as decimal strings.
std::string table_to_json(const CoeffTable &t);
// Throws ParseError on malformed input or schema mismatch.
CoeffTable table_from_json(const std::string &text);

std::string table_to_csv(const CoeffTable &t);

// M_{2(A_r+1)} ... M_{2(A_1+1)} with consecutive repeats written as powers.
std::string word_to_latex(const MWord &w);
std::string rational_to_latex(const Rational &q);
// Summands ordered by total word length, then canonical key order. An empty
// table renders as "0".
std::string table_to_latex(const CoeffTable &t);

std::string report_to_json(const SuiteReport &r);
// One line per cell plus a verdict line.
std::string report_summary(const SuiteReport &r);

} // namespace orjuhl
