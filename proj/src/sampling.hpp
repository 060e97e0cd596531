#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace orjuhl {

// Indeterminates (L, K, K*, K⋄, X, Y, ell, n, L_k, ...) bound to rational
// values, plus the nonnegative integer parameters of a formula.
struct ParamPoint {
  std::map<std::string, Rational> values;
  std::map<std::string, long> integers;

  const Rational &value(const std::string &label) const;
  long integer(const std::string &label) const;
  ParamPoint &set(const std::string &label, const Rational &v) {
    values[label] = v;
    return *this;
  }
  ParamPoint &set_int(const std::string &label, long v);

  friend bool operator==(const ParamPoint &, const ParamPoint &) = default;
};

using PolePredicate = std::function<bool(const Rational &)>;
using PointPredicate = std::function<bool(const ParamPoint &)>;

struct SamplingBounds {
  long max_abs_numerator = 1'000'000;
  long max_denominator = 1'000;
  unsigned retry_budget = 1000;
};

// Deterministic pseudo-random rational for (seed, index); resamples until
// is_pole returns false. Throws SamplingExhausted after the retry budget.
Rational sample_rational(std::uint64_t stream_seed, std::uint64_t index,
                         const PolePredicate &is_pole = {},
                         const SamplingBounds &bounds = {});

// Samples every label of one point jointly; the whole point is redrawn while
// is_pole(point) holds.
ParamPoint sample_point(std::uint64_t stream_seed, std::uint64_t index,
                        const std::vector<std::string> &labels,
                        const PointPredicate &is_pole = {},
                        const SamplingBounds &bounds = {});

// True when x is an integer with |x| <= radius.
bool is_small_integer(const Rational &x, long radius);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t hash_name(const std::string &name);

} // namespace orjuhl
