#include "sampling.hpp"

#include "errors.hpp"

namespace orjuhl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rational draw(std::uint64_t state, const SamplingBounds &bounds) {
  std::uint64_t h1 = splitmix64(state);
  std::uint64_t h2 = splitmix64(h1);
  auto span = static_cast<std::uint64_t>(2 * bounds.max_abs_numerator + 1);
  long num = static_cast<long>(h1 % span) - bounds.max_abs_numerator;
  long den = 1 + static_cast<long>(h2 % static_cast<std::uint64_t>(bounds.max_denominator));
  return Rational(num, den);
}

} // namespace

const Rational &ParamPoint::value(const std::string &label) const {
  auto it = values.find(label);
  if (it == values.end())
    throw InvalidArgument("missing indeterminate '" + label + "'");
  return it->second;
}

long ParamPoint::integer(const std::string &label) const {
  auto it = integers.find(label);
  if (it == integers.end())
    throw InvalidArgument("missing integer parameter '" + label + "'");
  return it->second;
}

ParamPoint &ParamPoint::set_int(const std::string &label, long v) {
  if (v < 0)
    throw InvalidArgument("integer parameter '" + label + "' must be nonnegative");
  integers[label] = v;
  return *this;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(splitmix64(seed) ^ (salt * 0xD6E8FEB86659FD93ULL + 0x632BE59BD9B4E019ULL));
}

std::uint64_t hash_name(const std::string &name) {
  // FNV-1a; stable across platforms.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Rational sample_rational(std::uint64_t stream_seed, std::uint64_t index,
                         const PolePredicate &is_pole, const SamplingBounds &bounds) {
  std::uint64_t base = mix_seed(stream_seed, index);
  for (unsigned attempt = 0; attempt <= bounds.retry_budget; ++attempt) {
    Rational x = draw(mix_seed(base, attempt), bounds);
    if (!is_pole || !is_pole(x))
      return x;
  }
  throw SamplingExhausted("no pole-free sample after " + std::to_string(bounds.retry_budget) +
                          " retries");
}

ParamPoint sample_point(std::uint64_t stream_seed, std::uint64_t index,
                        const std::vector<std::string> &labels, const PointPredicate &is_pole,
                        const SamplingBounds &bounds) {
  for (unsigned attempt = 0; attempt <= bounds.retry_budget; ++attempt) {
    ParamPoint p;
    std::uint64_t s = mix_seed(mix_seed(stream_seed, index), 0x7000 + attempt);
    for (std::size_t j = 0; j < labels.size(); ++j)
      p.set(labels[j], sample_rational(s, j, {}, bounds));
    if (!is_pole || !is_pole(p))
      return p;
  }
  throw SamplingExhausted("no pole-free sample point after " +
                          std::to_string(bounds.retry_budget) + " retries");
}

bool is_small_integer(const Rational &x, long radius) {
  if (!x.is_integer())
    return false;
  const mpz_class &n = x.raw().get_num();
  return n >= -radius && n <= radius;
}

} // namespace orjuhl
