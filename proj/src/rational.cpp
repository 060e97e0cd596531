#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace orjuhl {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s))
    throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

} // namespace

Rational::Rational(long num, long den) {
  if (den == 0)
    throw PoleError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

Rational Rational::from_parts(const std::string &num, const std::string &den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d <= 0)
    throw ParseError("denominator must be positive: '" + den + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer())
    return num_str();
  return num_str() + "/" + den_str();
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw InvalidArgument("rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw PoleError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational reciprocal(const Rational &x) { return Rational(1) / x; }

Rational power(const Rational &x, long exponent) {
  if (exponent < 0)
    return reciprocal(power(x, -exponent));
  mpq_class r(1);
  mpz_pow_ui(r.get_num_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(r);
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.str(); }

} // namespace orjuhl
