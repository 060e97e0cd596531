#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orjuhl {

// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}
  Rational(int value) : q_(static_cast<long>(value)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q" in base 10. Throws ParseError.
  static Rational parse(std::string_view text);
  static Rational from_parts(const std::string &num, const std::string &den);

  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Exact conversion; throws InvalidArgument when not an integer that fits.
  long to_long() const;

  const mpq_class &raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_{0};
};

Rational reciprocal(const Rational &x);
Rational power(const Rational &x, long exponent);

std::ostream &operator<<(std::ostream &os, const Rational &x);

} // namespace orjuhl
