#include "special.hpp"

#include "errors.hpp"

namespace orjuhl {

Rational pochhammer(const Rational &a, unsigned m) {
  Rational r(1);
  for (unsigned k = 0; k < m; ++k)
    r *= a + Rational(static_cast<long>(k));
  return r;
}

Rational gamma_ratio(const Rational &x, long m) {
  if (m >= 0)
    return pochhammer(x, static_cast<unsigned>(m));
  Rational denom = pochhammer(x + Rational(m), static_cast<unsigned>(-m));
  if (denom.is_zero())
    throw PoleError("gamma_ratio(" + x.str() + ", " + std::to_string(m) + ") hits a pole");
  return reciprocal(denom);
}

Rational gen_binomial(const Rational &x, unsigned b) {
  Rational r(1);
  for (unsigned i = 0; i < b; ++i)
    r *= x - Rational(static_cast<long>(i));
  return r / factorial(b);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational multinomial(std::initializer_list<unsigned> parts) {
  unsigned total = 0;
  Rational r(1);
  for (unsigned p : parts) {
    total += p;
    r /= factorial(p);
  }
  return r * factorial(total);
}

} // namespace orjuhl
