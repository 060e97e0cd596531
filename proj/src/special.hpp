#pragma once

#include "rational.hpp"

namespace orjuhl {

// Rising factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1.
Rational pochhammer(const Rational &a, unsigned m);

// Gamma(x+m)/Gamma(x) for integer offset m, without evaluating Gamma.
// For m < 0 this is 1/(x+m)_{-m}; throws PoleError when a factor vanishes.
Rational gamma_ratio(const Rational &x, long m);

// x (x-1) ... (x-b+1) / b!
Rational gen_binomial(const Rational &x, unsigned b);

Rational factorial(unsigned n);

// k!/(k_1! k_2! ... ) for k = sum of parts.
Rational multinomial(std::initializer_list<unsigned> parts);

} // namespace orjuhl
