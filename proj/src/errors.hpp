#pragma once

#include <stdexcept>
#include <string>

namespace orjuhl {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A denominator factor vanished at the evaluation point. Callers that sample
// indeterminates resample on this error.
class PoleError : public Error {
public:
  using Error::Error;
};

class VariantMismatch : public Error {
public:
  using Error::Error;
};

class BudgetExhausted : public Error {
public:
  using Error::Error;
};

class SamplingExhausted : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// Invalid arguments or violated preconditions.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace orjuhl
