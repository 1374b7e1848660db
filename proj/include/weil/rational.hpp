#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace weil {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, JSON or file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands living in different algebras, arity or dimension mismatches.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A mathematical object failed validation. `witness()` names the offending data.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// Accepts "p", "-p", "p/q". Result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace weil
