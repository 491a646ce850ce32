#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mgn {

using Rational = mpq_class;
using BigInt = mpz_class;

// Thrown for mathematically meaningless requests (excluded (g,n), bad ranges).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace mgn
