#pragma once

#include <gmpxx.h>

#include <string>

namespace shi {

/// Exact rational scalar. GMP keeps it canonical: positive denominator,
/// gcd(num, den) = 1, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den", denominator omitted when it is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// n!! for odd n: 1*3*5*...*n, and 1 for n <= 1.
inline Integer double_factorial(long odd) {
  Integer r = 1;
  for (long k = odd; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace shi
