#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cga {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise; always in lowest terms with q > 0.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(long n);
Integer binomial(long n, long k);

/// (-1)^e for any integer e, including negative e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q);

}  // namespace cga
