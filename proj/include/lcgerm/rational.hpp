#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcgerm {

// Exact rational scalar. gmp keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Machine form: always "p/q", including integers ("2/1").
std::string to_pq(const Rational& r);

// Human form: "p/q", or just "p" for integers.
std::string to_display(const Rational& r);

// Accepts "p", "-p", "p/q", "-p/q" with q > 0. Throws ParseError.
Rational parse_rational(std::string_view text);

// p/q in lowest terms; q != 0. (The two-argument mpq_class constructor does
// not reduce.)
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace lcgerm
