#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace latfree {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Canonical rational num/den: positive denominator, gcd(num, den) == 1.
/// Throws std::domain_error when den == 0.
inline Rational normalize_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);  // mpq canonicalizes sign and gcd
}

inline int sgn(const Rational& x) { return x.sign(); }
inline int sgn(const Int& x) { return x.sign(); }

/// Largest integer <= num/den.  Works for any sign; den must be nonzero.
inline Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("floor_div by zero");
  Int q = num / den;  // truncates toward zero
  if (q * den != num && ((num < 0) != (den < 0))) --q;
  return q;
}

inline Int floor_int(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

inline Int ceil_int(const Rational& x) { return -floor_int(-x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline double approx(const Rational& x) { return x.convert_to<double>(); }

/// Extended gcd: returns g = gcd(a, b) >= 0 and coefficients with
/// s*a + t*b == g.
struct Xgcd {
  Int g, s, t;
};

inline Xgcd xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b; b = r;
    Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
    Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
  }
  if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
  return {a, s0, t0};
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "p" or "p/q" with optional leading '-' (or '+') on p.
/// Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);

}  // namespace latfree
