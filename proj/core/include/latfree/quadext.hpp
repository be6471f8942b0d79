#pragma once

#include <optional>
#include <string>

#include "latfree/rational.hpp"

namespace latfree {

/// Returns true when n is squarefree (no repeated prime factor).  Intended for
/// the small field discriminants used here; cost is trial division.
bool is_squarefree(long n);

/// Element a + b*sqrt(k) of the real quadratic field Q(sqrt(k)).
///
/// k is a squarefree integer >= 2 shared by every irrational value of a
/// problem instance.  Purely rational values carry k == 0 and are compatible
/// with any field; mixing two distinct nonzero k values throws.  All
/// comparisons are exact (no floating point).
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), k_(0) {}
  QuadExt(const Rational& a) : a_(a), b_(0), k_(0) {}
  QuadExt(const Int& a) : a_(Rational(a)), b_(0), k_(0) {}
  QuadExt(long a) : a_(Rational(a)), b_(0), k_(0) {}

  /// a + b*sqrt(k).  Throws std::domain_error unless k is squarefree and >= 2
  /// (or b == 0, in which case the value is stored as rational with k == 0).
  QuadExt(const Rational& a, const Rational& b, long k);

  const Rational& rat_part() const { return a_; }
  const Rational& root_part() const { return b_; }
  long field_k() const { return k_; }

  /// Exact sign in {-1, 0, +1}, decided by case analysis on the signs of a, b
  /// and comparison of a^2 against b^2 k.
  int sign() const;

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, k_, unchecked{}); }
  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const;
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  bool operator==(const QuadExt& o) const { return (*this - o).is_zero(); }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
  bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

  /// Largest integer <= value, computed exactly.
  Int floor() const;

  double to_double() const;

  /// "a" for rational values, "a+b*sqrt(k)" otherwise (for diagnostics).
  std::string str() const;

 private:
  struct unchecked {};
  QuadExt(const Rational& a, const Rational& b, long k, unchecked)
      : a_(a), b_(b), k_(k) {}

  /// Common field of two operands; throws on a genuine mismatch.
  static long join_fields(const QuadExt& x, const QuadExt& y);

  Rational a_, b_;
  long k_;
};

inline int sgn(const QuadExt& x) { return x.sign(); }
inline Int floor_int(const QuadExt& x) { return x.floor(); }
inline Int ceil_int(const QuadExt& x) { return -((-x).floor()); }
inline double approx(const QuadExt& x) { return x.to_double(); }

/// Spec-level sign operation.
inline int quad_sign(const QuadExt& x) { return x.sign(); }

/// The rational value of x when its sqrt(k) coefficient is zero, else empty.
inline std::optional<Rational> quad_is_rational(const QuadExt& x) {
  if (x.root_part() == 0) return x.rat_part();
  return std::nullopt;
}

inline bool exactly_rational(const Rational&) { return true; }
inline bool exactly_rational(const QuadExt& x) { return x.root_part() == 0; }
inline Rational rational_value(const Rational& x) { return x; }
inline Rational rational_value(const QuadExt& x) {
  if (x.root_part() != 0)
    throw std::domain_error("irrational value where a rational was required");
  return x.rat_part();
}

}  // namespace latfree
