#include "latfree/quadext.hpp"

#include <cctype>
#include <cmath>

namespace latfree {

Rational parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& s) -> Int {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits: " + s);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("malformed integer literal: " + s);
    return Int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(num, den);
}

bool is_squarefree(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

QuadExt::QuadExt(const Rational& a, const Rational& b, long k)
    : a_(a), b_(b), k_(k) {
  if (b_ == 0) {
    k_ = 0;
    return;
  }
  if (k_ < 2 || !is_squarefree(k_))
    throw std::domain_error("field discriminant must be squarefree and >= 2, got " +
                            std::to_string(k));
}

long QuadExt::join_fields(const QuadExt& x, const QuadExt& y) {
  if (x.k_ == 0) return y.k_;
  if (y.k_ == 0 || y.k_ == x.k_) return x.k_;
  throw std::domain_error("mixing sqrt(" + std::to_string(x.k_) + ") and sqrt(" +
                          std::to_string(y.k_) + ") values");
}

int QuadExt::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| versus |b| sqrt(k) decides, via squares.
  Rational lhs = a_ * a_, rhs = b_ * b_ * k_;
  if (lhs == rhs) return 0;  // impossible for squarefree k >= 2, kept for safety
  return (lhs > rhs) ? sa : sb;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  long k = join_fields(*this, o);
  Rational b = b_ + o.b_;
  return QuadExt(a_ + o.a_, b, b == 0 ? 0 : k, unchecked{});
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
  long k = join_fields(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * k;
  Rational b = a_ * o.b_ + b_ * o.a_;
  return QuadExt(a, b, b == 0 ? 0 : k, unchecked{});
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  long k = join_fields(*this, o);
  // 1 / (a + b sqrt k) = (a - b sqrt k) / (a^2 - b^2 k); the norm is nonzero
  // because sqrt(k) is irrational.
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * k;
  QuadExt conj(o.a_ / norm, -o.b_ / norm, (o.b_ == 0) ? 0 : k, unchecked{});
  return *this * conj;
}

Int QuadExt::floor() const {
  if (b_ == 0) return floor_int(a_);
  // Rational bracket for sqrt(k): s/M <= sqrt(k) < (s+1)/M with M = 10^18.
  static const Int M = Int("1000000000000000000");
  Int s = sqrt(Int(k_) * M * M);
  Rational lo_root(s, M), hi_root(s + 1, M);
  Rational lower = a_ + b_ * (b_ > 0 ? lo_root : hi_root);
  Int n = floor_int(lower);
  // The bracket is tight enough that at most a step or two of exact
  // verification is needed; the loops are exact regardless of the start.
  while ((*this - QuadExt(Rational(n))).sign() < 0) --n;
  while ((*this - QuadExt(Rational(n + 1))).sign() >= 0) ++n;
  return n;
}

double QuadExt::to_double() const {
  return approx(a_) + approx(b_) * std::sqrt(static_cast<double>(k_));
}

std::string QuadExt::str() const {
  if (b_ == 0) return to_string(a_);
  return to_string(a_) + "+" + to_string(b_) + "*sqrt(" + std::to_string(k_) + ")";
}

}  // namespace latfree
