#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace exactlab {

using BigInt = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is stored as 0/1, so equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value), den_(1) {}   // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is zero.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// `p/q`, with `/q` omitted when q = 1.
  std::string str() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Parses the interchange form `[-]p[/q]`. Throws ParseError on malformed text
/// and DivisionByZero when q is zero.
Rational parse_rational(std::string_view text);

enum class Ordering { Less, Equal, Greater };

Ordering compare(const Rational& a, const Rational& b);
Rational abs(const Rational& x);
Rational inverse(const Rational& x);
/// Integer power; negative exponents require a nonzero base.
Rational pow(const Rational& base, std::int64_t exponent);
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// (max, min) through ((x+y) + |x-y|)/2 and ((x+y) - |x-y|)/2.
std::pair<Rational, Rational> max_min(const Rational& x, const Rational& y);

/// Outward rounding onto a dyadic grid carrying `bits` significant bits.
/// round_down(x) <= x <= round_up(x) always holds.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

/// 10^-k as an exact rational.
Rational pow10_inverse(unsigned k);

BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace exactlab
