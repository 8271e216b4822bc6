#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "exactlab/rational.hpp"

namespace exactlab {

/// Element a + b*sqrt(2) of Q(sqrt 2). Since sqrt(2) is irrational, (a, b) is unique.
struct QuadRational {
  Rational a;
  Rational b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  /// a^2 - 2 b^2; nonzero for every nonzero element.
  Rational norm() const { return a * a - Rational(2) * b * b; }
  std::string str() const;

  friend bool operator==(const QuadRational&, const QuadRational&) = default;
};

QuadRational operator+(const QuadRational& u, const QuadRational& v);
QuadRational operator-(const QuadRational& u);
QuadRational operator-(const QuadRational& u, const QuadRational& v);
QuadRational operator*(const QuadRational& u, const QuadRational& v);
/// (a - b sqrt2) / (a^2 - 2 b^2). Throws DivisionByZero for u = 0.
QuadRational inverse(const QuadRational& u);

/// Residue class [value] in Z/mZ.
struct Residue {
  std::int64_t modulus;
  std::int64_t value;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// The ring Z/mZ for m >= 2.
class ZMod {
 public:
  /// Inverse search is exhaustive, so the modulus is capped.
  static constexpr std::int64_t kMaxModulus = 1'000'000;

  explicit ZMod(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return m_; }

  Residue reduce(std::int64_t value) const;
  Residue reduce(const BigInt& value) const;

  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue mul(Residue a, Residue b) const;
  Residue neg(Residue a) const;
  /// Exhaustive search for b with a*b = 1; empty when none exists.
  std::optional<Residue> inverse(Residue a) const;
  /// True iff every nonzero residue is invertible.
  bool is_field() const;

 private:
  void check(const Residue& r) const;

  std::int64_t m_;
};

bool is_prime(std::int64_t n);

/// The two-element field with 1 + 1 = 0.
struct F2 {
  bool bit = false;

  friend F2 operator+(F2 x, F2 y) { return F2{x.bit != y.bit}; }
  friend F2 operator*(F2 x, F2 y) { return F2{x.bit && y.bit}; }
  friend F2 operator-(F2 x) { return x; }
  friend bool operator==(F2, F2) = default;
};

/// Addition and multiplication tables indexed [x][y].
std::array<std::array<F2, 2>, 2> f2_addition_table();
std::array<std::array<F2, 2>, 2> f2_multiplication_table();

}  // namespace exactlab
