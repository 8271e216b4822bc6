#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exactlab/rational.hpp"

namespace exactlab {

/// Polynomial in n with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(BigInt c);
  /// n^k
  static IntPoly monomial(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Sign of p(n) for all sufficiently large n.
  int eventual_sign() const { return is_zero() ? 0 : sgn(leading()); }

  BigInt operator()(const BigInt& n) const;
  BigInt operator()(std::int64_t n) const { return (*this)(BigInt(static_cast<long>(n))); }

  /// p(n + 1)
  IntPoly shifted() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& p);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Integer M >= 0 with |root| < M for every real root (Cauchy's bound).
  BigInt root_bound() const;

  /// Text like "2n^2 - 3n + 1".
  std::string str() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Sum of monomials `[c][*]n[^k]` joined by + or -, e.g. "n^2-3*n+1".
IntPoly parse_poly(std::string_view text);

/// Smallest N >= from such that p(n) > 0 for every n >= N. Requires a positive
/// leading coefficient. Integers below the root bound are scanned exactly; when
/// that range exceeds `scan_limit` the bound itself is returned.
std::int64_t positive_from(const IntPoly& p, std::int64_t from, std::int64_t scan_limit = 1'000'000);

}  // namespace exactlab
