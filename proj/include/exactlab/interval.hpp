#pragma once

#include <algorithm>

#include "exactlab/errors.hpp"
#include "exactlab/rational.hpp"

namespace exactlab {

/// Closed interval [lo, hi] with rational endpoints, used to bracket a value
/// that need not be rational.
struct CertifiedEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const CertifiedEnclosure& other) const { return lo <= other.hi && other.lo <= hi; }

  friend bool operator==(const CertifiedEnclosure&, const CertifiedEnclosure&) = default;
};

inline CertifiedEnclosure make_enclosure(Rational a, Rational b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline CertifiedEnclosure operator+(const CertifiedEnclosure& x, const CertifiedEnclosure& y) {
  return {x.lo + y.lo, x.hi + y.hi};
}

inline CertifiedEnclosure operator*(const CertifiedEnclosure& x, const CertifiedEnclosure& y) {
  const Rational p[] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return {*lo, *hi};
}

/// Distance between a point and an interval (zero when inside).
inline Rational distance(const Rational& x, const CertifiedEnclosure& e) {
  if (x < e.lo) return e.lo - x;
  if (x > e.hi) return x - e.hi;
  return Rational(0);
}

}  // namespace exactlab
