#include "exactlab/decimal.hpp"

#include "exactlab/errors.hpp"

namespace exactlab {

namespace {

// trunc(x * 10^digits) as an integer, toward zero.
BigInt scaled(const Rational& x, unsigned digits) {
  const Rational s = x * Rational(pow(BigInt(10), digits));
  return s.sign() < 0 ? BigInt(-floor(-s)) : floor(s);
}

}  // namespace

std::string truncate_decimal(const Rational& x, unsigned digits) {
  const BigInt v = scaled(x, digits);
  std::string mag = BigInt(abs(v)).get_str();
  if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
  if (digits > 0) mag.insert(mag.size() - digits, ".");
  // Keep the sign even when the magnitude truncates to zero: -0.001 -> "-0.0".
  return (x.sign() < 0 ? "-" : "") + mag;
}

int guaranteed_digits(const CertifiedEnclosure& e, unsigned max_digits) {
  // Truncation toward zero is monotone on each side of 0, so if both ends
  // share a sign and agree, so does every point between them.
  if (e.lo.sign() != e.hi.sign() && !(e.lo.is_zero() || e.hi.is_zero())) return -1;
  int agreed = -1;
  for (unsigned d = 0; d <= max_digits; ++d) {
    if (truncate_decimal(e.lo, d) != truncate_decimal(e.hi, d)) break;
    agreed = static_cast<int>(d);
  }
  return agreed;
}

std::string certified_decimal(const CertifiedEnclosure& e, unsigned max_digits) {
  const int d = guaranteed_digits(e, max_digits);
  if (d < 0) throw DomainError("enclosure too wide to certify any digit");
  return truncate_decimal(e.lo, static_cast<unsigned>(d));
}

}  // namespace exactlab
