#pragma once

#include <string>

#include "exactlab/interval.hpp"
#include "exactlab/rational.hpp"

namespace exactlab {

/// x truncated toward zero after `digits` fractional decimal digits, e.g. "-2.71".
std::string truncate_decimal(const Rational& x, unsigned digits);

/// Number of fractional digits, up to max_digits, on which every point of e
/// agrees. Returns -1 when not even the integer part is settled.
int guaranteed_digits(const CertifiedEnclosure& e, unsigned max_digits);

/// Prints the digits shared by both truncated endpoints, at most max_digits
/// of them. Throws DomainError when the integer part itself is uncertain.
std::string certified_decimal(const CertifiedEnclosure& e, unsigned max_digits);

}  // namespace exactlab
