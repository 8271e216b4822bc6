#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exactlab/errors.hpp"
#include "exactlab/rational.hpp"

namespace exactlab::radix {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 16;

/// sign * (integer_digits . pre_period (period)(period)...) in base `base`.
///
/// A terminating expansion has period [0]. Canonical expansions, the only
/// kind expand_rational produces, never end in a repeated (base-1) digit and
/// have the shortest possible pre-period and period.
struct RadixExpansion {
  bool negative = false;
  int base = 10;
  std::vector<int> integer_digits{0};
  std::vector<int> pre_period;
  std::vector<int> period{0};

  bool terminates() const { return period.size() == 1 && period.front() == 0; }

  friend bool operator==(const RadixExpansion&, const RadixExpansion&) = default;
};

class DigitExceedsBase : public ParseError {
 public:
  DigitExceedsBase(std::size_t offset, char digit, int base);
};

/// Long division with remainder-cycle detection. Throws DomainError when
/// the base is outside [2, 16].
RadixExpansion expand_rational(const Rational& x, int base);

/// Exact value, also for non-canonical input such as 0.4(9).
Rational to_rational(const RadixExpansion& e);

/// Grammar: [-]DIGITS[.DIGITS]["(" DIGITS ")"]_BASE, digits 0-9A-F in either case.
RadixExpansion parse_expansion(std::string_view text);

/// Uppercase digits; "(0)" periods are omitted, as is the point when no fractional digits remain.
std::string format_expansion(const RadixExpansion& e);

/// Fractional digit i (0-based) of the infinite digit stream.
int fractional_digit(const RadixExpansion& e, std::size_t i);

/// The expansion truncated after n fractional digits, as a rational.
Rational truncated_value(const RadixExpansion& e, std::size_t n);

}  // namespace exactlab::radix
