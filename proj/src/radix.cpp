#include "exactlab/radix.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>

namespace exactlab::radix {

namespace {

constexpr char kDigits[] = "0123456789ABCDEF";

void check_base(int base) {
  if (base < kMinBase || base > kMaxBase)
    throw DomainError("base " + std::to_string(base) + " outside [2, 16]");
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u >= 'A' && u <= 'F') return u - 'A' + 10;
  return -1;
}

BigInt digits_to_int(const std::vector<int>& digits, int base) {
  if (digits.empty()) return 0;
  std::string text;
  text.reserve(digits.size());
  for (int d : digits) text.push_back(kDigits[d]);
  return BigInt(text, base);
}

long as_long(std::uint64_t v) { return static_cast<long>(v); }
long as_long(const BigInt& v) { return v.get_si(); }

// Fractional digits of num/den (0 <= num < den) by long division. The first
// remainder to repeat closes the period; a zero remainder yields period [0].
template <typename Int, typename Seen>
void long_divide(Int rem, const Int& den, int base, Seen& seen, RadixExpansion& out) {
  std::vector<int> digits;
  while (true) {
    auto [it, inserted] = seen.try_emplace(rem, digits.size());
    if (!inserted) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      out.pre_period.assign(digits.begin(), digits.begin() + start);
      out.period.assign(digits.begin() + start, digits.end());
      return;
    }
    rem *= base;
    const Int q = rem / den;
    rem -= q * den;
    digits.push_back(static_cast<int>(as_long(q)));
  }
}

// Same loop with a dense remainder table for small denominators.
void long_divide_dense(std::uint64_t rem, std::uint64_t den, int base, RadixExpansion& out) {
  std::vector<std::int32_t> seen(den, -1);
  std::vector<int> digits;
  while (seen[rem] < 0) {
    seen[rem] = static_cast<std::int32_t>(digits.size());
    rem *= static_cast<std::uint64_t>(base);
    digits.push_back(static_cast<int>(rem / den));
    rem %= den;
  }
  const auto start = static_cast<std::ptrdiff_t>(seen[rem]);
  out.pre_period.assign(digits.begin(), digits.begin() + start);
  out.period.assign(digits.begin() + start, digits.end());
}

}  // namespace

DigitExceedsBase::DigitExceedsBase(std::size_t offset, char digit, int base)
    : ParseError(offset, {}, std::string("digit '") + digit + "' is not valid in base " + std::to_string(base)) {}

RadixExpansion expand_rational(const Rational& x, int base) {
  check_base(base);
  RadixExpansion e;
  e.base = base;
  e.negative = x.sign() < 0;
  const BigInt num = abs(x.num());
  const BigInt& den = x.den();
  BigInt whole;
  BigInt rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  e.integer_digits.clear();
  for (char c : whole.get_str(base)) e.integer_digits.push_back(digit_value(c));

  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
  if (den.fits_ulong_p() && den.get_ui() <= kDenseLimit) {
    long_divide_dense(rem.get_ui(), den.get_ui(), base, e);
  } else if (den.fits_ulong_p() && den.get_ui() < (std::uint64_t{1} << 59)) {
    std::map<std::uint64_t, std::size_t> seen;
    long_divide<std::uint64_t>(rem.get_ui(), den.get_ui(), base, seen, e);
  } else {
    std::map<BigInt, std::size_t> seen;
    long_divide<BigInt>(rem, den, base, seen, e);
  }
  return e;
}

Rational to_rational(const RadixExpansion& e) {
  check_base(e.base);
  if (e.period.empty()) throw DomainError("expansion period must be nonempty");
  const BigInt b = e.base;
  const BigInt whole = digits_to_int(e.integer_digits, e.base);
  const BigInt pre = digits_to_int(e.pre_period, e.base);
  const BigInt rep = digits_to_int(e.period, e.base);
  const BigInt shift = pow(b, e.pre_period.size());
  const BigInt cycle = pow(b, e.period.size()) - 1;
  // x = (whole * b^s + pre + rep / (b^L - 1)) / b^s
  BigInt num = (whole * shift + pre) * cycle + rep;
  if (e.negative) num = -num;
  return Rational(std::move(num), BigInt(shift * cycle));
}

RadixExpansion parse_expansion(std::string_view text) {
  const std::size_t underscore = text.rfind('_');
  if (underscore == std::string_view::npos) throw ParseError(text.size(), {"'_'"}, "missing base suffix");
  const std::string_view base_text = text.substr(underscore + 1);
  if (base_text.empty() || base_text.size() > 2 ||
      !std::all_of(base_text.begin(), base_text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(underscore + 1, {"decimal base 2-16"}, "malformed base");
  const int base = std::stoi(std::string(base_text));
  if (base < kMinBase || base > kMaxBase)
    throw ParseError(underscore + 1, {"decimal base 2-16"}, "base out of range");

  RadixExpansion e;
  e.base = base;
  e.integer_digits.clear();
  e.period.clear();
  const std::string_view body = text.substr(0, underscore);
  std::size_t pos = 0;

  auto read_digits = [&](std::vector<int>& into) {
    while (pos < body.size()) {
      const int v = digit_value(body[pos]);
      if (v < 0) break;
      if (v >= base) throw DigitExceedsBase(pos, body[pos], base);
      into.push_back(v);
      ++pos;
    }
  };

  if (pos < body.size() && body[pos] == '-') {
    e.negative = true;
    ++pos;
  }
  read_digits(e.integer_digits);
  if (e.integer_digits.empty()) throw ParseError(pos, {"digit"}, "missing integer part");
  if (pos < body.size() && body[pos] == '.') {
    ++pos;
    read_digits(e.pre_period);
  }
  if (pos < body.size() && body[pos] == '(') {
    ++pos;
    read_digits(e.period);
    if (e.period.empty()) throw ParseError(pos, {"digit"}, "empty period");
    if (pos >= body.size() || body[pos] != ')') throw ParseError(pos, {"')'", "digit"}, "unclosed period");
    ++pos;
  }
  if (pos != body.size()) {
    std::vector<std::string> expected{"'_'"};
    if (e.period.empty()) expected.insert(expected.begin(), {"digit", "'.'", "'('"});
    throw ParseError(pos, std::move(expected), "unexpected character");
  }
  if (e.period.empty()) e.period = {0};
  while (e.integer_digits.size() > 1 && e.integer_digits.front() == 0) e.integer_digits.erase(e.integer_digits.begin());
  return e;
}

std::string format_expansion(const RadixExpansion& e) {
  std::string out;
  if (e.negative) out += '-';
  for (int d : e.integer_digits) out += kDigits[d];
  const bool term = e.terminates();
  if (!e.pre_period.empty() || !term) {
    out += '.';
    for (int d : e.pre_period) out += kDigits[d];
    if (!term) {
      out += '(';
      for (int d : e.period) out += kDigits[d];
      out += ')';
    }
  }
  return out + "_" + std::to_string(e.base);
}

int fractional_digit(const RadixExpansion& e, std::size_t i) {
  if (i < e.pre_period.size()) return e.pre_period[i];
  return e.period[(i - e.pre_period.size()) % e.period.size()];
}

Rational truncated_value(const RadixExpansion& e, std::size_t n) {
  std::vector<int> digits = e.integer_digits;
  for (std::size_t i = 0; i < n; ++i) digits.push_back(fractional_digit(e, i));
  Rational v(digits_to_int(digits, e.base), pow(BigInt(e.base), n));
  return e.negative ? -v : v;
}

}  // namespace exactlab::radix
