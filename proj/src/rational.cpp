#include "exactlab/rational.hpp"

#include <ostream>

#include "exactlab/errors.hpp"

namespace exactlab {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : std::invalid_argument("parse error at offset " + std::to_string(offset) +
                            (detail.empty() ? std::string{} : ": " + detail) +
                            (expected.empty() ? std::string{} : " (expected one of: " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw DivisionByZero();
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  // rhs may alias *this.
  BigInt rn = rhs.num_;
  BigInt rd = rhs.den_;
  num_ *= rd;
  den_ *= rn;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.den_ == b.den_ ? cmp(a.num_, b.num_)
                                 : cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t& at) {
    const std::size_t begin = at;
    while (at < text.size() && text[at] >= '0' && text[at] <= '9') ++at;
    if (at == begin) throw ParseError(at, {"digit"}, "malformed rational");
    return BigInt(std::string(text.substr(begin, at - begin)));
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt num = digits(pos);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(pos);
  }
  if (pos != text.size()) throw ParseError(pos, {"'/'", "end of input"}, "malformed rational");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Ordering compare(const Rational& a, const Rational& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw DivisionByZero();
  return Rational(x.den(), x.num());
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZero();
    const auto k = static_cast<unsigned long>(-(exponent + 1)) + 1UL;
    return Rational(pow(base.den(), k), pow(base.num(), k));
  }
  const auto k = static_cast<unsigned long>(exponent);
  return Rational(pow(base.num(), k), pow(base.den(), k));
}

BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

BigInt ceil(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

std::pair<Rational, Rational> max_min(const Rational& x, const Rational& y) {
  const Rational sum = x + y;
  const Rational gap = abs(x - y);
  const Rational half(1, 2);
  return {(sum + gap) * half, (sum - gap) * half};
}

namespace {

// Scale exponent s such that |x| * 2^s has roughly `bits` integer bits.
long dyadic_shift(const Rational& x, unsigned bits) {
  const long top = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2));
  const long bottom = static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  return static_cast<long>(bits) - (top - bottom);
}

Rational scaled(const BigInt& m, long shift) {
  if (shift >= 0) return Rational(m, pow(BigInt(2), static_cast<unsigned long>(shift)));
  return Rational(BigInt(m * pow(BigInt(2), static_cast<unsigned long>(-shift))));
}

Rational times_pow2(const Rational& x, long shift) {
  if (shift >= 0) return x * Rational(pow(BigInt(2), static_cast<unsigned long>(shift)));
  return x / Rational(pow(BigInt(2), static_cast<unsigned long>(-shift)));
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits) {
  if (x.is_zero() || x.is_integer()) return x;
  const long shift = dyadic_shift(x, bits);
  return scaled(floor(times_pow2(x, shift)), shift);
}

Rational round_up(const Rational& x, unsigned bits) {
  if (x.is_zero() || x.is_integer()) return x;
  const long shift = dyadic_shift(x, bits);
  return scaled(ceil(times_pow2(x, shift)), shift);
}

Rational pow10_inverse(unsigned k) { return Rational(BigInt(1), pow(BigInt(10), k)); }

}  // namespace exactlab
