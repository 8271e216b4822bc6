#include "exactlab/fields.hpp"

#include "exactlab/errors.hpp"

namespace exactlab {

std::string QuadRational::str() const {
  std::string out = a.str();
  if (b.sign() < 0) {
    out += " - " + (-b).str();
  } else {
    out += " + " + b.str();
  }
  return out + "*sqrt2";
}

QuadRational operator+(const QuadRational& u, const QuadRational& v) { return {u.a + v.a, u.b + v.b}; }

QuadRational operator-(const QuadRational& u) { return {-u.a, -u.b}; }

QuadRational operator-(const QuadRational& u, const QuadRational& v) { return u + (-v); }

QuadRational operator*(const QuadRational& u, const QuadRational& v) {
  return {u.a * v.a + Rational(2) * u.b * v.b, u.a * v.b + u.b * v.a};
}

QuadRational inverse(const QuadRational& u) {
  if (u.is_zero()) throw DivisionByZero();
  const Rational n = u.norm();
  return {u.a / n, -u.b / n};
}

ZMod::ZMod(std::int64_t modulus) : m_(modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2");
}

void ZMod::check(const Residue& r) const {
  if (r.modulus != m_) throw DomainError("residue belongs to a different modulus");
  if (r.value < 0 || r.value >= m_) throw DomainError("residue is not reduced");
}

Residue ZMod::reduce(std::int64_t value) const {
  std::int64_t r = value % m_;
  if (r < 0) r += m_;
  return {m_, r};
}

Residue ZMod::reduce(const BigInt& value) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(m_));
  return {m_, r.get_si()};
}

Residue ZMod::add(Residue a, Residue b) const {
  check(a);
  check(b);
  return reduce(a.value + b.value);
}

Residue ZMod::sub(Residue a, Residue b) const {
  check(a);
  check(b);
  return reduce(a.value - b.value);
}

Residue ZMod::mul(Residue a, Residue b) const {
  check(a);
  check(b);
  const BigInt product = BigInt(static_cast<long>(a.value)) * b.value;
  return reduce(product);
}

Residue ZMod::neg(Residue a) const {
  check(a);
  return reduce(-a.value);
}

std::optional<Residue> ZMod::inverse(Residue a) const {
  check(a);
  if (m_ > kMaxModulus) throw DomainError("modulus too large for exhaustive inverse search");
  for (std::int64_t b = 1; b < m_; ++b) {
    if (mul(a, {m_, b}).value == 1) return Residue{m_, b};
  }
  return std::nullopt;
}

bool ZMod::is_field() const {
  for (std::int64_t a = 1; a < m_; ++a) {
    if (!inverse({m_, a})) return false;
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::array<std::array<F2, 2>, 2> f2_addition_table() {
  std::array<std::array<F2, 2>, 2> t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[x][y] = F2{x != 0} + F2{y != 0};
  return t;
}

std::array<std::array<F2, 2>, 2> f2_multiplication_table() {
  std::array<std::array<F2, 2>, 2> t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[x][y] = F2{x != 0} * F2{y != 0};
  return t;
}

}  // namespace exactlab
