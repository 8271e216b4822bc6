#include "exactlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "exactlab/combinatorics.hpp"
#include "exactlab/errors.hpp"

namespace exactlab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(unsigned k) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[k] = 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

IntPoly IntPoly::shifted() const {
  // sum_j c_j (n+1)^j = sum_j c_j sum_i C(j,i) n^i
  std::vector<BigInt> out(coeffs_.size(), BigInt(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto row = pascal_row(static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i <= j; ++i) out[i] += coeffs_[j] * row[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + BigInt(-1) * b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

BigInt IntPoly::root_bound() const {
  if (degree() <= 0) return 0;
  BigInt biggest = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) biggest = std::max(biggest, BigInt(abs(coeffs_[i])));
  // 1 + max|c_i| / |c_d|, rounded up.
  BigInt q;
  const BigInt lead = abs(leading());
  mpz_cdiv_q(q.get_mpz_t(), biggest.get_mpz_t(), lead.get_mpz_t());
  return q + 2;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "n";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly parse_poly(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  };
  auto number = [&]() -> std::optional<BigInt> {
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    if (pos == begin) return std::nullopt;
    return BigInt(std::string(text.substr(begin, pos - begin)));
  };

  IntPoly total;
  bool first = true;
  skip();
  if (pos == text.size()) throw ParseError(pos, {"polynomial"}, "empty polynomial");
  while (true) {
    skip();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError(pos, {"'+'", "'-'", "end of input"}, "expected sign between terms");
    }
    first = false;
    const std::size_t term_start = pos;
    BigInt coeff = 1;
    unsigned power = 0;
    if (auto c = number()) {
      coeff = *c;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        if (pos >= text.size() || text[pos] != 'n') throw ParseError(pos, {"'n'"}, "expected variable after '*'");
      }
    }
    if (pos < text.size() && text[pos] == 'n') {
      ++pos;
      power = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        auto e = number();
        if (!e || !e->fits_uint_p() || *e > 64) throw ParseError(pos, {"exponent 0-64"}, "bad exponent");
        power = static_cast<unsigned>(e->get_ui());
      }
    } else if (pos == term_start) {
      throw ParseError(pos, {"integer", "'n'"}, "expected a term");
    }
    total = total + BigInt(sign * coeff) * IntPoly::monomial(power);
    skip();
    if (pos == text.size()) break;
  }
  return total;
}

std::int64_t positive_from(const IntPoly& p, std::int64_t from, std::int64_t scan_limit) {
  if (p.eventual_sign() <= 0) throw DomainError("polynomial is not eventually positive");
  const BigInt bound = p.root_bound();
  const BigInt start(static_cast<long>(from));
  if (bound <= start) return from;
  if (BigInt(bound - start) > scan_limit) return bound.get_si();
  // No sign change beyond the bound; walk down to the last nonpositive value.
  std::int64_t n = bound.get_si();
  while (n > from && sgn(p(n - 1)) > 0) --n;
  return n;
}

}  // namespace exactlab
