#include "exactlab/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "exactlab/errors.hpp"

namespace exactlab {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::vector<BigInt> pascal_row(std::int64_t n) {
  if (n < 0) throw DomainError("Pascal row index must be nonnegative");
  std::vector<BigInt> row{1};
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t r = 1; r <= n; ++r) {
    row.emplace_back(1);
    for (auto j = static_cast<std::size_t>(r) - 1; j > 0; --j) row[j] += row[j - 1];
  }
  return row;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial coefficient needs n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Columns 0..k of successive rows; entries beyond the row length stay 0.
  std::vector<BigInt> cols(static_cast<std::size_t>(k) + 1, BigInt(0));
  cols[0] = 1;
  for (std::int64_t r = 1; r <= n; ++r) {
    const auto top = static_cast<std::size_t>(std::min(r, k));
    for (std::size_t j = top; j > 0; --j) cols[j] += cols[j - 1];
  }
  return cols[static_cast<std::size_t>(k)];
}

Rational closed_form_sum(const SumKind& kind, std::int64_t n) {
  if (n < 0) throw DomainError("sum length must be nonnegative");
  const BigInt m = BigInt(static_cast<long>(n));
  using Tag = SumKind::Tag;
  switch (kind.tag) {
    case Tag::Gauss:
      return Rational(BigInt(m * (m + 1)), BigInt(2));
    case Tag::Squares:
      return Rational(BigInt(m * (m + 1) * (2 * m + 1)), BigInt(6));
    case Tag::Cubes: {
      const Rational g(BigInt(m * (m + 1)), BigInt(2));
      return g * g;
    }
    case Tag::Odds:
      return Rational(BigInt(m * m));
    case Tag::Geometric: {
      if (kind.ratio == Rational(1)) throw DomainError("geometric sum closed form needs x != 1");
      return (Rational(1) - pow(kind.ratio, n + 1)) / (Rational(1) - kind.ratio);
    }
    case Tag::Telescoping:
      return Rational(m, BigInt(m + 1));
    case Tag::Christmas:
      return Rational(BigInt(m * (m + 1) * (m + 2)), BigInt(6));
  }
  throw DomainError("unknown sum kind");
}

SumKind::Tag parse_sum_tag(std::string_view name) {
  using Tag = SumKind::Tag;
  if (name == "gauss") return Tag::Gauss;
  if (name == "squares") return Tag::Squares;
  if (name == "cubes") return Tag::Cubes;
  if (name == "odds") return Tag::Odds;
  if (name == "geometric") return Tag::Geometric;
  if (name == "telescoping") return Tag::Telescoping;
  if (name == "christmas") return Tag::Christmas;
  throw DomainError("unknown sum kind '" + std::string(name) + "'");
}

BigInt divisibility_witness(const BigInt& p, const BigInt& q, const BigInt& d, std::int64_t n) {
  if (n < 0) throw DomainError("exponent must be nonnegative");
  if (sgn(d) == 0) throw DomainError("divisor must be nonzero");
  const BigInt diff = p - q;
  if (!mpz_divisible_p(diff.get_mpz_t(), d.get_mpz_t()))
    throw DomainError("precondition violated: " + d.get_str() + " does not divide " + diff.get_str());
  const auto e = static_cast<unsigned long>(n);
  const BigInt value = pow(p, e) - pow(q, e);
  BigInt k;
  mpz_divexact(k.get_mpz_t(), value.get_mpz_t(), d.get_mpz_t());
  return k;
}

BigInt nat_to_int(std::uint64_t n) {
  BigInt z(std::to_string(n));
  if (n % 2 == 0) return BigInt(z / 2);
  return BigInt(-(z + 1) / 2);
}

std::uint64_t int_to_nat(const BigInt& z) {
  const BigInt n = sgn(z) >= 0 ? BigInt(2 * z) : BigInt(-2 * z - 1);
  if (!n.fits_ulong_p()) throw DomainError("integer too large to index");
  return n.get_ui();
}

namespace {

// Largest d with d(d+1)/2 <= n.
std::uint64_t diagonal_of(std::uint64_t n) {
  BigInt disc = BigInt(8) * BigInt(std::to_string(n)) + 1;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  return BigInt((root - 1) / 2).get_ui();
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> diagonal_pair(std::uint64_t n) {
  const std::uint64_t d = diagonal_of(n);
  const std::uint64_t t = n - d * (d + 1) / 2;
  // Odd diagonals run down-left from (0, d); even ones run up-right from (d, 0).
  if (d % 2 == 1) return {t, d - t};
  return {d - t, t};
}

std::uint64_t diagonal_index(std::uint64_t i, std::uint64_t j) {
  const std::uint64_t d = i + j;
  const std::uint64_t base = d * (d + 1) / 2;
  return base + (d % 2 == 1 ? i : j);
}

std::vector<Rational> enumerate_rationals(std::size_t count) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (std::uint64_t n = 0; out.size() < count; ++n) {
    const auto [row, col] = diagonal_pair(n);
    Rational q(nat_to_int(col), BigInt(std::to_string(row + 1)));
    if (seen.insert(q).second) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace exactlab
