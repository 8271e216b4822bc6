#include "exactlab/analytic.hpp"

#include <algorithm>

#include "exactlab/combinatorics.hpp"

namespace exactlab::analytic {

Rational exp_remainder_bound(const Rational& x, std::int64_t n) {
  return Rational(2) * pow(abs(x), n + 1) / Rational(factorial(n + 1));
}

Rational exp_partial_sum(const Rational& x, std::int64_t n) {
  if (n < 0) throw DomainError("term count must be nonnegative");
  Rational term(1);
  Rational sum(1);
  for (std::int64_t k = 1; k <= n; ++k) {
    term = term * x / Rational(k);
    sum += term;
  }
  return sum;
}

CertifiedValue exp_eval(const Rational& x, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("eps must be positive");
  const BigInt lowest = ceil(Rational(2) * abs(x) - Rational(2));
  std::int64_t n = std::max<long>(0, lowest.get_si());
  Rational bound = exp_remainder_bound(x, n);
  while (bound > eps) {
    ++n;
    bound = exp_remainder_bound(x, n);
  }
  return {exp_partial_sum(x, n), bound, n};
}

namespace {

// Magnitude ratio |t_{k+1} / t_k| = x^2 / ((2k+1+d)(2k+2+d)), d = 0 for cos, 1 for sin.
Rational trig_step(Trig kind, const Rational& x, std::int64_t k) {
  const std::int64_t d = kind == Trig::Sin ? 1 : 0;
  return x * x / Rational((2 * k + 1 + d) * (2 * k + 2 + d));
}

}  // namespace

std::int64_t trig_decrease_onset(Trig kind, const Rational& x) {
  // The step ratio decreases in k, so the first k with ratio <= 1 is the onset.
  std::int64_t k = 0;
  while (trig_step(kind, x, k) > Rational(1)) ++k;
  return k;
}

CertifiedValue trig_eval(Trig kind, const Rational& x, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("eps must be positive");
  if (abs(x) > Rational(kTrigDomain)) throw DomainError("trig evaluation needs |x| <= 2");
  const std::int64_t onset = trig_decrease_onset(kind, x);

  Rational term = kind == Trig::Sin ? x : Rational(1);
  Rational sum = term;
  std::int64_t k = 0;
  while (true) {
    Rational next = -term * trig_step(kind, x, k) ;
    if (k + 1 > onset && abs(next) <= eps) return {sum, abs(next), k};
    sum += next;
    term = std::move(next);
    ++k;
  }
}

Rational cauchy_product_term(const Sequence& a, const Sequence& b, std::int64_t n) {
  if (n < 0) throw DomainError("index must be nonnegative");
  Rational c;
  for (std::int64_t k = 0; k <= n; ++k) c += a(n - k) * b(k);
  return c;
}

Rational cauchy_product_term(std::span<const Rational> a, std::span<const Rational> b, std::int64_t n) {
  if (n < 0 || static_cast<std::size_t>(n) >= a.size() || static_cast<std::size_t>(n) >= b.size())
    throw DomainError("index " + std::to_string(n) + " outside the given coefficients");
  Rational c;
  for (std::int64_t k = 0; k <= n; ++k) c += a[static_cast<std::size_t>(n - k)] * b[static_cast<std::size_t>(k)];
  return c;
}

std::vector<Rational> cauchy_product(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Sequence term_sequence(const series::TermExpr& t) {
  return [t](std::int64_t n) { return series::term_eval(t, n); };
}

Sequence exp_coefficients(const Rational& x) {
  return [x](std::int64_t n) { return pow(x, n) / Rational(factorial(n)); };
}

Rational inverse_sqrt_product_lower_bound(std::int64_t n) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const BigInt top = BigInt(static_cast<long>(n + 1)) * (n + 1);
  Rational bound;
  for (std::int64_t k = 0; k <= n; ++k) {
    // Sign of a_{n-k} b_k is (-1)^(n-k) (-1)^k = (-1)^n for every k.
    const BigInt under_root = BigInt(static_cast<long>(n - k + 1)) * (k + 1);
    if (under_root > top) throw DomainError("squared comparison failed");
    bound += Rational(BigInt(1), BigInt(static_cast<long>(n + 1)));
  }
  return bound;
}

}  // namespace exactlab::analytic
