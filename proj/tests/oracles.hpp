#pragma once

// Reference computations for the tests. Each one takes a different route
// from the library code it checks: plain loops, direct definitions, or
// machine integers where the values are small enough.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exactlab/rational.hpp"

namespace oracle {

using exactlab::BigInt;
using exactlab::Rational;

inline Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

inline BigInt brute_power_sum(std::int64_t n, unsigned power) {
  BigInt s = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    BigInt t = 1;
    for (unsigned i = 0; i < power; ++i) t *= static_cast<long>(k);
    s += t;
  }
  return s;
}

inline BigInt brute_odd_sum(std::int64_t n) {
  BigInt s = 0;
  for (std::int64_t k = 1; k <= n; ++k) s += 2 * k - 1;
  return s;
}

inline Rational brute_geometric(const Rational& x, std::int64_t n) {
  Rational s;
  Rational p(1);
  for (std::int64_t k = 0; k <= n; ++k) {
    s += p;
    p *= x;
  }
  return s;
}

/// sum_{k=1}^{n} 1/(k(k+1))
inline Rational brute_telescoping(std::int64_t n) {
  Rational s;
  for (std::int64_t k = 1; k <= n; ++k) s += Rational(BigInt(1), BigInt(static_cast<long>(k * (k + 1))));
  return s;
}

/// Gifts over twelve days: sum over days d of 1 + 2 + ... + d.
inline BigInt brute_christmas(std::int64_t n) {
  BigInt s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    for (std::int64_t g = 1; g <= d; ++g) s += g;
  return s;
}

/// n! / (k! (n-k)!) via the product formula with exact division at each step.
inline BigInt product_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<long>(n - k + i);
    r /= static_cast<long>(i);
  }
  return r;
}

inline BigInt loop_factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= static_cast<long>(i);
  return r;
}

/// First `count` fractional digits of p/q (p, q > 0) in base b by schoolbook division.
inline std::vector<int> long_division_digits(BigInt p, const BigInt& q, int b, std::size_t count) {
  p %= q;
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i) {
    p *= b;
    BigInt d = p / q;
    out.push_back(static_cast<int>(d.get_si()));
    p -= d * q;
  }
  return out;
}

/// F(n) by fast doubling in machine integers (valid for n <= 90).
inline std::pair<std::uint64_t, std::uint64_t> fib_pair(std::uint64_t n) {
  if (n == 0) return {0, 1};
  auto [a, b] = fib_pair(n / 2);
  const std::uint64_t c = a * (2 * b - a);
  const std::uint64_t d = a * a + b * b;
  if (n % 2 == 0) return {c, d};
  return {d, c + d};
}

/// h_n as a single fraction over lcm-free common denominator n!.
inline Rational factorial_harmonic(std::int64_t n) {
  const BigInt f = loop_factorial(n);
  BigInt num = 0;
  for (std::int64_t k = 1; k <= n; ++k) num += f / static_cast<long>(k);
  return Rational(num, f);
}

/// sum_{k=0}^{n} x^k / k! computed term by term from scratch.
inline Rational exp_partial(const Rational& x, std::int64_t n) {
  Rational s;
  for (std::int64_t k = 0; k <= n; ++k) s += exactlab::pow(x, k) / Rational(loop_factorial(k));
  return s;
}

/// Deterministic generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(BigInt(static_cast<long>(range(-max_num, max_num))),
                    BigInt(static_cast<long>(range(1, max_den))));
  }
  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
