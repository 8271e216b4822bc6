#include <doctest.h>

#include "exactlab/analytic.hpp"
#include "exactlab/combinatorics.hpp"
#include "exactlab/decimal.hpp"
#include "oracles.hpp"

using namespace exactlab;
using namespace exactlab::analytic;
using oracle::q;

TEST_SUITE("analytic") {
  TEST_CASE("Euler's number") {
    const auto v = exp_eval(q(1), pow10_inverse(8));
    CHECK(v.terms_used == 11);
    CHECK(v.value == oracle::exp_partial(q(1), 11));
    CHECK(certified_decimal(v.enclosure(), 7) == "2.7182818");
  }

  TEST_CASE("remainder bound") {
    for (const Rational& x : {q(1), q(3, 2), q(-2), q(1, 10), q(-7, 3)}) {
      const BigInt lowest = ceil(q(2) * abs(x) - q(2));
      for (std::int64_t n = std::max<long>(0, lowest.get_si()); n <= 20; ++n) {
        const Rational sn = exp_partial_sum(x, n);
        CHECK(sn == oracle::exp_partial(x, n));
        CHECK(abs(exp_partial_sum(x, n + 20) - sn) <= exp_remainder_bound(x, n));
      }
    }
  }

  TEST_CASE("exp(x) exp(-x) contains 1") {
    oracle::Gen g(2);
    for (int i = 0; i < 30; ++i) {
      const Rational x = q(g.range(-100, 100), 10);
      const auto a = exp_eval(x, pow10_inverse(12)).enclosure();
      const auto b = exp_eval(-x, pow10_inverse(12)).enclosure();
      CHECK(a.lo > q(0));
      CHECK((a * b).contains(q(1)));
    }
  }

  TEST_CASE("exp functional equation at coefficient level") {
    for (const auto& [x, y] : {std::pair{q(1), q(1)}, std::pair{q(1, 2), q(-1, 3)}, std::pair{q(-3), q(5, 7)}}) {
      const Sequence a = exp_coefficients(x), b = exp_coefficients(y), c = exp_coefficients(x + y);
      for (std::int64_t n = 0; n <= 20; ++n) CHECK(cauchy_product_term(a, b, n) == c(n));
    }
  }

  TEST_CASE("finite Cauchy products") {
    const std::vector<Rational> ones = {q(1), q(1)};
    const auto c = cauchy_product(ones, ones);
    CHECK(c == std::vector<Rational>{q(1), q(2), q(1)});
    Rational sum;
    for (const auto& x : c) sum += x;
    CHECK(sum == q(4));
    CHECK(cauchy_product_term(std::span<const Rational>(ones), std::span<const Rational>(ones), 1) == q(2));
    CHECK_THROWS_AS(cauchy_product_term(std::span<const Rational>(ones), std::span<const Rational>(ones), 2),
                    DomainError);

    oracle::Gen g(17);
    for (int i = 0; i < 100; ++i) {
      std::vector<Rational> a(static_cast<std::size_t>(g.range(1, 8))), b(static_cast<std::size_t>(g.range(1, 8)));
      for (auto& v : a) v = g.rational(20, 6);
      for (auto& v : b) v = g.rational(20, 6);
      Rational sa, sb, sc;
      for (const auto& v : a) sa += v;
      for (const auto& v : b) sb += v;
      for (const auto& v : cauchy_product(a, b)) sc += v;
      CHECK(sc == sa * sb);
    }
  }

  TEST_CASE("Cauchy product of (-1)^n / sqrt(n+1) with itself") {
    for (std::int64_t n = 0; n <= 50; ++n) CHECK(inverse_sqrt_product_lower_bound(n) >= q(1));
  }

  TEST_CASE("term sequences") {
    const auto s = term_sequence(series::parse_term("1 * 1^n * (1)/(n) from 1"));
    CHECK(s(4) == q(1, 4));
    CHECK_THROWS_AS(s(0), series::IndexBelowStart);
  }

  TEST_CASE("sin and cos") {
    CHECK(trig_eval(Trig::Cos, q(0), pow10_inverse(10)).value == q(1));
    CHECK(trig_eval(Trig::Sin, q(0), pow10_inverse(10)).value == q(0));
    CHECK_THROWS_AS(trig_eval(Trig::Sin, q(5, 2), q(1, 10)), DomainError);

    // Oracle: 20 terms of the sine series, tail below 2^21/21!.
    Rational sin1;
    for (std::int64_t k = 0; k < 20; ++k)
      sin1 += pow(q(-1), k) / Rational(oracle::loop_factorial(2 * k + 1));
    const auto v = trig_eval(Trig::Sin, q(1), pow10_inverse(9));
    CHECK(v.enclosure().contains(sin1));
    CHECK(abs(v.value - q(841470, 1000000)) < pow10_inverse(6));

    oracle::Gen g(23);
    for (int i = 0; i < 40; ++i) {
      const Rational x = g.rational(2000, 1000);
      if (abs(x) > q(2)) continue;
      const auto s = trig_eval(Trig::Sin, x, pow10_inverse(15));
      const auto sm = trig_eval(Trig::Sin, -x, pow10_inverse(15));
      CHECK(s.value == -sm.value);
      const auto c = trig_eval(Trig::Cos, x, pow10_inverse(15));
      // sin^2 + cos^2 = 1 inside the product enclosure.
      const auto se = s.enclosure(), ce = c.enclosure();
      const auto sum = se * se + ce * ce;
      CHECK(sum.contains(q(1)));
    }
  }
}
