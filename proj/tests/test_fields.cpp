#include <doctest.h>

#include "exactlab/errors.hpp"
#include "exactlab/fields.hpp"
#include "oracles.hpp"

using namespace exactlab;
using oracle::q;

TEST_SUITE("fields") {
  TEST_CASE("F2 tables") {
    const auto add = f2_addition_table();
    const auto mul = f2_multiplication_table();
    const F2 zero{false}, one{true};
    CHECK(add[0][0] == zero);
    CHECK(add[0][1] == one);
    CHECK(add[1][0] == one);
    CHECK(add[1][1] == zero);
    CHECK(mul[0][0] == zero);
    CHECK(mul[0][1] == zero);
    CHECK(mul[1][0] == zero);
    CHECK(mul[1][1] == one);
    // Distributivity over all 8 triples.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const F2 x{a == 1}, y{b == 1}, z{c == 1};
          CHECK(x * (y + z) == x * y + x * z);
          CHECK(x + y == y + x);
        }
  }

  TEST_CASE("Z/mZ") {
    const ZMod z7(7);
    CHECK(z7.reduce(-1).value == 6);
    CHECK(z7.reduce(BigInt("100000000000000000000")).value == 2);  // 10^20 mod 7
    CHECK(z7.mul(z7.reduce(3), z7.reduce(5)).value == 1);
    CHECK(z7.inverse(z7.reduce(3))->value == 5);
    CHECK(z7.is_field());
    const ZMod z6(6);
    CHECK_FALSE(z6.is_field());
    CHECK_FALSE(z6.inverse(z6.reduce(2)).has_value());
    CHECK(z6.inverse(z6.reduce(5))->value == 5);
    CHECK_THROWS_AS(ZMod(1), DomainError);
    CHECK_THROWS_AS(z7.add(z6.reduce(1), z7.reduce(1)), DomainError);
  }

  TEST_CASE("Z/mZ is a field exactly for prime m") {
    for (std::int64_t m = 2; m <= 60; ++m) {
      bool prime = true;
      for (std::int64_t d = 2; d < m; ++d) prime = prime && m % d != 0;
      CHECK(ZMod(m).is_field() == prime);
      CHECK(is_prime(m) == prime);
    }
  }

  TEST_CASE("mod-m classes agree with machine arithmetic") {
    oracle::Gen g(3);
    for (int i = 0; i < 300; ++i) {
      const std::int64_t m = g.range(2, 1000);
      const std::int64_t a = g.range(-5000, 5000), b = g.range(-5000, 5000);
      const ZMod z(m);
      auto canon = [m](std::int64_t v) { return ((v % m) + m) % m; };
      CHECK(z.add(z.reduce(a), z.reduce(b)).value == canon(a + b));
      CHECK(z.sub(z.reduce(a), z.reduce(b)).value == canon(a - b));
      CHECK(z.mul(z.reduce(a), z.reduce(b)).value == canon(a * b));
      CHECK(z.neg(z.reduce(a)).value == canon(-a));
    }
  }

  TEST_CASE("Q(sqrt 2)") {
    const QuadRational u{q(1), q(1)};
    const QuadRational inv = inverse(u);
    CHECK(inv == QuadRational{q(-1), q(1)});  // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(u * inv == QuadRational{q(1), q(0)});
    CHECK((QuadRational{q(0), q(1)} * QuadRational{q(0), q(1)}) == QuadRational{q(2), q(0)});
    CHECK_THROWS_AS(inverse(QuadRational{q(0), q(0)}), DivisionByZero);

    oracle::Gen g(41);
    for (int i = 0; i < 200; ++i) {
      const QuadRational x{g.rational(20, 9), g.rational(20, 9)};
      const QuadRational y{g.rational(20, 9), g.rational(20, 9)};
      const QuadRational z{g.rational(20, 9), g.rational(20, 9)};
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK((x * y).norm() == x.norm() * y.norm());
      if (!x.is_zero()) {
        CHECK(x.norm() != q(0));
        CHECK(x * inverse(x) == QuadRational{q(1), q(0)});
      }
    }
  }
}
