#include <doctest.h>

#include "exactlab/decimal.hpp"
#include "oracles.hpp"

using namespace exactlab;
using oracle::q;

TEST_SUITE("decimal") {
  TEST_CASE("truncation") {
    CHECK(truncate_decimal(q(27, 10), 3) == "2.700");
    CHECK(truncate_decimal(q(-1, 3), 2) == "-0.33");
    CHECK(truncate_decimal(q(2, 3), 0) == "0");
    CHECK(truncate_decimal(q(1, 1000), 2) == "0.00");
    CHECK(truncate_decimal(q(-1, 1000), 2) == "-0.00");
    CHECK(truncate_decimal(q(123456, 100), 1) == "1234.5");
  }

  TEST_CASE("certified digits") {
    CHECK(certified_decimal({q(314159, 100000), q(3141595, 1000000)}, 10) == "3.14159");
    CHECK(certified_decimal({q(314159, 100000), q(314160, 100000)}, 10) == "3.141");
    CHECK(certified_decimal({q(1, 3), q(1, 3)}, 5) == "0.33333");
    CHECK(guaranteed_digits({q(-1, 100), q(1, 100)}, 5) == -1);
    CHECK_THROWS_AS(certified_decimal({q(9, 10), q(11, 10)}, 3), DomainError);
    CHECK(certified_decimal({q(-2718, 1000), q(-2717, 1000)}, 6) == "-2.71");
  }

  TEST_CASE("printed digits are shared by every point") {
    oracle::Gen g(6);
    for (int i = 0; i < 300; ++i) {
      const Rational c = g.rational(10'000'000, 999'999);
      const Rational r = abs(g.rational(1000, 1'000'000'000));
      const CertifiedEnclosure e{c - r, c + r};
      const int d = guaranteed_digits(e, 12);
      if (d < 0) continue;
      const auto du = static_cast<unsigned>(d);
      const std::string s = certified_decimal(e, 12);
      CHECK(s == truncate_decimal(e.hi, du));
      CHECK(s == truncate_decimal(c, du));
      for (int k = 1; k < 8; ++k) CHECK(truncate_decimal(e.lo + e.width() * q(k, 8), du) == s);
      if (d < 12) CHECK(truncate_decimal(e.lo, du + 1) != truncate_decimal(e.hi, du + 1));
    }
  }
}
