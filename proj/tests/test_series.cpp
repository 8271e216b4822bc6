#include <doctest.h>

#include "exactlab/series.hpp"
#include "oracles.hpp"

using namespace exactlab;
using namespace exactlab::series;
using oracle::q;

namespace {

TermExpr T(std::string_view s) { return parse_term(s); }

void check_verdict(std::string_view term, Conclusion c, FiredTest f) {
  CAPTURE(term);
  const auto v = classify_series(T(term));
  CHECK(to_string(v.conclusion) == to_string(c));
  CHECK(to_string(v.fired_test) == to_string(f));
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("terms and partial sums") {
    const auto h = T("1 * 1^n * (1)/(n) from 1");
    CHECK(term_eval(h, 3) == q(1, 3));
    CHECK(partial_sum(h, 4) == q(25, 12));
    CHECK(partial_sum(h, 0) == q(0));
    CHECK_THROWS_AS(term_eval(h, 0), IndexBelowStart);
    const auto alt = T("alt -1 * 1^n * (1)/(n) from 1");
    CHECK(term_eval(alt, 1) == q(1));
    CHECK(term_eval(alt, 2) == q(-1, 2));
    const auto fact = T("2 * (1/2)^n * (n + 1)/(1) * fact^-1");
    CHECK(term_eval(fact, 3) == q(2) * q(1, 8) * q(4) / q(6));
    // Partial sums agree with summing individual terms.
    for (std::int64_t n = 0; n <= 30; ++n) {
      Rational s;
      for (std::int64_t k = 0; k <= n; ++k) s += term_eval(fact, k);
      CHECK(partial_sum(fact, n) == s);
    }
  }

  TEST_CASE("term syntax") {
    const auto t = T("alt (-3/2) * (2/3)^n * (n^2 - 1)/(2n + 5) * fact^1 from 4");
    CHECK(t.alternating);
    CHECK(t.coefficient == q(-3, 2));
    CHECK(t.ratio == q(2, 3));
    CHECK(t.factorial_power == 1);
    CHECK(t.start == 4);
    CHECK(T(format_term(t)).denominator == t.denominator);
    CHECK(format_term(T(format_term(t))) == format_term(t));
    CHECK(format_term(T("1 * 1^n * (1)/(n) from 1")) == "1 * 1^n * (1)/(n) * fact^0 from 1");
    CHECK_THROWS_AS(T("1 * 1^n * (1)/(n)"), DomainError);  // Q(0) = 0
    CHECK_THROWS_AS(T("1 * 1^n * (1)/(n^2 - 4) from 1"), DomainError);
    CHECK_THROWS_AS(T("1 * 1^n * (1)/(0) from 1"), DivisionByZero);
    CHECK_THROWS_AS(T("1 * 1^n * (1)/(n) * fact^2 from 1"), ParseError);
    CHECK_THROWS_AS(T("1 * 1^n (1)/(n)"), ParseError);
    CHECK_THROWS_AS(T("1 * 1^n * (1)/(n) from 1 extra"), ParseError);
  }

  TEST_CASE("classifier on the standard examples") {
    check_verdict("1 * 1^n * (1)/(n) from 1", Conclusion::Diverges, FiredTest::HarmonicComparison);
    check_verdict("1 * 1^n * (1)/(n^2) from 1", Conclusion::ConvergesAbsolutely, FiredTest::PSeriesComparison);
    check_verdict("alt -1 * 1^n * (1)/(n) from 1", Conclusion::ConvergesConditionally, FiredTest::Leibniz);
    check_verdict("1 * (1/3)^n * (n^2)/(1)", Conclusion::ConvergesAbsolutely, FiredTest::Ratio);
    check_verdict("alt 1 * 1^n * (1)/(1)", Conclusion::Diverges, FiredTest::Divergence);
    check_verdict("1 * (-1)^n * (1)/(1)", Conclusion::Diverges, FiredTest::Divergence);
    check_verdict("1 * 1^n * (n + 10)/(n^2 - 3n + 1)", Conclusion::Diverges, FiredTest::HarmonicComparison);
    check_verdict("1 * 2^n * (1)/(n + 1)", Conclusion::Diverges, FiredTest::Divergence);
    check_verdict("1 * 1^n * (1)/(1) * fact^-1", Conclusion::ConvergesAbsolutely, FiredTest::Ratio);
    check_verdict("1 * (1/1000)^n * (1)/(1) * fact^1", Conclusion::Diverges, FiredTest::Divergence);
    check_verdict("0 * 1^n * (1)/(1)", Conclusion::ConvergesAbsolutely, FiredTest::FiniteSupport);
    check_verdict("1 * 0^n * (1)/(1)", Conclusion::ConvergesAbsolutely, FiredTest::FiniteSupport);
    check_verdict("1 * (-1)^n * (1)/(n) from 1", Conclusion::ConvergesConditionally, FiredTest::Leibniz);
    check_verdict("alt 1 * (-1)^n * (1)/(n) from 1", Conclusion::Diverges, FiredTest::HarmonicComparison);
    check_verdict("alt 1 * 1^n * (n)/(n + 1)", Conclusion::Diverges, FiredTest::Divergence);
    check_verdict("alt 1 * 1^n * (n^2)/(n^4 + 1)", Conclusion::ConvergesAbsolutely,
                  FiredTest::PSeriesComparison);
    check_verdict("1 * (5/4)^n * (1)/(n^9 + 1)", Conclusion::Diverges, FiredTest::Divergence);
  }

  TEST_CASE("ratio evidence") {
    const auto v = classify_series(T("1 * (1/3)^n * (n^2)/(1)"));
    REQUIRE(v.evidence.ratio.has_value());
    CHECK(v.evidence.ratio->q == q(1, 3));
    REQUIRE(v.evidence.threshold.has_value());
    const auto lim = exact_ratio(T("1 * (-2/5)^n * (n)/(n + 3) * fact^-1"));
    CHECK(lim.kind == RatioLimit::Kind::Zero);
    CHECK(root_limit(T("3 * (-2/5)^n * (1)/(1)")) == q(2, 5));
    CHECK_FALSE(root_limit(T("3 * (2/5)^n * (n)/(1)")).has_value());
  }

  TEST_CASE("ratio-test soundness on random series") {
    oracle::Gen g(1234);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
      TermExpr t;
      t.alternating = g.coin();
      t.coefficient = g.nonzero_rational(9, 4);
      t.ratio = g.nonzero_rational(7, 8);
      if (abs(t.ratio) >= q(1)) t.ratio = inverse(t.ratio) * q(1, 2);
      t.numerator = IntPoly({BigInt(static_cast<long>(g.range(1, 5))), BigInt(static_cast<long>(g.range(0, 3)))});
      t.denominator = IntPoly({BigInt(static_cast<long>(g.range(1, 9))), BigInt(1)});
      t.factorial_power = static_cast<int>(g.range(-1, 0));
      const auto v = classify_series(t);
      REQUIRE(v.fired_test == FiredTest::Ratio);
      REQUIRE(v.evidence.threshold.has_value());
      const Rational beta = (q(1) + v.evidence.ratio->q) * q(1, 2);
      const std::int64_t n0 = *v.evidence.threshold;
      for (std::int64_t n = n0; n <= n0 + 40; n += 7) {
        const Rational sn = partial_sum(t, n);
        const Rational bound = abs(term_eval(t, n + 1)) / (q(1) - beta);
        for (std::int64_t m = 1; m <= 60; m += 11) {
          CHECK(abs(partial_sum(t, n + m) - sn) <= bound);
          ++checked;
        }
        // The ratio really is at most beta from the threshold on.
        if (!term_eval(t, n).is_zero()) CHECK(abs(term_eval(t, n + 1) / term_eval(t, n)) <= beta);
      }
    }
    CHECK(checked > 0);
  }

  TEST_CASE("p-series and harmonic bounds") {
    const Rational bound2 = q(1) / (q(1) - pow(q(2), -1));
    const Rational bound3 = q(1) / (q(1) - pow(q(2), -2));
    CHECK(bound2 == q(2));
    CHECK(bound3 == q(4, 3));
    Rational s2, s3;
    bool ok = true;
    for (long k = 1; k <= 2000; ++k) {
      s2 += q(1, k * k);
      s3 += q(1, k * k * k);
      ok = ok && s2 <= bound2 && s3 <= bound3;
    }
    CHECK(ok);
    const auto h = T("1 * 1^n * (1)/(n) from 1");
    for (std::int64_t n = 0; n <= 12; ++n)
      CHECK(partial_sum(h, std::int64_t{1} << n) >= q(1) + Rational(n) * q(1, 2));
  }

  TEST_CASE("Leibniz nesting and enclosures") {
    const auto t = T("alt -1 * 1^n * (1)/(n) from 1");
    const auto e = alternating_enclosure(t, 1);
    CHECK(e.lo == q(7, 12));
    CHECK(e.hi == q(5, 6));
    // s_j sums the first j+1 terms; odd ones rise, even ones fall, odds stay below evens.
    std::vector<Rational> s;
    for (std::int64_t j = 0; j < 60; ++j) s.push_back(partial_sum(t, t.start + j));
    for (std::size_t j = 1; j + 2 < s.size(); j += 2) CHECK(s[j] <= s[j + 2]);
    for (std::size_t j = 0; j + 2 < s.size(); j += 2) CHECK(s[j + 2] <= s[j]);
    CHECK(s[59] <= s[58]);
    for (std::int64_t n = 0; n < 25; ++n) {
      const auto a = alternating_enclosure(t, n);
      const auto b = alternating_enclosure(t, n + 1);
      CHECK(a.lo <= b.lo);
      CHECK(b.hi <= a.hi);
    }
    CHECK_THROWS_AS(alternating_enclosure(T("1 * 1^n * (1)/(n) from 1"), 1), DomainError);
  }

  TEST_CASE("odd alternating harmonic brackets pi/4") {
    const auto t = T("alt 1 * 1^n * (1)/(2n + 1)");
    const auto e = alternating_enclosure(t, 600);
    CHECK(e.contains(q(7853981, 10000000)));
    CHECK(e.width() < q(1, 1000));
  }

  TEST_CASE("Leibniz threshold past an initial rise") {
    const auto t = T("alt 1 * 1^n * (n)/(n^2 + 10) from 1");
    const auto from = leibniz_index(t);
    REQUIRE(from.has_value());
    for (std::int64_t n = *from; n < *from + 200; ++n) CHECK(abs(term_eval(t, n + 1)) <= abs(term_eval(t, n)));
    CHECK(*from >= 3);
    CHECK(abs(term_eval(t, *from - 1)) < abs(term_eval(t, *from)));
    CHECK(classify_series(t).conclusion == Conclusion::ConvergesConditionally);
  }
}
