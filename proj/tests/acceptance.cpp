// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "exactlab/analytic.hpp"
#include "exactlab/combinatorics.hpp"
#include "exactlab/decimal.hpp"
#include "exactlab/logic.hpp"
#include "exactlab/radix.hpp"
#include "exactlab/roots.hpp"
#include "exactlab/sequences.hpp"
#include "exactlab/series.hpp"
#include "oracles.hpp"

using namespace exactlab;
using oracle::q;

namespace {

// Collects failed checks for one criterion.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    if (ok()) {
      s << total_ << " checks";
    } else {
      s << failed_ << " of " << total_ << " checks failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

void logic_criterion(Check& check) {
  using logic::parse_formula;
  auto eq = [&](const char* a, const char* b) {
    check(logic::equivalent(parse_formula(a), parse_formula(b)), std::string(a) + " == " + b);
  };
  eq("p -> q", "!p | q");
  eq("p -> q", "!q -> !p");
  eq("!(p & q)", "!p | !q");
  eq("(p | q) -> r", "(p -> r) & (q -> r)");
  const std::vector<std::pair<std::string, logic::Formula>> swap = {
      {"p", parse_formula("p xor q")}, {"q", parse_formula("p xor q")}, {"p", parse_formula("p xor q")}};
  for (bool p : {true, false})
    for (bool q : {true, false}) {
      const auto out = logic::run_assignments(swap, {{"p", p}, {"q", q}});
      check(out.at("p") == q && out.at("q") == p, "xor swap");
    }
}

void combinatorics_criterion(Check& check) {
  check(closed_form_sum(SumKind::gauss(), 100) == q(5050), "Gauss(100)");
  check(closed_form_sum(SumKind::christmas(), 12) == q(364), "Christmas(12)");
  check(binomial(49, 6) == 13983816, "binomial(49,6)");
  const std::vector<Rational> ratios = {q(2), q(1, 2), q(-3, 4), q(-1), q(5, 3)};
  for (std::int64_t n = 0; n <= 1000; ++n) {
    const std::string at = " n=" + std::to_string(n);
    check(closed_form_sum(SumKind::gauss(), n) == Rational(oracle::brute_power_sum(n, 1)), "gauss" + at);
    check(closed_form_sum(SumKind::squares(), n) == Rational(oracle::brute_power_sum(n, 2)), "squares" + at);
    check(closed_form_sum(SumKind::cubes(), n) == Rational(oracle::brute_power_sum(n, 3)), "cubes" + at);
    check(closed_form_sum(SumKind::odds(), n) == Rational(oracle::brute_odd_sum(n)), "odds" + at);
    check(closed_form_sum(SumKind::christmas(), n) == Rational(oracle::brute_christmas(n)), "christmas" + at);
    check(closed_form_sum(SumKind::telescoping(), n) == oracle::brute_telescoping(n), "telescoping" + at);
    if (n <= 200)
      for (const auto& x : ratios)
        check(closed_form_sum(SumKind::geometric(x), n) == oracle::brute_geometric(x, n), "geometric" + at);
  }
  // The geometric loop runs to the full range for one ratio.
  Rational s, p(1);
  for (std::int64_t n = 0; n <= 1000; ++n) {
    s += p;
    p *= q(1, 2);
    check(closed_form_sum(SumKind::geometric(q(1, 2)), n) == s, "geometric 1/2");
  }
}

void radix_criterion(Check& check) {
  auto frac = [](const char* s) { return radix::to_rational(radix::parse_expansion(s)); };
  auto expand = [](const Rational& x, int b) { return radix::format_expansion(radix::expand_rational(x, b)); };
  check(frac("0.13(42)_10") == q(443, 3300), "0.13(42)");
  check(frac("1.234(5)_10") == q(11111, 9000), "1.234(5)");
  check(frac("0.4(9)_10") == q(1, 2), "0.4(9)");
  check(expand(q(1, 3), 2) == "0.(01)_2", "1/3 base 2");
  check(expand(q(1, 3), 7) == "0.(2)_7", "1/3 base 7");
  check(expand(q(1, 3), 8) == "0.(25)_8", "1/3 base 8");
  check(expand(q(2, 3), 16) == "0.(A)_16", "2/3 base 16");
  check(frac("111.(1)_8") == q(512, 7), "111.(1)_8");
  check(frac("0.(ABBA)_16") == q(862, 1285), "0.(ABBA)_16");
  oracle::Gen g(500);
  for (int i = 0; i < 500; ++i) {
    const int base = static_cast<int>(g.range(2, 16));
    const Rational x = g.rational(1'000'000, 999'999);
    const auto e = radix::expand_rational(x, base);
    check(radix::to_rational(e) == x, "round trip " + x.str() + " base " + std::to_string(base));
    check(radix::parse_expansion(radix::format_expansion(e)) == e, "text round trip " + x.str());
  }
}

void roots_criterion(Check& check) {
  const auto t = roots::babylonian_sqrt(q(2), q(1), pow10_inverse(12), 8);
  check(t.iterates.size() >= 4 && t.iterates[1] == q(3, 2) && t.iterates[2] == q(17, 12) &&
            t.iterates[3] == q(577, 408),
        "iterates 3/2, 17/12, 577/408");
  for (const auto& e : t.enclosures) check(e.lo * e.lo <= q(2) && q(2) <= e.hi * e.hi, "lo^2 <= 2 <= hi^2");
  check(t.converged && t.steps() <= 8 && t.final_enclosure().width() < pow10_inverse(12), "width < 1e-12 by step 8");

  const auto four = roots::babylonian_sqrt(q(4), roots::default_start(q(4)), pow10_inverse(10'000), 8);
  check(four.steps() == 8, "8 steps for a = 4");
  for (std::size_t n = 0; n + 1 < four.iterates.size(); ++n) {
    const Rational e = roots::relative_error(four, n);
    check(roots::relative_error(four, n + 1) == q(1, 2) * e * e / (q(1) + e), "error recurrence n=" + std::to_string(n));
  }

  const auto w = roots::babylonian_sqrt(q(2), q(1), pow10_inverse(10'000), 8);
  for (std::size_t n = 2; n + 1 < w.widths.size(); ++n)
    check(w.widths[n + 1] <= w.widths[n] * w.widths[n], "digit doubling n=" + std::to_string(n));
}

void exp_criterion(Check& check) {
  const auto e = analytic::exp_eval(q(1), pow10_inverse(8));
  check(e.terms_used == 11, "N = 11");
  check(certified_decimal(e.enclosure(), 7) == "2.7182818", "prints 2.7182818");
  for (const Rational& x : {q(1), q(3, 2), q(-2)}) {
    const auto v = analytic::exp_eval(x, pow10_inverse(8));
    const std::int64_t n = v.terms_used;
    check(abs(analytic::exp_partial_sum(x, n + 20) - analytic::exp_partial_sum(x, n)) <=
              analytic::exp_remainder_bound(x, n),
          "remainder bound x=" + x.str());
    const auto plus = v.enclosure();
    const auto minus = analytic::exp_eval(-x, pow10_inverse(8)).enclosure();
    check((plus * minus).contains(q(1)), "exp(x) exp(-x) contains 1, x=" + x.str());
  }
}

void cauchy_criterion(Check& check) {
  for (const auto& [x, y] : {std::pair{q(1), q(1)}, std::pair{q(1, 2), q(-1, 3)}}) {
    const auto a = analytic::exp_coefficients(x), b = analytic::exp_coefficients(y);
    for (std::int64_t n = 0; n <= 20; ++n) {
      // Right-hand side computed directly from the definition.
      const Rational expected = pow(x + y, n) / Rational(oracle::loop_factorial(n));
      check(analytic::cauchy_product_term(a, b, n) == expected, "convolution n=" + std::to_string(n));
    }
  }
  for (std::int64_t n = 0; n <= 50; ++n)
    check(analytic::inverse_sqrt_product_lower_bound(n) >= q(1), "|c_n| >= 1 n=" + std::to_string(n));
  const std::vector<Rational> ones = {q(1), q(1)};
  Rational sum;
  for (const auto& c : analytic::cauchy_product(ones, ones)) sum += c;
  check(sum == q(4) && sum == q(2) * q(2), "finite support product = 4");
}

void classifier_criterion(Check& check) {
  using series::Conclusion;
  using series::FiredTest;
  auto expect = [&](const char* term, Conclusion c, FiredTest f) {
    const auto v = series::classify_series(series::parse_term(term));
    check(v.conclusion == c && v.fired_test == f,
          std::string(term) + " -> " + std::string(series::to_string(v.conclusion)) + "/" +
              std::string(series::to_string(v.fired_test)));
    return v;
  };
  expect("1 * 1^n * (1)/(n) from 1", Conclusion::Diverges, FiredTest::HarmonicComparison);
  expect("1 * 1^n * (1)/(n^2) from 1", Conclusion::ConvergesAbsolutely, FiredTest::PSeriesComparison);
  expect("alt -1 * 1^n * (1)/(n) from 1", Conclusion::ConvergesConditionally, FiredTest::Leibniz);
  const auto r = expect("1 * (1/3)^n * (n^2)/(1)", Conclusion::ConvergesAbsolutely, FiredTest::Ratio);
  check(r.evidence.ratio && r.evidence.ratio->q == q(1, 3), "q = 1/3 exactly");
  expect("alt 1 * 1^n * (1)/(1)", Conclusion::Diverges, FiredTest::Divergence);
  expect("1 * 1^n * (n + 10)/(n^2 - 3n + 1)", Conclusion::Diverges, FiredTest::HarmonicComparison);
}

void sequences_criterion(Check& check) {
  for (std::int64_t n = 0; n <= 40; ++n)
    check(sequences::binet_round(n) == sequences::fib(n), "binet n=" + std::to_string(n));
  const auto phi = roots::golden_ratio_enclosure(pow10_inverse(12));
  check(distance(Rational(sequences::fib(41), sequences::fib(40)), phi) <= pow10_inverse(6), "fib ratio at 40");
  const auto [lo, hi] = sequences::limsup_liminf(sequences::EventuallyPeriodicSeq({}, {q(1), q(-1)}));
  check(hi == q(1) && lo == q(-1), "limsup/liminf of (1,-1)");

  // Exact iterates while they stay small; beyond that an outward-rounded
  // upper bound for x_n is compared exactly against the closed bound.
  const Rational r = q(1, 2), x0 = q(1, 2);
  const auto exact = sequences::logistic_trace(r, x0, 16);
  for (std::int64_t n = 0; n <= 16; ++n)
    check(exact[static_cast<std::size_t>(n)] <= sequences::logistic_bound(r, x0, n),
          "exact logistic bound n=" + std::to_string(n));
  const auto enc = sequences::logistic_enclosures(r, x0, 60);
  for (std::int64_t n = 0; n <= 60; ++n) {
    const auto& e = enc[static_cast<std::size_t>(n)];
    if (n <= 16) check(e.contains(exact[static_cast<std::size_t>(n)]), "enclosure contains iterate");
    check(e.hi <= sequences::logistic_bound(r, x0, n), "logistic bound n=" + std::to_string(n));
  }
}

void harmonic_criterion(Check& check) {
  check(sequences::harmonic_number(1024) >= q(6), "h_1024 >= 6");
  for (std::int64_t n = 1; n <= 200; ++n)
    check(sequences::harmonic_identity_check(n), "strange harmonic n=" + std::to_string(n));
  Rational s2, s3;
  bool ok2 = true, ok3 = true;
  for (long k = 1; k <= 10'000; ++k) {
    const Rational k2(BigInt(k) * k);
    s2 += inverse(k2);
    s3 += inverse(k2 * Rational(k));
    ok2 = ok2 && s2 <= q(2);
    ok3 = ok3 && s3 <= q(4, 3);
  }
  check(ok2, "sum 1/k^2 <= 2");
  check(ok3, "sum 1/k^3 <= 4/3");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"logic", logic_criterion},           {"combinatorics", combinatorics_criterion},
      {"radix", radix_criterion},           {"roots", roots_criterion},
      {"exp", exp_criterion},               {"cauchy product", cauchy_criterion},
      {"classifier", classifier_criterion}, {"sequences", sequences_criterion},
      {"harmonic", harmonic_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (check.ok() ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << check.summary() << " in " << timing << '\n';
    if (!check.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
