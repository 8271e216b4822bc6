#include <algorithm>

#include "exactlab/series.hpp"

namespace exactlab::series {

namespace {

bool effectively_alternating(const TermExpr& t) { return t.alternating != (t.ratio.sign() < 0); }

bool finite_support(const TermExpr& t) {
  return t.coefficient.is_zero() || t.numerator.is_zero() || t.ratio.is_zero();
}

// Index from which P(n) and Q(n) are nonzero with their eventual signs.
std::int64_t settled_from(const TermExpr& t) {
  auto settle = [&](const IntPoly& p) {
    return positive_from(BigInt(p.eventual_sign()) * p, t.start);
  };
  return std::max(settle(t.numerator), settle(t.denominator));
}

// |P(n)/Q(n)| - |P(n+1)/Q(n+1)| carries the sign of sP * sQ * D(n) once the
// signs have settled, with D(n) = P(n) Q(n+1) - P(n+1) Q(n).
std::optional<std::int64_t> rational_decrease_from(const TermExpr& t) {
  const IntPoly d = t.numerator * t.denominator.shifted() - t.numerator.shifted() * t.denominator;
  const IntPoly oriented = BigInt(t.numerator.eventual_sign() * t.denominator.eventual_sign()) * d;
  if (oriented.eventual_sign() <= 0) return std::nullopt;
  return positive_from(oriented, t.start);
}

// Extends a symbolic threshold downward while exact checks still show
// nonzero, sign-alternating, non-increasing magnitudes.
std::int64_t refine_downward(const TermExpr& t, std::int64_t n) {
  while (n > t.start) {
    const Rational prev = term_eval(t, n - 1);
    const Rational cur = term_eval(t, n);
    if (prev.is_zero() || prev.sign() == cur.sign() || abs(cur) > abs(prev)) break;
    --n;
  }
  return n;
}

}  // namespace

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::ConvergesAbsolutely:
      return "ConvergesAbsolutely";
    case Conclusion::ConvergesConditionally:
      return "ConvergesConditionally";
    case Conclusion::Diverges:
      return "Diverges";
    case Conclusion::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(FiredTest t) {
  switch (t) {
    case FiredTest::FiniteSupport:
      return "finite-support";
    case FiredTest::Divergence:
      return "divergence";
    case FiredTest::Ratio:
      return "ratio";
    case FiredTest::PSeriesComparison:
      return "comparison-p-series";
    case FiredTest::HarmonicComparison:
      return "comparison-harmonic";
    case FiredTest::Leibniz:
      return "leibniz";
    case FiredTest::None:
      return "none";
  }
  return "?";
}

std::optional<std::int64_t> leibniz_index(const TermExpr& t) {
  if (finite_support(t) || !effectively_alternating(t)) return std::nullopt;
  const RatioLimit lim = exact_ratio(t);
  std::int64_t from = settled_from(t);
  if (lim.below_one()) {
    const auto n = ratio_bound_index(t, Rational(1));
    if (!n) return std::nullopt;
    from = std::max(from, *n);
  } else if (lim.kind == RatioLimit::Kind::Finite && lim.q == Rational(1)) {
    // |r| = 1: magnitudes tend to 0 only when deg Q > deg P.
    if (t.denominator.degree() <= t.numerator.degree()) return std::nullopt;
    const auto n = rational_decrease_from(t);
    if (!n) return std::nullopt;
    from = std::max(from, *n);
  } else {
    return std::nullopt;
  }
  return refine_downward(t, from);
}

TestVerdict classify_series(const TermExpr& t) {
  TestVerdict v;
  if (finite_support(t)) {
    v.conclusion = Conclusion::ConvergesAbsolutely;
    v.fired_test = FiredTest::FiniteSupport;
    return v;
  }

  // Divergence test: decide lim |a_n| symbolically.
  const Rational r = abs(t.ratio);
  const int gap = t.numerator.degree() - t.denominator.degree();
  std::optional<std::string> limit;
  if (t.factorial_power == 1 || (t.factorial_power == 0 && r > Rational(1)) ||
      (t.factorial_power == 0 && r == Rational(1) && gap > 0)) {
    limit = "+inf";
  } else if (t.factorial_power == 0 && r == Rational(1) && gap == 0) {
    limit = abs(t.coefficient * Rational(t.numerator.leading(), t.denominator.leading())).str();
  }
  if (limit) {
    v.conclusion = Conclusion::Diverges;
    v.fired_test = FiredTest::Divergence;
    v.evidence.term_limit = limit;
    return v;
  }

  const RatioLimit lim = exact_ratio(t);
  v.evidence.ratio = lim;
  if (lim.below_one()) {
    v.conclusion = Conclusion::ConvergesAbsolutely;
    v.fired_test = FiredTest::Ratio;
    const Rational beta = (Rational(1) + lim.q) * Rational(1, 2);
    v.evidence.threshold = ratio_bound_index(t, beta);
    return v;
  }
  if (lim.above_one()) {
    v.conclusion = Conclusion::Diverges;
    v.fired_test = FiredTest::Ratio;
    return v;
  }

  // q = 1 with |r| = 1 and no factorial: |a_n| behaves like C / n^(deg Q - deg P).
  const int p = -gap;
  const std::int64_t settled = settled_from(t);
  if (p >= 2) {
    v.conclusion = Conclusion::ConvergesAbsolutely;
    v.fired_test = FiredTest::PSeriesComparison;
    v.evidence.comparison_exponent = p;
    v.evidence.threshold = settled;
    return v;
  }
  if (p == 1) {
    if (!effectively_alternating(t)) {
      v.conclusion = Conclusion::Diverges;
      v.fired_test = FiredTest::HarmonicComparison;
      v.evidence.comparison_exponent = 1;
      v.evidence.threshold = settled;
      return v;
    }
    if (const auto n = leibniz_index(t)) {
      v.conclusion = Conclusion::ConvergesConditionally;
      v.fired_test = FiredTest::Leibniz;
      v.evidence.comparison_exponent = 1;
      v.evidence.threshold = n;
      return v;
    }
  }
  return v;
}

CertifiedEnclosure alternating_enclosure(const TermExpr& t, std::int64_t n) {
  if (n < 0) throw DomainError("enclosure index must be nonnegative");
  const auto from = leibniz_index(t);
  if (!from) throw DomainError("Leibniz criterion does not apply to this series");
  const std::int64_t j = t.start + 2 * n;
  if (j + 1 < *from) throw DomainError("terms are not yet decreasing at this index");
  const Rational even = partial_sum(t, j);
  const Rational odd = even + term_eval(t, j + 1);
  return make_enclosure(even, odd);
}

}  // namespace exactlab::series
