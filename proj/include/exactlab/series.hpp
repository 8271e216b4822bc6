#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "exactlab/interval.hpp"
#include "exactlab/polynomial.hpp"
#include "exactlab/rational.hpp"

namespace exactlab::series {

/// a_n = (-1)^(alternating ? n : 0) * coefficient * ratio^n * P(n)/Q(n) * (n!)^factorial_power
/// for n >= start.
struct TermExpr {
  bool alternating = false;
  Rational coefficient{1};
  Rational ratio{1};
  IntPoly numerator = IntPoly::constant(1);
  IntPoly denominator = IntPoly::constant(1);
  int factorial_power = 0;  // -1, 0 or +1
  std::int64_t start = 0;
};

/// Checks the shape constraints and that Q has no zero at any n >= start.
TermExpr make_term(bool alternating, Rational coefficient, Rational ratio, IntPoly numerator,
                   IntPoly denominator, int factorial_power, std::int64_t start);

/// Text form `[alt] c * r^n * (P)/(Q) * fact^m from n0`. The trailing
/// `* fact^m` and `from n0` parts may be omitted (m = 0, n0 = 0).
TermExpr parse_term(std::string_view text);
std::string format_term(const TermExpr& t);

class IndexBelowStart : public DomainError {
 public:
  IndexBelowStart() : DomainError("index below the start of the series") {}
};

Rational term_eval(const TermExpr& t, std::int64_t n);

/// sum_{k=start}^{n} a_k; empty (zero) when n < start.
Rational partial_sum(const TermExpr& t, std::int64_t n);

/// |a_{n+1} / a_n| = scale * num(n) / den(n) for all large n.
struct RatioFunction {
  Rational scale;
  IntPoly num;
  IntPoly den;

  Rational operator()(std::int64_t n) const;
};

struct RatioLimit {
  enum class Kind { Finite, Zero, Infinite };
  Kind kind = Kind::Finite;
  Rational q;  // meaningful for Finite and Zero
  RatioFunction function;

  bool below_one() const { return kind == Kind::Zero || (kind == Kind::Finite && q < Rational(1)); }
  bool above_one() const { return kind == Kind::Infinite || (kind == Kind::Finite && q > Rational(1)); }
};

/// Requires a term that is not identically zero.
RatioLimit exact_ratio(const TermExpr& t);

/// Smallest N >= start with |a_{n+1}/a_n| <= beta for all n >= N, or nothing
/// when the ratio limit is not below beta.
std::optional<std::int64_t> ratio_bound_index(const TermExpr& t, const Rational& beta);

/// lim |a_n|^(1/n) for the geometric family c * r^n, which is |r|.
/// Other shapes have no rational closed form here.
std::optional<Rational> root_limit(const TermExpr& t);

enum class Conclusion { ConvergesAbsolutely, ConvergesConditionally, Diverges, Inconclusive };

enum class FiredTest { FiniteSupport, Divergence, Ratio, PSeriesComparison, HarmonicComparison, Leibniz, None };

std::string_view to_string(Conclusion c);
std::string_view to_string(FiredTest t);

struct Evidence {
  std::optional<RatioLimit> ratio;
  /// Index from which the fired comparison or monotonicity holds.
  std::optional<std::int64_t> threshold;
  /// p of the comparison series sum 1/n^p (1 for the harmonic series).
  std::optional<int> comparison_exponent;
  /// Description of lim |a_n| when the divergence test fires.
  std::optional<std::string> term_limit;
};

struct TestVerdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  FiredTest fired_test = FiredTest::None;
  Evidence evidence;
};

/// Applies, in order: divergence test, ratio test, comparison with p-series or
/// the harmonic series, and Leibniz for alternating terms.
TestVerdict classify_series(const TermExpr& t);

/// Index N from which |a_n| decreases to 0 with strictly alternating signs,
/// or nothing when the Leibniz criterion does not apply.
std::optional<std::int64_t> leibniz_index(const TermExpr& t);

/// [min(s_2n, s_2n+1), max(...)] where s_j sums the first j+1 terms.
CertifiedEnclosure alternating_enclosure(const TermExpr& t, std::int64_t n);

}  // namespace exactlab::series
