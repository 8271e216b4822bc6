#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "exactlab/interval.hpp"
#include "exactlab/rational.hpp"
#include "exactlab/series.hpp"

namespace exactlab::analytic {

/// value +- error_bound, obtained from the terms with index 0..terms_used.
struct CertifiedValue {
  Rational value;
  Rational error_bound;
  std::int64_t terms_used = 0;

  CertifiedEnclosure enclosure() const { return {value - error_bound, value + error_bound}; }
};

/// Remainder bound 2|x|^(N+1)/(N+1)! for the exponential series, valid when N >= 2|x| - 2.
Rational exp_remainder_bound(const Rational& x, std::int64_t n);

/// sum_{n=0}^{N} x^n / n!
Rational exp_partial_sum(const Rational& x, std::int64_t n);

/// Smallest N with N >= 2|x| - 2 and remainder bound <= eps.
CertifiedValue exp_eval(const Rational& x, const Rational& eps);

enum class Trig { Sin, Cos };

inline constexpr int kTrigDomain = 2;

/// Alternating-series evaluation for |x| <= 2; the bound is the first omitted
/// term once the terms decrease.
CertifiedValue trig_eval(Trig kind, const Rational& x, const Rational& eps);

/// Index from which the series terms of sin or cos at x decrease in magnitude.
std::int64_t trig_decrease_onset(Trig kind, const Rational& x);

using Sequence = std::function<Rational(std::int64_t)>;

/// c_n = sum_{k=0}^{n} a_{n-k} b_k
Rational cauchy_product_term(const Sequence& a, const Sequence& b, std::int64_t n);

/// Same, on explicit coefficient lists. Throws DomainError when n is past either list.
Rational cauchy_product_term(std::span<const Rational> a, std::span<const Rational> b, std::int64_t n);

/// Full convolution of two finitely supported sequences.
std::vector<Rational> cauchy_product(std::span<const Rational> a, std::span<const Rational> b);

/// n -> a_n of a series term; indices below its start raise IndexBelowStart.
Sequence term_sequence(const series::TermExpr& t);

/// n -> x^n / n!
Sequence exp_coefficients(const Rational& x);

/// Lower bound for |c_n| when a_n = b_n = (-1)^n / sqrt(n+1).
///
/// Every product a_{n-k} b_k has sign (-1)^n and magnitude
/// 1/sqrt((n-k+1)(k+1)); the integer check (n-k+1)(k+1) <= (n+1)^2 gives
/// each term magnitude at least 1/(n+1). Returns the sum of these bounds,
/// which is 1.
Rational inverse_sqrt_product_lower_bound(std::int64_t n);

}  // namespace exactlab::analytic
