#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "exactlab/interval.hpp"
#include "exactlab/rational.hpp"
#include "exactlab/series.hpp"

namespace exactlab::sequences {

/// head[0], head[1], ..., then cycle repeated forever.
struct EventuallyPeriodicSeq {
  std::vector<Rational> head;
  std::vector<Rational> cycle;

  /// Throws DomainError for an empty cycle.
  EventuallyPeriodicSeq(std::vector<Rational> head, std::vector<Rational> cycle);

  /// Zero-based.
  const Rational& at(std::int64_t i) const;
};

/// Mean of the first n terms (indices 0..n-1 of the sequence).
Rational cesaro_mean(const EventuallyPeriodicSeq& seq, std::int64_t n);

/// Mean of the first n terms of a series term, starting at its start index.
Rational cesaro_mean(const series::TermExpr& t, std::int64_t n);

/// sup {x_i : i >= n}
Rational suffix_sup(const EventuallyPeriodicSeq& seq, std::int64_t n);
Rational suffix_inf(const EventuallyPeriodicSeq& seq, std::int64_t n);

/// (liminf, limsup) = (min cycle, max cycle).
std::pair<Rational, Rational> limsup_liminf(const EventuallyPeriodicSeq& seq);

BigInt fib(std::int64_t n);

class AmbiguousRounding : public DomainError {
 public:
  explicit AmbiguousRounding(std::int64_t n)
      : DomainError("enclosure too wide to round phi^" + std::to_string(n) + "/sqrt(5) unambiguously") {}
};

/// Nearest integer to phi^n / sqrt(5), phi = (1 + sqrt 5)/2, in interval
/// arithmetic over the given enclosure of sqrt(5).
BigInt binet_round(std::int64_t n, const CertifiedEnclosure& sqrt5);

/// Tightens its own sqrt(5) enclosure until the rounding is unambiguous.
BigInt binet_round(std::int64_t n, int retries = 8);

/// x_{k+1} = r (1 - x_k) x_k for k < n, exact. Sizes double per step.
std::vector<Rational> logistic_trace(const Rational& r, const Rational& x0, std::int64_t n);

/// Enclosures of the same iterates, endpoints rounded outward to `bits` bits.
std::vector<CertifiedEnclosure> logistic_enclosures(const Rational& r, const Rational& x0, std::int64_t n,
                                                    unsigned bits = 128);

/// x0 / (n x0 + r^-n)
Rational logistic_bound(const Rational& r, const Rational& x0, std::int64_t n);

Rational harmonic_number(std::int64_t n);

/// sum_{k=2}^{n} h_k/(k(k-1)) == 2 - 1/(n+1) - h_{n+1}/n
bool harmonic_identity_check(std::int64_t n);

}  // namespace exactlab::sequences
