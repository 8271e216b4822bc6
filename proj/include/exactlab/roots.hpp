#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "exactlab/interval.hpp"
#include "exactlab/rational.hpp"

namespace exactlab::roots {

/// Iterates of Newton's method for x^k = a, run in exact arithmetic.
///
/// enclosures[n] holds the pair {a / x_n^(k-1), x_n}, ordered so that
/// lo <= hi. For n >= 1 the iterate is the upper end and the quotient the
/// lower end, and both bracket the positive root.
struct IterationTrace {
  Rational target;
  int degree = 2;
  std::vector<Rational> iterates;
  std::vector<CertifiedEnclosure> enclosures;
  std::vector<Rational> widths;
  /// False when max_iter ran out before the width dropped below tolerance.
  bool converged = false;

  std::size_t steps() const { return iterates.empty() ? 0 : iterates.size() - 1; }
  const CertifiedEnclosure& final_enclosure() const { return enclosures.back(); }
};

inline constexpr int kDefaultMaxIter = 12;

/// max(1, a), a start above the root.
Rational default_start(const Rational& a);

/// x_{n+1} = (x_n + a/x_n) / 2. Runs at least one step, then stops once
/// hi - lo < tol or after max_iter steps.
IterationTrace babylonian_sqrt(const Rational& a, const Rational& x0, const Rational& tol,
                               int max_iter = kDefaultMaxIter);

/// x_{n+1} = ((k-1) x_n + a / x_n^(k-1)) / k.
IterationTrace kth_root(const Rational& a, int k, const Rational& x0, const Rational& tol,
                        int max_iter = kDefaultMaxIter);

/// The k-th root of a when it is rational.
std::optional<Rational> exact_root(const Rational& a, int k);

class IrrationalRoot : public DomainError {
 public:
  IrrationalRoot() : DomainError("root is irrational; use the enclosure form of the relative error") {}
};

/// eps_n = x_n / root - 1. Throws IrrationalRoot unless the root is rational.
Rational relative_error(const IterationTrace& trace, std::size_t n);

/// eps^2 / (2 (1 + eps)), the next relative error of the Babylonian step.
Rational error_step(const Rational& eps);

/// Bracket for eps_n when the root is irrational, from a root enclosure of
/// width below `tol`.
CertifiedEnclosure relative_error_bounds(const IterationTrace& trace, std::size_t n, const Rational& tol);

/// lo >= 0 and lo^k <= a <= hi^k, checked exactly.
bool certifies_root(const CertifiedEnclosure& e, const Rational& a, int k);

/// Certified enclosure of a^(1/k) with width below tol. Endpoints are rounded
/// outward onto a dyadic grid, so their size stays proportional to log(1/tol).
CertifiedEnclosure root_enclosure(const Rational& a, int k, const Rational& tol);

/// [0, 0] for a = 0; throws DomainError for negative a.
CertifiedEnclosure sqrt_enclosure(const Rational& a, const Rational& tol);

/// Enclosures of a_0 = 1, a_{m+1} = sqrt(1 + a_m) for m = 0..n.
std::vector<CertifiedEnclosure> nested_radical_trace(int n);

/// [(1 + lo)/2, (1 + hi)/2] from an enclosure of sqrt(5).
CertifiedEnclosure golden_ratio_enclosure(const Rational& tol);

}  // namespace exactlab::roots
