#include "exactlab/roots.hpp"

#include <algorithm>
#include <string>

namespace exactlab::roots {

namespace {

void require_positive(const Rational& v, const char* what) {
  if (v.sign() <= 0) throw DomainError(std::string(what) + " must be positive");
}

Rational newton_step(const Rational& a, int k, const Rational& x) {
  const Rational lower = a / pow(x, k - 1);
  if (k == 2) return (x + lower) * Rational(1, 2);
  return (Rational(k - 1) * x + lower) / Rational(k);
}

void record(IterationTrace& t, Rational x) {
  CertifiedEnclosure e = make_enclosure(t.target / pow(x, t.degree - 1), x);
  t.widths.push_back(e.width());
  t.enclosures.push_back(std::move(e));
  t.iterates.push_back(std::move(x));
}

std::optional<BigInt> exact_int_root(const BigInt& v, int k) {
  BigInt r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  return r;
}

unsigned bit_length(const BigInt& v) { return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

}  // namespace

Rational default_start(const Rational& a) { return std::max(Rational(1), a); }

IterationTrace kth_root(const Rational& a, int k, const Rational& x0, const Rational& tol, int max_iter) {
  require_positive(a, "target");
  require_positive(x0, "starting point");
  require_positive(tol, "tolerance");
  if (k < 2) throw DomainError("root degree must be at least 2");
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");

  IterationTrace t;
  t.target = a;
  t.degree = k;
  record(t, x0);
  for (int i = 0; i < max_iter; ++i) {
    record(t, newton_step(a, k, t.iterates.back()));
    if (t.widths.back() < tol) {
      t.converged = true;
      break;
    }
  }
  return t;
}

IterationTrace babylonian_sqrt(const Rational& a, const Rational& x0, const Rational& tol, int max_iter) {
  return kth_root(a, 2, x0, tol, max_iter);
}

std::optional<Rational> exact_root(const Rational& a, int k) {
  if (k < 1) throw DomainError("root degree must be positive");
  if (a.sign() < 0 && k % 2 == 0) return std::nullopt;
  auto num = exact_int_root(a.num(), k);
  auto den = exact_int_root(a.den(), k);
  if (!num || !den) return std::nullopt;
  return Rational(std::move(*num), std::move(*den));
}

Rational relative_error(const IterationTrace& trace, std::size_t n) {
  if (n >= trace.iterates.size()) throw DomainError("iterate index out of range");
  const auto root = exact_root(trace.target, trace.degree);
  if (!root) throw IrrationalRoot();
  return trace.iterates[n] / *root - Rational(1);
}

Rational error_step(const Rational& eps) {
  if (eps <= Rational(-1)) throw DomainError("relative error must exceed -1");
  return eps * eps / (Rational(2) * (Rational(1) + eps));
}

CertifiedEnclosure relative_error_bounds(const IterationTrace& trace, std::size_t n, const Rational& tol) {
  if (n >= trace.iterates.size()) throw DomainError("iterate index out of range");
  const CertifiedEnclosure root = root_enclosure(trace.target, trace.degree, tol);
  const Rational& x = trace.iterates[n];
  Rational lo = x / root.hi - Rational(1);
  // From step one on the iterate sits above the root.
  if (n >= 1 && lo.sign() < 0) lo = Rational(0);
  return {std::move(lo), x / root.lo - Rational(1)};
}

bool certifies_root(const CertifiedEnclosure& e, const Rational& a, int k) {
  if (e.lo.sign() < 0 || e.hi < e.lo) return false;
  return pow(e.lo, k) <= a && a <= pow(e.hi, k);
}

CertifiedEnclosure root_enclosure(const Rational& a, int k, const Rational& tol) {
  require_positive(tol, "tolerance");
  if (k < 2) throw DomainError("root degree must be at least 2");
  if (a.sign() < 0) throw DomainError("negative number has no real root of even degree here");
  if (a.is_zero()) return {Rational(0), Rational(0)};
  if (auto r = exact_root(a, k)) return {*r, *r};

  // Start just above the root: floor((num * den^(k-1))^(1/k)) + 1, over den.
  const BigInt scaled = a.num() * pow(a.den(), static_cast<unsigned long>(k - 1));
  BigInt r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(k));
  Rational x(BigInt(r + 1), a.den());

  // Enough precision to resolve tol relative to the magnitude of the root.
  const unsigned bits = bit_length(ceil(x)) + bit_length(ceil(Rational(4 * k) / tol)) + 16;
  for (int i = 0; i < 4 * static_cast<int>(bits) + 64; ++i) {
    CertifiedEnclosure e{round_down(a / pow(x, k - 1), bits), x};
    if (e.width() < tol) return e;
    // Newton iterates from above stay above the root; rounding up keeps that.
    x = round_up(newton_step(a, k, x), bits);
  }
  throw DomainError("root enclosure failed to reach the requested width");
}

CertifiedEnclosure sqrt_enclosure(const Rational& a, const Rational& tol) {
  if (a.sign() < 0) throw DomainError("negative number has no real square root");
  return root_enclosure(a, 2, tol);
}

std::vector<CertifiedEnclosure> nested_radical_trace(int n) {
  if (n < 1) throw DomainError("nested radical depth must be at least 1");
  std::vector<CertifiedEnclosure> out{{Rational(1), Rational(1)}};
  Rational tol(BigInt(1), BigInt(1'000'000'000));
  for (int m = 0; m < n; ++m) {
    tol *= Rational(1, 2);
    const CertifiedEnclosure& prev = out.back();
    // sqrt(1 + x) is increasing, so the endpoints map to endpoints.
    const Rational lo = sqrt_enclosure(Rational(1) + prev.lo, tol).lo;
    const Rational hi = sqrt_enclosure(Rational(1) + prev.hi, tol).hi;
    out.push_back({lo, hi});
  }
  return out;
}

CertifiedEnclosure golden_ratio_enclosure(const Rational& tol) {
  const CertifiedEnclosure s = sqrt_enclosure(Rational(5), tol * Rational(2));
  const Rational half(1, 2);
  return {(Rational(1) + s.lo) * half, (Rational(1) + s.hi) * half};
}

}  // namespace exactlab::roots
