#include "exactlab/sequences.hpp"

#include <algorithm>

#include "exactlab/roots.hpp"

namespace exactlab::sequences {

EventuallyPeriodicSeq::EventuallyPeriodicSeq(std::vector<Rational> h, std::vector<Rational> c)
    : head(std::move(h)), cycle(std::move(c)) {
  if (cycle.empty()) throw DomainError("cycle must be nonempty");
}

const Rational& EventuallyPeriodicSeq::at(std::int64_t i) const {
  if (i < 0) throw DomainError("index must be nonnegative");
  const auto u = static_cast<std::size_t>(i);
  if (u < head.size()) return head[u];
  return cycle[(u - head.size()) % cycle.size()];
}

Rational cesaro_mean(const EventuallyPeriodicSeq& seq, std::int64_t n) {
  if (n < 1) throw DomainError("cesaro mean needs n >= 1");
  const auto h = static_cast<std::int64_t>(seq.head.size());
  const auto len = static_cast<std::int64_t>(seq.cycle.size());
  Rational sum;
  for (std::int64_t i = 0; i < std::min(n, h); ++i) sum += seq.head[static_cast<std::size_t>(i)];
  if (n > h) {
    const std::int64_t rest = n - h;
    Rational cycle_sum;
    for (const auto& c : seq.cycle) cycle_sum += c;
    sum += Rational(rest / len) * cycle_sum;
    for (std::int64_t i = 0; i < rest % len; ++i) sum += seq.cycle[static_cast<std::size_t>(i)];
  }
  return sum / Rational(n);
}

Rational cesaro_mean(const series::TermExpr& t, std::int64_t n) {
  if (n < 1) throw DomainError("cesaro mean needs n >= 1");
  return series::partial_sum(t, t.start + n - 1) / Rational(n);
}

Rational suffix_sup(const EventuallyPeriodicSeq& seq, std::int64_t n) {
  Rational best = seq.at(n);
  const auto stop = std::max<std::int64_t>(n, static_cast<std::int64_t>(seq.head.size())) +
                    static_cast<std::int64_t>(seq.cycle.size());
  for (std::int64_t i = n; i < stop; ++i) best = std::max(best, seq.at(i));
  return best;
}

Rational suffix_inf(const EventuallyPeriodicSeq& seq, std::int64_t n) {
  Rational best = seq.at(n);
  const auto stop = std::max<std::int64_t>(n, static_cast<std::int64_t>(seq.head.size())) +
                    static_cast<std::int64_t>(seq.cycle.size());
  for (std::int64_t i = n; i < stop; ++i) best = std::min(best, seq.at(i));
  return best;
}

std::pair<Rational, Rational> limsup_liminf(const EventuallyPeriodicSeq& seq) {
  const auto [lo, hi] = std::minmax_element(seq.cycle.begin(), seq.cycle.end());
  return {*lo, *hi};
}

BigInt fib(std::int64_t n) {
  if (n < 0) throw DomainError("fib needs n >= 0");
  BigInt a = 0;
  BigInt b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

namespace {

CertifiedEnclosure power(const CertifiedEnclosure& x, std::int64_t n) {
  // Positive endpoints only, so powers are monotone.
  return {pow(x.lo, n), pow(x.hi, n)};
}

}  // namespace

BigInt binet_round(std::int64_t n, const CertifiedEnclosure& sqrt5) {
  if (n < 0) throw DomainError("binet_round needs n >= 0");
  if (sqrt5.lo.sign() <= 0 || !(sqrt5.lo * sqrt5.lo <= Rational(5) && Rational(5) <= sqrt5.hi * sqrt5.hi))
    throw DomainError("not an enclosure of sqrt(5)");
  const Rational half(1, 2);
  const CertifiedEnclosure phi{(Rational(1) + sqrt5.lo) * half, (Rational(1) + sqrt5.hi) * half};
  const CertifiedEnclosure p = power(phi, n);
  const Rational lo = p.lo / sqrt5.hi;
  const Rational hi = p.hi / sqrt5.lo;
  const BigInt k = floor(lo + half);
  if (!(Rational(k) - half < lo && hi < Rational(k) + half)) throw AmbiguousRounding(n);
  return k;
}

BigInt binet_round(std::int64_t n, int retries) {
  // phi^n / sqrt 5 has about n/4.8 digits; start a few digits past that.
  Rational tol = pow10_inverse(static_cast<unsigned>(std::max<std::int64_t>(n, 0) / 4 + 8));
  for (int attempt = 0;; ++attempt) {
    try {
      return binet_round(n, roots::sqrt_enclosure(Rational(5), tol));
    } catch (const AmbiguousRounding&) {
      if (attempt >= retries) throw;
      tol = tol * tol;
    }
  }
}

namespace {

void check_unit(const Rational& v, const char* name) {
  if (v.sign() < 0 || v > Rational(1)) throw DomainError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

std::vector<Rational> logistic_trace(const Rational& r, const Rational& x0, std::int64_t n) {
  check_unit(r, "r");
  check_unit(x0, "x0");
  if (n < 0) throw DomainError("n must be nonnegative");
  std::vector<Rational> xs{x0};
  for (std::int64_t k = 0; k < n; ++k) {
    const Rational& x = xs.back();
    xs.push_back(r * (Rational(1) - x) * x);
  }
  return xs;
}

std::vector<CertifiedEnclosure> logistic_enclosures(const Rational& r, const Rational& x0, std::int64_t n,
                                                    unsigned bits) {
  check_unit(r, "r");
  check_unit(x0, "x0");
  if (n < 0) throw DomainError("n must be nonnegative");
  const Rational half(1, 2);
  auto g = [&](const Rational& x) { return r * (Rational(1) - x) * x; };
  std::vector<CertifiedEnclosure> out{{x0, x0}};
  for (std::int64_t k = 0; k < n; ++k) {
    const CertifiedEnclosure& e = out.back();
    // g rises on [0, 1/2] and falls on [1/2, 1].
    Rational lo = std::min(g(e.lo), g(e.hi));
    Rational hi = e.contains(half) ? g(half) : std::max(g(e.lo), g(e.hi));
    out.push_back({std::max(Rational(0), round_down(lo, bits)), std::min(Rational(1), round_up(hi, bits))});
  }
  return out;
}

Rational logistic_bound(const Rational& r, const Rational& x0, std::int64_t n) {
  if (r.sign() <= 0) throw DomainError("bound needs r > 0");
  return x0 / (Rational(n) * x0 + pow(inverse(r), n));
}

Rational harmonic_number(std::int64_t n) {
  if (n < 0) throw DomainError("harmonic number needs n >= 0");
  Rational h;
  for (std::int64_t k = 1; k <= n; ++k) h += Rational(BigInt(1), BigInt(static_cast<long>(k)));
  return h;
}

bool harmonic_identity_check(std::int64_t n) {
  if (n < 1) throw DomainError("identity needs n >= 1");
  Rational h(1);  // h_1
  Rational lhs;
  for (std::int64_t k = 2; k <= n; ++k) {
    h += Rational(BigInt(1), BigInt(static_cast<long>(k)));
    lhs += h / Rational(k * (k - 1));
  }
  const Rational h_next = h + Rational(BigInt(1), BigInt(static_cast<long>(n + 1)));
  return lhs == Rational(2) - Rational(BigInt(1), BigInt(static_cast<long>(n + 1))) - h_next / Rational(n);
}

}  // namespace exactlab::sequences
