#include "exactlab/series.hpp"

#include <algorithm>
#include <cctype>

#include "exactlab/combinatorics.hpp"

namespace exactlab::series {

namespace {

constexpr std::int64_t kZeroScanLimit = 1'000'000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail({"'" + std::string(word) + "'"});
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), "malformed series term");
  }
  std::size_t pos() const { return pos_; }

  Rational rational() {
    skip();
    if (accept("(")) {
      Rational r = rational();
      expect(")");
      return r;
    }
    const std::size_t begin = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      return pos_ > d;
    };
    if (!digits()) fail({"rational"});
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail({"denominator"});
    }
    try {
      return parse_rational(text_.substr(begin, pos_ - begin));
    } catch (const DivisionByZero&) {
      throw ParseError(begin, {"nonzero denominator"}, "zero denominator");
    }
  }

  std::int64_t integer() {
    skip();
    const std::size_t begin = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    const std::string_view digits = text_.substr(begin, pos_ - begin);
    if (digits.empty() || digits == "-" || digits == "+" || digits.size() > 18) fail({"integer"});
    return std::stoll(std::string(digits));
  }

  IntPoly parenthesized_poly() {
    expect("(");
    const std::size_t begin = pos_;
    const std::size_t close = text_.find(')', begin);
    if (close == std::string_view::npos) fail({"')'"});
    try {
      IntPoly p = parse_poly(text_.substr(begin, close - begin));
      pos_ = close + 1;
      return p;
    } catch (const ParseError& e) {
      throw ParseError(begin + e.offset(), e.expected(), "in polynomial");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_factor(const Rational& r) {
  if (r.sign() >= 0 && r.is_integer()) return r.str();
  return "(" + r.str() + ")";
}

}  // namespace

TermExpr make_term(bool alternating, Rational coefficient, Rational ratio, IntPoly numerator, IntPoly denominator,
                   int factorial_power, std::int64_t start) {
  if (factorial_power < -1 || factorial_power > 1) throw DomainError("factorial power must be -1, 0 or 1");
  if (start < 0) throw DomainError("start index must be nonnegative");
  if (denominator.is_zero()) throw DivisionByZero();
  const BigInt bound = denominator.root_bound();
  if (bound > start) {
    if (BigInt(bound - start) > kZeroScanLimit)
      throw DomainError("denominator roots too large to certify Q(n) != 0");
    for (std::int64_t n = start; n < bound.get_si(); ++n) {
      if (sgn(denominator(n)) == 0) throw DomainError("denominator vanishes at n = " + std::to_string(n));
    }
  }
  return {alternating, std::move(coefficient), std::move(ratio), std::move(numerator), std::move(denominator),
          factorial_power, start};
}

TermExpr parse_term(std::string_view text) {
  Cursor in(text);
  const bool alt = in.accept("alt");
  Rational c = in.rational();
  in.expect("*");
  Rational r = in.rational();
  in.expect("^");
  in.expect("n");
  in.expect("*");
  IntPoly p = in.parenthesized_poly();
  in.expect("/");
  IntPoly q = in.parenthesized_poly();
  int m = 0;
  if (in.accept("*")) {
    in.expect("fact");
    in.expect("^");
    const std::int64_t v = in.integer();
    if (v < -1 || v > 1) in.fail({"-1", "0", "1"});
    m = static_cast<int>(v);
  }
  std::int64_t start = 0;
  if (in.accept("from")) start = in.integer();
  if (!in.done()) in.fail({"'* fact^m'", "'from'", "end of input"});
  return make_term(alt, std::move(c), std::move(r), std::move(p), std::move(q), m, start);
}

std::string format_term(const TermExpr& t) {
  std::string out = t.alternating ? "alt " : "";
  out += format_factor(t.coefficient) + " * " + format_factor(t.ratio) + "^n * (" + t.numerator.str() + ")/(" +
         t.denominator.str() + ") * fact^" + std::to_string(t.factorial_power) + " from " + std::to_string(t.start);
  return out;
}

Rational term_eval(const TermExpr& t, std::int64_t n) {
  if (n < t.start) throw IndexBelowStart();
  Rational v = t.coefficient * pow(t.ratio, n) * Rational(t.numerator(n), t.denominator(n));
  if (t.factorial_power == 1) v *= Rational(factorial(n));
  if (t.factorial_power == -1) v /= Rational(factorial(n));
  if (t.alternating && n % 2 != 0) v = -v;
  return v;
}

Rational partial_sum(const TermExpr& t, std::int64_t n) {
  Rational sum;
  if (n < t.start) return sum;
  Rational power = pow(t.ratio, t.start);
  BigInt fact = factorial(t.start);
  for (std::int64_t k = t.start; k <= n; ++k) {
    if (k > t.start) {
      power *= t.ratio;
      fact *= k;
    }
    Rational v = t.coefficient * power * Rational(t.numerator(k), t.denominator(k));
    if (t.factorial_power == 1) v *= Rational(fact);
    if (t.factorial_power == -1) v /= Rational(fact);
    if (t.alternating && k % 2 != 0) v = -v;
    sum += v;
  }
  return sum;
}

Rational RatioFunction::operator()(std::int64_t n) const { return scale * Rational(num(n), den(n)); }

RatioLimit exact_ratio(const TermExpr& t) {
  if (t.coefficient.is_zero() || t.numerator.is_zero()) throw DomainError("ratio of an identically zero series");
  const IntPoly n_plus_1({BigInt(1), BigInt(1)});
  IntPoly num = t.numerator.shifted() * t.denominator;
  IntPoly den = t.numerator * t.denominator.shifted();
  if (t.factorial_power == 1) num = num * n_plus_1;
  if (t.factorial_power == -1) den = den * n_plus_1;
  if (den.eventual_sign() < 0) {
    num = BigInt(-1) * num;
    den = BigInt(-1) * den;
  }

  RatioLimit out;
  out.function = {abs(t.ratio), std::move(num), std::move(den)};
  if (t.ratio.is_zero() || t.factorial_power == -1) {
    out.kind = RatioLimit::Kind::Zero;
    out.q = Rational(0);
  } else if (t.factorial_power == 1) {
    out.kind = RatioLimit::Kind::Infinite;
  } else {
    out.kind = RatioLimit::Kind::Finite;
    out.q = abs(t.ratio);
  }
  return out;
}

namespace {

std::int64_t eventually_positive_from(const IntPoly& p, std::int64_t from) {
  if (p.eventual_sign() < 0) return positive_from(BigInt(-1) * p, from);
  return positive_from(p, from);
}

}  // namespace

std::optional<std::int64_t> ratio_bound_index(const TermExpr& t, const Rational& beta) {
  const RatioLimit lim = exact_ratio(t);
  if (lim.kind == RatioLimit::Kind::Infinite) return std::nullopt;
  if (lim.kind == RatioLimit::Kind::Finite && !(lim.q < beta)) return std::nullopt;
  if (lim.kind == RatioLimit::Kind::Zero && beta.sign() <= 0) return std::nullopt;

  // scale * num / den <= beta  <=>  beta * den - scale * num >= 0 once den > 0.
  const RatioFunction& f = lim.function;
  const IntPoly gap = BigInt(beta.num() * f.scale.den()) * f.den - BigInt(f.scale.num() * beta.den()) * f.num;
  std::int64_t n = t.start;
  n = std::max(n, eventually_positive_from(t.numerator, t.start));
  n = std::max(n, eventually_positive_from(f.den, t.start));
  n = std::max(n, positive_from(gap, t.start));
  return n;
}

std::optional<Rational> root_limit(const TermExpr& t) {
  if (t.factorial_power != 0 || t.numerator.degree() != 0 || t.denominator.degree() != 0) return std::nullopt;
  return abs(t.ratio);
}

}  // namespace exactlab::series
