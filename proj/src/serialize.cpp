#include "exactlab/serialize.hpp"

#include "exactlab/polynomial.hpp"

namespace exactlab::serialize {

json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

json to_json(const CertifiedEnclosure& e) { return json::array({to_json(e.lo), to_json(e.hi)}); }

CertifiedEnclosure enclosure_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("expected [lo, hi]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const logic::TruthTable& t) {
  json formulas = json::array();
  for (const auto& f : t.formulas) formulas.push_back(logic::format(f));
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"assignment", r.assignment}, {"values", r.values}});
  return {{"variables", t.variables}, {"formulas", formulas}, {"rows", rows}};
}

logic::TruthTable truth_table_from_json(const json& j) {
  logic::TruthTable t;
  t.variables = j.at("variables").get<std::vector<std::string>>();
  for (const auto& f : j.at("formulas")) t.formulas.push_back(logic::parse_formula(f.get<std::string>()));
  for (const auto& r : j.at("rows")) {
    t.rows.push_back({r.at("assignment").get<std::vector<bool>>(), r.at("values").get<std::vector<bool>>()});
  }
  return t;
}

json to_json(const roots::IterationTrace& t) {
  json iterates = json::array();
  for (const auto& x : t.iterates) iterates.push_back(to_json(x));
  json enclosures = json::array();
  for (const auto& e : t.enclosures) enclosures.push_back(to_json(e));
  json widths = json::array();
  for (const auto& w : t.widths) widths.push_back(to_json(w));
  return {{"a", to_json(t.target)},     {"k", t.degree},         {"iterates", iterates},
          {"enclosures", enclosures}, {"widths", widths},      {"converged", t.converged}};
}

roots::IterationTrace trace_from_json(const json& j) {
  roots::IterationTrace t;
  t.target = rational_from_json(j.at("a"));
  t.degree = j.at("k").get<int>();
  for (const auto& x : j.at("iterates")) t.iterates.push_back(rational_from_json(x));
  for (const auto& e : j.at("enclosures")) t.enclosures.push_back(enclosure_from_json(e));
  if (j.contains("widths")) {
    for (const auto& w : j.at("widths")) t.widths.push_back(rational_from_json(w));
  }
  t.converged = j.value("converged", false);
  return t;
}

namespace {

std::string_view kind_name(series::RatioLimit::Kind k) {
  switch (k) {
    case series::RatioLimit::Kind::Finite:
      return "finite";
    case series::RatioLimit::Kind::Zero:
      return "zero";
    case series::RatioLimit::Kind::Infinite:
      return "infinite";
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum lookup(const std::string& name, const std::array<Enum, N>& all) {
  for (Enum e : all) {
    if (series::to_string(e) == name) return e;
  }
  throw DomainError("unknown name '" + name + "'");
}

}  // namespace

json to_json(const series::TestVerdict& v) {
  json evidence = json::object();
  if (v.evidence.ratio) {
    const auto& r = *v.evidence.ratio;
    json ratio = {{"kind", kind_name(r.kind)},
                  {"function",
                   {{"scale", to_json(r.function.scale)}, {"num", r.function.num.str()}, {"den", r.function.den.str()}}}};
    if (r.kind != series::RatioLimit::Kind::Infinite) ratio["q"] = to_json(r.q);
    evidence["ratio"] = ratio;
  }
  if (v.evidence.threshold) evidence["threshold"] = *v.evidence.threshold;
  if (v.evidence.comparison_exponent) evidence["comparison_exponent"] = *v.evidence.comparison_exponent;
  if (v.evidence.term_limit) evidence["term_limit"] = *v.evidence.term_limit;
  return {{"conclusion", series::to_string(v.conclusion)},
          {"fired_test", series::to_string(v.fired_test)},
          {"evidence", evidence}};
}

series::TestVerdict verdict_from_json(const json& j) {
  using series::Conclusion;
  using series::FiredTest;
  series::TestVerdict v;
  v.conclusion = lookup(j.at("conclusion").get<std::string>(),
                        std::array{Conclusion::ConvergesAbsolutely, Conclusion::ConvergesConditionally,
                                   Conclusion::Diverges, Conclusion::Inconclusive});
  v.fired_test = lookup(j.at("fired_test").get<std::string>(),
                        std::array{FiredTest::FiniteSupport, FiredTest::Divergence, FiredTest::Ratio,
                                   FiredTest::PSeriesComparison, FiredTest::HarmonicComparison, FiredTest::Leibniz,
                                   FiredTest::None});
  const json& e = j.at("evidence");
  if (e.contains("ratio")) {
    const json& r = e.at("ratio");
    series::RatioLimit lim;
    const auto kind = r.at("kind").get<std::string>();
    if (kind == "finite") {
      lim.kind = series::RatioLimit::Kind::Finite;
    } else if (kind == "zero") {
      lim.kind = series::RatioLimit::Kind::Zero;
    } else if (kind == "infinite") {
      lim.kind = series::RatioLimit::Kind::Infinite;
    } else {
      throw DomainError("unknown ratio kind '" + kind + "'");
    }
    if (r.contains("q")) lim.q = rational_from_json(r.at("q"));
    const json& f = r.at("function");
    lim.function = {rational_from_json(f.at("scale")), parse_poly(f.at("num").get<std::string>()),
                    parse_poly(f.at("den").get<std::string>())};
    v.evidence.ratio = std::move(lim);
  }
  if (e.contains("threshold")) v.evidence.threshold = e.at("threshold").get<std::int64_t>();
  if (e.contains("comparison_exponent")) v.evidence.comparison_exponent = e.at("comparison_exponent").get<int>();
  if (e.contains("term_limit")) v.evidence.term_limit = e.at("term_limit").get<std::string>();
  return v;
}

json to_json(const analytic::CertifiedValue& v) {
  return {{"value", to_json(v.value)},
          {"error_bound", to_json(v.error_bound)},
          {"terms_used", v.terms_used},
          {"enclosure", to_json(v.enclosure())}};
}

analytic::CertifiedValue certified_value_from_json(const json& j) {
  return {rational_from_json(j.at("value")), rational_from_json(j.at("error_bound")),
          j.at("terms_used").get<std::int64_t>()};
}

}  // namespace exactlab::serialize
