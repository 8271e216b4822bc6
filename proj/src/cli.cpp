#include "exactlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

#include "exactlab/analytic.hpp"
#include "exactlab/combinatorics.hpp"
#include "exactlab/decimal.hpp"
#include "exactlab/fields.hpp"
#include "exactlab/logic.hpp"
#include "exactlab/radix.hpp"
#include "exactlab/roots.hpp"
#include "exactlab/sequences.hpp"
#include "exactlab/serialize.hpp"
#include "exactlab/series.hpp"

namespace exactlab::cli {

namespace {

using serialize::json;
using serialize::to_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& out, bool color) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());

    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) s += " | ";
        s += cells[c];
        if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
      }
      return s;
    };
    const std::string head = line(header);
    out << (color ? "\x1b[1m" + head + "\x1b[0m" : head) << '\n';
    std::string rule;
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c > 0) rule += "-+-";
      rule.append(width[c], '-');
    }
    out << rule << '\n';
    for (const auto& r : rows) out << line(r) << '\n';
  }

  void csv(std::ostream& out) const {
    auto quote = [](const std::string& cell) {
      if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
      std::string q = "\"";
      for (char ch : cell) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c > 0 ? "," : "") << quote(cells[c]);
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

class Emitter {
 public:
  Emitter(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  const CliConfig& config() const { return cfg_; }
  std::ostream& stream() { return out_; }

  void emit_json(const json& j) { out_ << j.dump(2) << '\n'; }

  /// Key/value report: table as "key: value" lines, csv as two columns.
  void record(const std::vector<std::pair<std::string, std::string>>& fields, const json& j) {
    switch (cfg_.format) {
      case OutputFormat::Json:
        emit_json(j);
        return;
      case OutputFormat::Csv: {
        Table t{{"field", "value"}, {}};
        for (const auto& [k, v] : fields) t.rows.push_back({k, v});
        t.csv(out_);
        return;
      }
      case OutputFormat::Table:
        for (const auto& [k, v] : fields) out_ << k << ": " << v << '\n';
        return;
    }
  }

  /// A single value: printed bare in table and csv form.
  void scalar(const std::string& text, const json& j) {
    if (cfg_.format == OutputFormat::Json) {
      emit_json(j);
    } else {
      out_ << text << '\n';
    }
  }

  void table(const Table& t, const json& j) {
    switch (cfg_.format) {
      case OutputFormat::Json:
        emit_json(j);
        return;
      case OutputFormat::Csv:
        t.csv(out_);
        return;
      case OutputFormat::Table:
        t.render(out_, cfg_.color);
        return;
    }
  }

 private:
  const CliConfig& cfg_;
  std::ostream& out_;
};

std::string enclosure_text(const CertifiedEnclosure& e) { return "[" + e.lo.str() + ", " + e.hi.str() + "]"; }

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = std::min(text.find(',', begin), text.size());
    const std::string_view item(text.data() + begin, comma - begin);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(begin + e.offset(), e.expected(), "in list item");
    }
    begin = comma + 1;
  }
  return out;
}

json rational_array(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

// ---------------------------------------------------------------- logic

std::string tf(bool b) { return b ? "T" : "F"; }

void logic_table(Emitter& em, const std::vector<std::string>& texts) {
  std::vector<logic::Formula> fs;
  for (const auto& t : texts) fs.push_back(logic::parse_formula(t));
  const logic::TruthTable tt = logic::truth_table(fs);
  if (em.config().format == OutputFormat::Csv) {
    em.stream() << logic::to_csv(tt);
    return;
  }
  Table t;
  t.header = tt.variables;
  for (const auto& f : tt.formulas) t.header.push_back(logic::format(f));
  for (const auto& row : tt.rows) {
    std::vector<std::string> cells;
    for (bool b : row.assignment) cells.push_back(tf(b));
    for (bool b : row.values) cells.push_back(tf(b));
    t.rows.push_back(std::move(cells));
  }
  em.table(t, to_json(tt));
}

std::string assignment_text(const logic::Assignment& a) {
  std::string s;
  for (const auto& [name, value] : a) s += (s.empty() ? "" : " ") + name + "=" + tf(value);
  return s;
}

void logic_equiv(Emitter& em, const std::string& a, const std::string& b) {
  const logic::Formula f = logic::parse_formula(a);
  const logic::Formula g = logic::parse_formula(b);
  const auto witness = logic::distinguishing_assignment(f, g);
  json j = {{"left", logic::format(f)}, {"right", logic::format(g)}, {"equivalent", !witness}};
  if (witness) {
    json w = json::object();
    for (const auto& [name, value] : *witness) w[name] = value;
    j["witness"] = w;
    em.scalar("not equivalent: " + assignment_text(*witness), j);
  } else {
    em.scalar("equivalent", j);
  }
}

void logic_classify(Emitter& em, const std::string& text) {
  const logic::Formula f = logic::parse_formula(text);
  const auto c = std::string(logic::to_string(logic::classify(f)));
  em.scalar(c, {{"formula", logic::format(f)}, {"classification", c}});
}

void logic_transform(Emitter& em, const std::string& text, const std::string& form) {
  const logic::Formula f = logic::parse_formula(text);
  logic::ImplicationForm kind = logic::ImplicationForm::Contrapositive;
  if (form == "converse") kind = logic::ImplicationForm::Converse;
  if (form == "inverse") kind = logic::ImplicationForm::Inverse;
  const std::string result = logic::format(logic::implication_transform(f, kind));
  em.scalar(result, {{"input", logic::format(f)}, {"form", form}, {"result", result}});
}

void logic_negate(Emitter& em, const std::string& text) {
  const auto s = logic::parse_statement(text);
  const std::string result = logic::format(logic::negate_quantified(s));
  em.scalar(result, {{"input", logic::format(s)}, {"negation", result}});
}

// ---------------------------------------------------------------- num

void num_arith(Emitter& em, const std::string& lhs, const std::string& op, const std::string& rhs) {
  const Rational a = parse_rational(lhs);
  const Rational b = parse_rational(rhs);
  Rational r;
  if (op == "+") {
    r = a + b;
  } else if (op == "-") {
    r = a - b;
  } else if (op == "*" || op == "x") {
    r = a * b;
  } else if (op == "/") {
    r = a / b;
  } else if (op == "max") {
    r = max_min(a, b).first;
  } else if (op == "min") {
    r = max_min(a, b).second;
  } else {
    throw ParseError(0, {"+", "-", "*", "/", "max", "min"}, "unknown operator '" + op + "'");
  }
  em.scalar(r.str(), {{"result", to_json(r)}});
}

void num_binom(Emitter& em, std::int64_t n, std::int64_t k) {
  const BigInt b = binomial(n, k);
  em.scalar(b.get_str(), {{"n", n}, {"k", k}, {"binomial", b.get_str()}});
}

void num_fact(Emitter& em, std::int64_t n) {
  const BigInt f = factorial(n);
  em.scalar(f.get_str(), {{"n", n}, {"factorial", f.get_str()}});
}

void num_sum(Emitter& em, const std::string& kind, std::int64_t n, const std::string& ratio) {
  SumKind k{parse_sum_tag(kind), {}};
  if (k.tag == SumKind::Tag::Geometric) {
    if (ratio.empty()) throw ParseError(0, {"--ratio"}, "geometric sum needs --ratio");
    k.ratio = parse_rational(ratio);
  }
  const Rational s = closed_form_sum(k, n);
  json j = {{"kind", kind}, {"n", n}, {"sum", to_json(s)}};
  if (k.tag == SumKind::Tag::Geometric) j["ratio"] = to_json(k.ratio);
  em.scalar(s.str(), j);
}

void num_enum(Emitter& em, std::int64_t count) {
  if (count < 0) throw DomainError("count must be nonnegative");
  const auto qs = enumerate_rationals(static_cast<std::size_t>(count));
  Table t{{"index", "rational"}, {}};
  for (std::size_t i = 0; i < qs.size(); ++i) t.rows.push_back({std::to_string(i), qs[i].str()});
  em.table(t, rational_array(qs));
}

void num_zmod(Emitter& em, std::int64_t m, const std::string& lhs, const std::string& op, const std::string& rhs) {
  const ZMod ring(m);
  const Residue a = ring.reduce(BigInt(lhs));
  const Residue b = ring.reduce(BigInt(rhs));
  Residue r{};
  if (op == "+") {
    r = ring.add(a, b);
  } else if (op == "-") {
    r = ring.sub(a, b);
  } else if (op == "*" || op == "x") {
    r = ring.mul(a, b);
  } else if (op == "/") {
    const auto inv = ring.inverse(b);
    if (!inv) throw DomainError(std::to_string(b.value) + " has no inverse modulo " + std::to_string(m));
    r = ring.mul(a, *inv);
  } else {
    throw ParseError(0, {"+", "-", "*", "/"}, "unknown operator '" + op + "'");
  }
  em.scalar(std::to_string(r.value), {{"modulus", m}, {"result", r.value}, {"field", ring.is_field()}});
}

BigInt parse_integer(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) throw ParseError(0, {"integer"}, "bad integer '" + text + "'");
  return v;
}

// ---------------------------------------------------------------- radix

void radix_expand(Emitter& em, const std::string& text) {
  const Rational x = parse_rational(text);
  const auto e = radix::expand_rational(x, em.config().base);
  const std::string s = radix::format_expansion(e);
  em.scalar(s, {{"value", to_json(x)}, {"base", e.base}, {"expansion", s}});
}

void radix_to_frac(Emitter& em, const std::string& text) {
  const auto e = radix::parse_expansion(text);
  const Rational x = radix::to_rational(e);
  em.scalar(x.str(), {{"expansion", radix::format_expansion(e)}, {"value", to_json(x)}});
}

// ---------------------------------------------------------------- root

Rational start_value(const std::string& x0, const Rational& a) {
  return x0.empty() ? roots::default_start(a) : parse_rational(x0);
}

void root_summary(Emitter& em, const roots::IterationTrace& t) {
  em.record({{"root", t.iterates.back().str()},
             {"enclosure", enclosure_text(t.final_enclosure())},
             {"steps", std::to_string(t.steps())},
             {"converged", t.converged ? "yes" : "no"}},
            to_json(t));
}

void root_trace(Emitter& em, const roots::IterationTrace& t) {
  Table table{{"n", "x_n", "lo", "hi"}, {}};
  for (std::size_t n = 0; n < t.iterates.size(); ++n) {
    table.rows.push_back(
        {std::to_string(n), t.iterates[n].str(), t.enclosures[n].lo.str(), t.enclosures[n].hi.str()});
  }
  em.table(table, to_json(t));
}

void root_enclose(Emitter& em, const Rational& a, int k) {
  const auto e = roots::root_enclosure(a, k, em.config().tolerance);
  em.record({{"enclosure", enclosure_text(e)},
             {"width", e.width().str()},
             {"decimal", certified_decimal(e, 40)}},
            {{"a", to_json(a)}, {"k", k}, {"enclosure", to_json(e)}});
}

// ---------------------------------------------------------------- series

void series_test(Emitter& em, const std::string& text) {
  const auto term = series::parse_term(text);
  const auto v = series::classify_series(term);
  std::vector<std::pair<std::string, std::string>> fields{
      {"term", series::format_term(term)},
      {"conclusion", std::string(series::to_string(v.conclusion))},
      {"test", std::string(series::to_string(v.fired_test))}};
  if (v.evidence.ratio && v.evidence.ratio->kind != series::RatioLimit::Kind::Infinite)
    fields.emplace_back("ratio limit", v.evidence.ratio->q.str());
  if (v.evidence.ratio && v.evidence.ratio->kind == series::RatioLimit::Kind::Infinite)
    fields.emplace_back("ratio limit", "+inf");
  if (v.evidence.term_limit) fields.emplace_back("term limit", *v.evidence.term_limit);
  if (v.evidence.comparison_exponent)
    fields.emplace_back("comparison", "sum 1/n^" + std::to_string(*v.evidence.comparison_exponent));
  if (v.evidence.threshold) fields.emplace_back("from index", std::to_string(*v.evidence.threshold));
  json j = to_json(v);
  j["term"] = series::format_term(term);
  em.record(fields, j);
}

void series_sum(Emitter& em, const std::string& text, std::int64_t n) {
  const auto term = series::parse_term(text);
  const Rational s = series::partial_sum(term, n);
  em.scalar(s.str(), {{"term", series::format_term(term)}, {"n", n}, {"partial_sum", to_json(s)}});
}

void series_enclose(Emitter& em, const std::string& text, std::int64_t n) {
  const auto term = series::parse_term(text);
  const auto e = series::alternating_enclosure(term, n);
  em.record({{"enclosure", enclosure_text(e)}, {"width", e.width().str()}},
            {{"term", series::format_term(term)}, {"n", n}, {"enclosure", to_json(e)}});
}

void certified_report(Emitter& em, const analytic::CertifiedValue& v) {
  const auto e = v.enclosure();
  const int digits = guaranteed_digits(e, 60);
  em.record({{"value", v.value.str()},
             {"error bound", v.error_bound.str()},
             {"terms", std::to_string(v.terms_used)},
             {"enclosure", enclosure_text(e)},
             {"decimal", digits < 0 ? "?" : truncate_decimal(e.lo, static_cast<unsigned>(digits))}},
            to_json(v));
}

void series_exp(Emitter& em, const std::string& x) {
  certified_report(em, analytic::exp_eval(parse_rational(x), em.config().tolerance));
}

void series_trig(Emitter& em, const std::string& fn, const std::string& x) {
  if (fn != "sin" && fn != "cos") throw ParseError(0, {"sin", "cos"}, "unknown function '" + fn + "'");
  const auto kind = fn == "sin" ? analytic::Trig::Sin : analytic::Trig::Cos;
  certified_report(em, analytic::trig_eval(kind, parse_rational(x), em.config().tolerance));
}

void series_e(Emitter& em, int digits) {
  if (digits < 0 || digits > 1000) throw DomainError("digits must lie in [0, 1000]");
  const auto d = static_cast<unsigned>(digits);
  Rational eps = pow10_inverse(d + 1);
  for (;;) {
    const auto v = analytic::exp_eval(Rational(1), eps);
    if (guaranteed_digits(v.enclosure(), d) == digits) {
      const std::string text = certified_decimal(v.enclosure(), d);
      em.scalar(text, {{"digits", digits}, {"decimal", text}, {"certificate", to_json(v)}});
      return;
    }
    eps = eps * Rational(1, 10);
  }
}

void series_cauchy(Emitter& em, const std::string& a_text, const std::string& b_text) {
  const auto a = parse_list(a_text);
  const auto b = parse_list(b_text);
  const auto c = analytic::cauchy_product(a, b);
  Rational sa, sb, sc;
  for (const auto& x : a) sa += x;
  for (const auto& x : b) sb += x;
  for (const auto& x : c) sc += x;
  Table t{{"n", "c_n"}, {}};
  for (std::size_t i = 0; i < c.size(); ++i) t.rows.push_back({std::to_string(i), c[i].str()});
  json j = {{"a", rational_array(a)},   {"b", rational_array(b)},   {"c", rational_array(c)},
            {"sum_a", to_json(sa)},     {"sum_b", to_json(sb)},     {"sum_c", to_json(sc)}};
  if (em.config().format == OutputFormat::Table) {
    t.render(em.stream(), em.config().color);
    em.stream() << "sum c = " << sc.str() << " = (" << sa.str() << ")(" << sb.str() << ")\n";
    return;
  }
  em.table(t, j);
}

void series_fib(Emitter& em, std::int64_t n) {
  if (n < 0) throw DomainError("fib needs n >= 0");
  Table t{{"n", "fib", "binet"}, {}};
  json rows = json::array();
  for (std::int64_t i = 0; i <= n; ++i) {
    const std::string f = sequences::fib(i).get_str();
    const std::string b = sequences::binet_round(i).get_str();
    t.rows.push_back({std::to_string(i), f, b});
    rows.push_back({{"n", i}, {"fib", f}, {"binet", b}});
  }
  em.table(t, rows);
}

sequences::EventuallyPeriodicSeq make_seq(const std::string& head, const std::string& cycle) {
  return {head.empty() ? std::vector<Rational>{} : parse_list(head), parse_list(cycle)};
}

void series_limsup(Emitter& em, const std::string& head, const std::string& cycle) {
  const auto seq = make_seq(head, cycle);
  const auto [lo, hi] = sequences::limsup_liminf(seq);
  em.record({{"liminf", lo.str()}, {"limsup", hi.str()}, {"convergent", lo == hi ? "yes" : "no"}},
            {{"head", rational_array(seq.head)},
             {"cycle", rational_array(seq.cycle)},
             {"liminf", to_json(lo)},
             {"limsup", to_json(hi)}});
}

void series_cesaro(Emitter& em, const std::string& head, const std::string& cycle, std::int64_t n) {
  const auto seq = make_seq(head, cycle);
  const Rational m = sequences::cesaro_mean(seq, n);
  em.scalar(m.str(), {{"n", n}, {"mean", to_json(m)}});
}

void series_logistic(Emitter& em, const std::string& r_text, const std::string& x0_text, std::int64_t n) {
  const Rational r = parse_rational(r_text);
  const Rational x0 = parse_rational(x0_text);
  const auto xs = sequences::logistic_trace(r, x0, n);
  Table t{{"n", "x_n"}, {}};
  for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({std::to_string(i), xs[i].str()});
  em.table(t, {{"r", to_json(r)}, {"x0", to_json(x0)}, {"iterates", rational_array(xs)}});
}

void series_harmonic(Emitter& em, std::int64_t n) {
  const Rational h = sequences::harmonic_number(n);
  em.scalar(h.str(), {{"n", n}, {"harmonic", to_json(h)}});
}

// ---------------------------------------------------------------- dispatch

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Table;
}

void report_parse_error(std::ostream& err, const ParseError& e) {
  err << "error: " << e.what() << " (at offset " << e.offset();
  if (!e.expected().empty()) {
    err << "; expected ";
    for (std::size_t i = 0; i < e.expected().size(); ++i) err << (i > 0 ? ", " : "") << e.expected()[i];
  }
  err << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Exact rational arithmetic, logic tables, radix expansions, roots and series.", "exactlab"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  cfg.color = color;
  std::string format = "table";
  std::string tol_text;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--tol", tol_text, "Tolerance as p/q (default 1/100000000)");
  app.add_option("--max-iter", cfg.max_iter, "Iteration cap (default 12)")->check(CLI::PositiveNumber);
  app.add_option("--base", cfg.base, "Radix base 2-16 (default 10)")->check(CLI::Range(2, 16));

  Emitter em(cfg, out);
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };

  // Shared positional slots. Only one leaf runs per invocation.
  std::vector<std::string> formulas;
  std::string s1, s2, s3, s4, opt_text;
  std::int64_t i1 = 0, i2 = 0;
  int k = 2;
  int digits = 7;

  auto* logic = app.add_subcommand("logic", "Propositional logic");
  logic->require_subcommand(1);
  {
    auto* c = leaf(logic, "table", "Truth table of one or more formulas");
    c->add_option("formulas", formulas, "Formulas")->required();
    actions.emplace_back(c, [&] { logic_table(em, formulas); });

    c = leaf(logic, "equiv", "Decide logical equivalence");
    c->add_option("f", s1)->required();
    c->add_option("g", s2)->required();
    actions.emplace_back(c, [&] { logic_equiv(em, s1, s2); });

    c = leaf(logic, "classify", "Tautology, contradiction or contingent");
    c->add_option("formula", s1)->required();
    actions.emplace_back(c, [&] { logic_classify(em, s1); });

    c = leaf(logic, "transform", "Converse, inverse or contrapositive of an implication");
    c->add_option("formula", s1)->required();
    opt_text = "contrapositive";
    c->add_option("--to", opt_text)->check(CLI::IsMember({"converse", "inverse", "contrapositive"}));
    actions.emplace_back(c, [&] { logic_transform(em, s1, opt_text); });

    c = leaf(logic, "negate", "Negate a quantified statement");
    c->add_option("statement", s1)->required();
    actions.emplace_back(c, [&] { logic_negate(em, s1); });
  }

  auto* num = app.add_subcommand("num", "Exact numbers and combinatorics");
  num->require_subcommand(1);
  {
    auto* c = leaf(num, "arith", "a OP b with OP in + - * / max min");
    c->add_option("a", s1)->required();
    c->add_option("op", s2)->required();
    c->add_option("b", s3)->required();
    actions.emplace_back(c, [&] { num_arith(em, s1, s2, s3); });

    c = leaf(num, "binom", "Binomial coefficient");
    c->add_option("n", i1)->required();
    c->add_option("k", i2)->required();
    actions.emplace_back(c, [&] { num_binom(em, i1, i2); });

    c = leaf(num, "fact", "Factorial");
    c->add_option("n", i1)->required();
    actions.emplace_back(c, [&] { num_fact(em, i1); });

    c = leaf(num, "sum", "Closed-form sum: gauss squares cubes odds geometric telescoping christmas");
    c->add_option("kind", s1)->required();
    c->add_option("n", i1)->required();
    c->add_option("--ratio", s2, "Ratio of the geometric sum");
    actions.emplace_back(c, [&] { num_sum(em, s1, i1, s2); });

    c = leaf(num, "enum", "First rationals of the diagonal enumeration");
    c->add_option("count", i1)->required();
    actions.emplace_back(c, [&] { num_enum(em, i1); });

    c = leaf(num, "zmod", "a OP b in Z/mZ");
    c->add_option("m", i1)->required();
    c->add_option("a", s1)->required();
    c->add_option("op", s2)->required();
    c->add_option("b", s3)->required();
    actions.emplace_back(c, [&] {
      parse_integer(s1);
      parse_integer(s3);
      num_zmod(em, i1, s1, s2, s3);
    });
  }

  auto* rad = app.add_subcommand("radix", "Base-b expansions");
  rad->require_subcommand(1);
  {
    auto* c = leaf(rad, "expand", "Expansion of a rational in --base");
    c->add_option("x", s1)->required();
    actions.emplace_back(c, [&] { radix_expand(em, s1); });

    c = leaf(rad, "to-frac", "Rational value of an expansion such as 0.13(42)_10");
    c->add_option("expansion", s1)->required();
    actions.emplace_back(c, [&] { radix_to_frac(em, s1); });
  }

  auto* root = app.add_subcommand("root", "Newton iteration for roots");
  root->require_subcommand(1);
  {
    auto* c = leaf(root, "sqrt", "Babylonian square root");
    c->add_option("a", s1)->required();
    c->add_option("--x0", s2, "Start value (default max(1, a))");
    actions.emplace_back(c, [&] {
      const Rational a = parse_rational(s1);
      root_summary(em, roots::babylonian_sqrt(a, start_value(s2, a), cfg.tolerance, cfg.max_iter));
    });

    c = leaf(root, "kth", "k-th root");
    c->add_option("a", s1)->required();
    c->add_option("k", k)->required()->check(CLI::Range(2, 64));
    c->add_option("--x0", s2, "Start value (default max(1, a))");
    actions.emplace_back(c, [&] {
      const Rational a = parse_rational(s1);
      root_summary(em, roots::kth_root(a, k, start_value(s2, a), cfg.tolerance, cfg.max_iter));
    });

    c = leaf(root, "trace", "Iterates and enclosures step by step");
    c->add_option("a", s1)->required();
    c->add_option("-k,--degree", k, "Root degree (default 2)")->check(CLI::Range(2, 64));
    c->add_option("--x0", s2, "Start value (default max(1, a))");
    actions.emplace_back(c, [&] {
      const Rational a = parse_rational(s1);
      root_trace(em, roots::kth_root(a, k, start_value(s2, a), cfg.tolerance, cfg.max_iter));
    });

    c = leaf(root, "enclose", "Certified enclosure narrower than --tol");
    c->add_option("a", s1)->required();
    c->add_option("-k,--degree", k, "Root degree (default 2)")->check(CLI::Range(2, 64));
    actions.emplace_back(c, [&] { root_enclose(em, parse_rational(s1), k); });
  }

  auto* ser = app.add_subcommand("series", "Series and sequences");
  ser->require_subcommand(1);
  {
    const std::string term_help = "Term: [alt] c * r^n * (P)/(Q) [* fact^m] [from n0]";
    auto* c = leaf(ser, "test", "Classify convergence");
    c->add_option("term", s1, term_help)->required();
    actions.emplace_back(c, [&] { series_test(em, s1); });

    c = leaf(ser, "sum", "Partial sum up to index n");
    c->add_option("term", s1, term_help)->required();
    c->add_option("n", i1)->required();
    actions.emplace_back(c, [&] { series_sum(em, s1, i1); });

    c = leaf(ser, "enclose", "Leibniz enclosure [s_2n, s_2n+1] of an alternating series");
    c->add_option("term", s1, term_help)->required();
    c->add_option("n", i1)->required();
    actions.emplace_back(c, [&] { series_enclose(em, s1, i1); });

    c = leaf(ser, "exp", "exp(x) with remainder bound below --tol");
    c->add_option("x", s1)->required();
    actions.emplace_back(c, [&] { series_exp(em, s1); });

    c = leaf(ser, "e", "Certified decimal digits of e");
    c->add_option("--digits", digits, "Fractional digits (default 7)");
    actions.emplace_back(c, [&] { series_e(em, digits); });

    c = leaf(ser, "trig", "sin or cos for |x| <= 2 with error bound below --tol");
    c->add_option("function", s1)->required();
    c->add_option("x", s2)->required();
    actions.emplace_back(c, [&] { series_trig(em, s1, s2); });

    c = leaf(ser, "cauchy", "Cauchy product of two finite coefficient lists");
    c->add_option("a", s1, "Comma-separated rationals")->required();
    c->add_option("b", s2, "Comma-separated rationals")->required();
    actions.emplace_back(c, [&] { series_cauchy(em, s1, s2); });

    c = leaf(ser, "fib", "Fibonacci numbers 0..n by recurrence and by Binet rounding");
    c->add_option("n", i1)->required();
    actions.emplace_back(c, [&] { series_fib(em, i1); });

    c = leaf(ser, "limsup", "liminf and limsup of an eventually periodic sequence");
    c->add_option("--head", s1, "Comma-separated rationals before the cycle");
    c->add_option("--cycle", s2, "Comma-separated rationals repeated forever")->required();
    actions.emplace_back(c, [&] { series_limsup(em, s1, s2); });

    c = leaf(ser, "cesaro", "Mean of the first n terms of an eventually periodic sequence");
    c->add_option("n", i1)->required();
    c->add_option("--head", s1, "Comma-separated rationals before the cycle");
    c->add_option("--cycle", s2, "Comma-separated rationals repeated forever")->required();
    actions.emplace_back(c, [&] { series_cesaro(em, s1, s2, i1); });

    c = leaf(ser, "logistic", "Exact iterates of x -> r(1-x)x");
    c->add_option("r", s1)->required();
    c->add_option("x0", s2)->required();
    c->add_option("n", i1)->required()->check(CLI::Range(0, 24));
    actions.emplace_back(c, [&] { series_logistic(em, s1, s2, i1); });

    c = leaf(ser, "harmonic", "Harmonic number h_n");
    c->add_option("n", i1)->required();
    actions.emplace_back(c, [&] { series_harmonic(em, i1); });
  }

  for (auto* group : {logic, num, rad, root, ser}) group->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    // Point at the deepest subcommand the user reached.
    const CLI::App* deepest = &app;
    for (bool descended = true; descended;) {
      descended = false;
      for (const auto* sub : deepest->get_subcommands()) {
        deepest = sub;
        descended = true;
        break;
      }
    }
    err << deepest->help();
    return kExitUsage;
  }

  try {
    cfg.format = parse_format(format);
    if (!tol_text.empty()) {
      cfg.tolerance = parse_rational(tol_text);
      if (cfg.tolerance.sign() <= 0) throw DomainError("--tol must be positive");
    }
    for (auto& [sub, action] : actions) {
      if (sub->parsed()) {
        action();
        return kExitOk;
      }
    }
    err << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    report_parse_error(err, e);
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace exactlab::cli
