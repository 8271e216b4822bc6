#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "exactlab/logic.hpp"

namespace exactlab::logic {

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty() || std::isalpha(static_cast<unsigned char>(name.front())) == 0) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

bool reserved(std::string_view name) { return name == "T" || name == "F" || name == "xor" || name == "nand"; }

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Iff:
      return 1;
    case BinaryOp::Implies:
      return 2;
    case BinaryOp::Xor:
      return 3;
    case BinaryOp::Or:
      return 4;
    case BinaryOp::Nand:
      return 5;
    case BinaryOp::And:
      return 6;
  }
  return 0;
}

constexpr int kUnaryPrecedence = 7;
constexpr int kAtomPrecedence = 8;

int precedence(const Formula& f) {
  if (const auto* b = f.as<Binary>()) return precedence(b->op);
  if (f.as<Not>() != nullptr) return kUnaryPrecedence;
  return kAtomPrecedence;
}

void format_into(const Formula& f, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Const>) {
          out += n.value ? "T" : "F";
        } else if constexpr (std::is_same_v<T, Not>) {
          out += '!';
          const bool wrap = n.child.template as<Binary>() != nullptr;
          if (wrap) out += '(';
          format_into(n.child, out);
          if (wrap) out += ')';
        } else {
          const int p = precedence(n.op);
          const bool right_assoc = n.op == BinaryOp::Implies;
          const int lp = precedence(n.lhs);
          const int rp = precedence(n.rhs);
          const bool wrap_l = lp < p || (lp == p && right_assoc);
          const bool wrap_r = rp < p || (rp == p && !right_assoc);
          if (wrap_l) out += '(';
          format_into(n.lhs, out);
          if (wrap_l) out += ')';
          out += ' ';
          out += op_symbol(n.op);
          out += ' ';
          if (wrap_r) out += '(';
          format_into(n.rhs, out);
          if (wrap_r) out += ')';
        }
      },
      f.node().value);
}

void collect_variables(const Formula& f, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, Not>) {
          collect_variables(n.child, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_variables(n.lhs, out);
          collect_variables(n.rhs, out);
        }
      },
      f.node().value);
}

bool apply(BinaryOp op, bool a, bool b) {
  switch (op) {
    case BinaryOp::And:
      return a && b;
    case BinaryOp::Or:
      return a || b;
    case BinaryOp::Implies:
      return !a || b;
    case BinaryOp::Iff:
      return a == b;
    case BinaryOp::Xor:
      return a != b;
    case BinaryOp::Nand:
      return !(a && b);
  }
  return false;
}

std::vector<std::string> union_variables(const std::vector<Formula>& fs) {
  std::vector<std::string> vars;
  for (const auto& f : fs) collect_variables(f, vars);
  if (vars.size() > kMaxVariables)
    throw DomainError("truth table limited to " + std::to_string(kMaxVariables) + " variables");
  return vars;
}

// Row `row` of the canonical enumeration: first variable is the most
// significant bit, and a 0 bit means T.
Assignment row_assignment(const std::vector<std::string>& vars, std::uint64_t row) {
  Assignment a;
  const std::size_t n = vars.size();
  for (std::size_t j = 0; j < n; ++j) a[vars[j]] = ((row >> (n - 1 - j)) & 1U) == 0;
  return a;
}

}  // namespace

Formula Formula::var(std::string name) {
  if (!valid_identifier(name)) throw DomainError("invalid variable name '" + name + "'");
  if (reserved(name)) throw DomainError("'" + name + "' is reserved");
  return Formula(std::make_shared<const Node>(Node{Var{std::move(name)}}));
}

Formula Formula::constant(bool value) { return Formula(std::make_shared<const Node>(Node{Const{value}})); }

Formula Formula::negation(Formula child) {
  return Formula(std::make_shared<const Node>(Node{Not{std::move(child)}}));
}

Formula Formula::binary(BinaryOp op, Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Binary{op, std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

std::string_view op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::And:
      return "&";
    case BinaryOp::Or:
      return "|";
    case BinaryOp::Implies:
      return "->";
    case BinaryOp::Iff:
      return "<->";
    case BinaryOp::Xor:
      return "xor";
    case BinaryOp::Nand:
      return "nand";
  }
  return "?";
}

std::string format(const Formula& f) {
  std::string out;
  format_into(f, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  collect_variables(f, out);
  return out;
}

bool evaluate(const Formula& f, const Assignment& a) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          const auto it = a.find(n.name);
          if (it == a.end()) throw UnboundVariable(n.name);
          return it->second;
        } else if constexpr (std::is_same_v<T, Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Not>) {
          return !evaluate(n.child, a);
        } else {
          return apply(n.op, evaluate(n.lhs, a), evaluate(n.rhs, a));
        }
      },
      f.node().value);
}

TruthTable truth_table(const std::vector<Formula>& formulas) {
  if (formulas.empty()) throw DomainError("truth table needs at least one formula");
  TruthTable table;
  table.variables = union_variables(formulas);
  table.formulas = formulas;
  const std::uint64_t rows = std::uint64_t{1} << table.variables.size();
  table.rows.reserve(rows);
  for (std::uint64_t r = 0; r < rows; ++r) {
    const Assignment a = row_assignment(table.variables, r);
    TruthTable::Row row;
    for (const auto& v : table.variables) row.assignment.push_back(a.find(v)->second);
    for (const auto& f : formulas) row.values.push_back(evaluate(f, a));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const TruthTable& table) {
  std::ostringstream out;
  bool first = true;
  auto cell = [&](const std::string& text) {
    if (!first) out << ',';
    first = false;
    out << text;
  };
  for (const auto& v : table.variables) cell(v);
  for (const auto& f : table.formulas) cell(format(f));
  out << '\n';
  for (const auto& row : table.rows) {
    first = true;
    for (bool b : row.assignment) cell(b ? "T" : "F");
    for (bool b : row.values) cell(b ? "T" : "F");
    out << '\n';
  }
  return out.str();
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Tautology:
      return "Tautology";
    case Classification::Contradiction:
      return "Contradiction";
    case Classification::Contingent:
      return "Contingent";
  }
  return "?";
}

Classification classify(const Formula& f) {
  const auto vars = union_variables({f});
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  bool any_true = false;
  bool any_false = false;
  for (std::uint64_t r = 0; r < rows && !(any_true && any_false); ++r) {
    (evaluate(f, row_assignment(vars, r)) ? any_true : any_false) = true;
  }
  if (!any_false) return Classification::Tautology;
  if (!any_true) return Classification::Contradiction;
  return Classification::Contingent;
}

std::optional<Assignment> distinguishing_assignment(const Formula& f, const Formula& g) {
  const auto vars = union_variables({f, g});
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    Assignment a = row_assignment(vars, r);
    if (evaluate(f, a) != evaluate(g, a)) return a;
  }
  return std::nullopt;
}

bool equivalent(const Formula& f, const Formula& g) { return !distinguishing_assignment(f, g).has_value(); }

Formula implication_transform(const Formula& f, ImplicationForm kind) {
  const auto* b = f.as<Binary>();
  if (b == nullptr || b->op != BinaryOp::Implies) throw NotAnImplication();
  switch (kind) {
    case ImplicationForm::Converse:
      return implies(b->rhs, b->lhs);
    case ImplicationForm::Inverse:
      return implies(lnot(b->lhs), lnot(b->rhs));
    case ImplicationForm::Contrapositive:
      return implies(lnot(b->rhs), lnot(b->lhs));
  }
  throw NotAnImplication();
}

Assignment run_assignments(const std::vector<std::pair<std::string, Formula>>& program, Assignment state) {
  for (const auto& [target, expr] : program) {
    const bool value = evaluate(expr, state);
    state[target] = value;
  }
  return state;
}

QuantifierStatement make_statement(std::vector<QuantifiedVariable> prefix, Formula matrix) {
  std::set<std::string> names;
  for (const auto& q : prefix) {
    if (!valid_identifier(q.variable)) throw DomainError("invalid bound variable '" + q.variable + "'");
    if (!names.insert(q.variable).second) throw DomainError("bound variable '" + q.variable + "' repeated");
  }
  return {std::move(prefix), std::move(matrix)};
}

QuantifierStatement negate_quantified(const QuantifierStatement& s) {
  QuantifierStatement out{s.prefix, lnot(s.matrix)};
  for (auto& q : out.prefix) q.quantifier = q.quantifier == Quantifier::ForAll ? Quantifier::Exists : Quantifier::ForAll;
  return out;
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

QuantifiedVariable parse_binder(std::string_view seg, std::size_t offset) {
  seg = trim(seg, offset);
  QuantifiedVariable q{Quantifier::ForAll, "", ""};
  if (seg.starts_with("forall")) {
    seg.remove_prefix(6);
    offset += 6;
  } else if (seg.starts_with("exists")) {
    q.quantifier = Quantifier::Exists;
    seg.remove_prefix(6);
    offset += 6;
  } else {
    throw ParseError(offset, {"'forall'", "'exists'"}, "bad quantifier");
  }
  if (seg.empty() || std::isspace(static_cast<unsigned char>(seg.front())) == 0)
    throw ParseError(offset, {"whitespace"}, "quantifier must be followed by a variable");
  seg = trim(seg, offset);
  std::size_t len = 0;
  while (len < seg.size() && (std::isalnum(static_cast<unsigned char>(seg[len])) != 0 || seg[len] == '_')) ++len;
  if (len == 0 || std::isalpha(static_cast<unsigned char>(seg.front())) == 0)
    throw ParseError(offset, {"identifier"}, "missing bound variable");
  q.variable = std::string(seg.substr(0, len));
  std::size_t rest_offset = offset + len;
  q.domain = std::string(trim(seg.substr(len), rest_offset));
  return q;
}

}  // namespace

QuantifierStatement parse_statement(std::string_view text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string_view::npos) return make_statement({}, parse_formula(text));
  std::vector<QuantifiedVariable> prefix;
  std::size_t start = 0;
  const std::string_view head = text.substr(0, colon);
  while (true) {
    const std::size_t comma = head.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? head.size() : comma;
    prefix.push_back(parse_binder(head.substr(start, end - start), start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Formula matrix = [&] {
    try {
      return parse_formula(text.substr(colon + 1));
    } catch (const ParseError& e) {
      throw ParseError(colon + 1 + e.offset(), e.expected(), "in matrix");
    }
  }();
  return make_statement(std::move(prefix), std::move(matrix));
}

std::string format(const QuantifierStatement& s) {
  std::string out;
  for (std::size_t i = 0; i < s.prefix.size(); ++i) {
    const auto& q = s.prefix[i];
    if (i > 0) out += ", ";
    out += q.quantifier == Quantifier::ForAll ? "forall " : "exists ";
    out += q.variable;
    if (!q.domain.empty()) out += " " + q.domain;
  }
  if (!s.prefix.empty()) out += " : ";
  return out + format(s.matrix);
}

}  // namespace exactlab::logic
