#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "exactlab/errors.hpp"

namespace exactlab::logic {

enum class BinaryOp { And, Or, Implies, Iff, Xor, Nand };

struct Node;

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  /// Throws DomainError for names outside [A-Za-z][A-Za-z0-9_]* or reserved words.
  static Formula var(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula child);
  static Formula binary(BinaryOp op, Formula lhs, Formula rhs);

  const Node& node() const { return *node_; }

  template <typename T>
  const T* as() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

struct Const {
  bool value;
  friend bool operator==(const Const&, const Const&) = default;
};

struct Not {
  Formula child;
  friend bool operator==(const Not&, const Not&) = default;
};

struct Binary {
  BinaryOp op;
  Formula lhs;
  Formula rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Node {
  std::variant<Var, Const, Not, Binary> value;
};

template <typename T>
const T* Formula::as() const {
  return std::get_if<T>(&node_->value);
}

inline Formula var(std::string name) { return Formula::var(std::move(name)); }
inline Formula lnot(Formula f) { return Formula::negation(std::move(f)); }
inline Formula land(Formula a, Formula b) { return Formula::binary(BinaryOp::And, std::move(a), std::move(b)); }
inline Formula lor(Formula a, Formula b) { return Formula::binary(BinaryOp::Or, std::move(a), std::move(b)); }
inline Formula implies(Formula a, Formula b) { return Formula::binary(BinaryOp::Implies, std::move(a), std::move(b)); }
inline Formula iff(Formula a, Formula b) { return Formula::binary(BinaryOp::Iff, std::move(a), std::move(b)); }
inline Formula lxor(Formula a, Formula b) { return Formula::binary(BinaryOp::Xor, std::move(a), std::move(b)); }
inline Formula nand(Formula a, Formula b) { return Formula::binary(BinaryOp::Nand, std::move(a), std::move(b)); }

/// Grammar, loosest binding first:
///
///   iff     := implies ("<->" implies)*
///   implies := xor ("->" implies)?          right-associative
///   xor     := or ("xor" or)*
///   or      := nand ("|" nand)*
///   nand    := and ("nand" and)*
///   and     := unary ("&" unary)*
///   unary   := ("!" | "~") unary | atom
///   atom    := "T" | "F" | identifier | "(" iff ")"
///
/// Placing xor and nand between the classical connectives is a convention of
/// this library.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string format(const Formula& f);

std::string_view op_symbol(BinaryOp op);

/// Variables in order of first occurrence, left to right.
std::vector<std::string> variables(const Formula& f);

using Assignment = std::map<std::string, bool, std::less<>>;

class UnboundVariable : public DomainError {
 public:
  explicit UnboundVariable(std::string name)
      : DomainError("unbound variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

bool evaluate(const Formula& f, const Assignment& a);

struct TruthTable {
  struct Row {
    std::vector<bool> assignment;  // parallel to `variables`
    std::vector<bool> values;      // parallel to `formulas`
  };

  std::vector<std::string> variables;
  std::vector<Formula> formulas;
  std::vector<Row> rows;
};

/// Enumeration is capped at this many variables.
inline constexpr std::size_t kMaxVariables = 20;

/// One column per formula over the union of their variables. Rows run with
/// the first variable as most significant bit and T before F.
TruthTable truth_table(const std::vector<Formula>& formulas);

std::string to_csv(const TruthTable& table);

enum class Classification { Tautology, Contradiction, Contingent };

std::string_view to_string(Classification c);

Classification classify(const Formula& f);

bool equivalent(const Formula& f, const Formula& g);

/// First assignment (in truth-table order) where f and g differ.
std::optional<Assignment> distinguishing_assignment(const Formula& f, const Formula& g);

enum class ImplicationForm { Converse, Inverse, Contrapositive };

class NotAnImplication : public DomainError {
 public:
  NotAnImplication() : DomainError("formula is not an implication") {}
};

Formula implication_transform(const Formula& f, ImplicationForm kind);

/// Runs `target := expression` steps in order, each evaluated against the
/// current state.
Assignment run_assignments(const std::vector<std::pair<std::string, Formula>>& program, Assignment state);

enum class Quantifier { ForAll, Exists };

struct QuantifiedVariable {
  Quantifier quantifier;
  std::string variable;
  std::string domain;  // opaque

  friend bool operator==(const QuantifiedVariable&, const QuantifiedVariable&) = default;
};

struct QuantifierStatement {
  std::vector<QuantifiedVariable> prefix;
  Formula matrix;
};

/// Validates that bound-variable names are distinct.
QuantifierStatement make_statement(std::vector<QuantifiedVariable> prefix, Formula matrix);

/// Flips every quantifier and negates the matrix.
QuantifierStatement negate_quantified(const QuantifierStatement& s);

/// Text form `forall eps > 0, exists N in N, forall n >= N : formula`.
/// Each prefix entry is a quantifier keyword, a variable, then optional domain text.
QuantifierStatement parse_statement(std::string_view text);
std::string format(const QuantifierStatement& s);

}  // namespace exactlab::logic
