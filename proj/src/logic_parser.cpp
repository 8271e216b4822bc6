#include <cctype>

#include "exactlab/logic.hpp"

namespace exactlab::logic {

namespace {

enum class Tok { Not, And, Or, Arrow, DoubleArrow, Xor, Nand, LParen, RParen, True, False, Ident, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (cur_.kind != Tok::End) fail({"'<->'", "'->'", "'xor'", "'|'", "'nand'", "'&'", "end of input"});
    return f;
  }

 private:
  static inline const std::vector<std::string> kAtomStart = {"'!'", "'~'", "'('", "'T'", "'F'", "identifier"};

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(cur_.offset, std::move(expected), "unexpected " + found);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, start, ""};
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      cur_ = {kind, start, std::string(1, c)};
    };
    switch (c) {
      case '!':
      case '~':
        return single(Tok::Not);
      case '&':
        return single(Tok::And);
      case '|':
        return single(Tok::Or);
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      default:
        break;
    }
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      cur_ = {Tok::Arrow, start, "->"};
      return;
    }
    if (text_.substr(pos_, 3) == "<->") {
      pos_ += 3;
      cur_ = {Tok::DoubleArrow, start, "<->"};
      return;
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      Tok kind = Tok::Ident;
      if (word == "T") kind = Tok::True;
      else if (word == "F") kind = Tok::False;
      else if (word == "xor") kind = Tok::Xor;
      else if (word == "nand") kind = Tok::Nand;
      cur_ = {kind, start, std::move(word)};
      return;
    }
    throw ParseError(start, {"'!'", "'&'", "'|'", "'->'", "'<->'", "'('", "')'", "identifier"},
                     std::string("invalid character '") + c + "'");
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (cur_.kind == Tok::DoubleArrow) {
      advance();
      lhs = iff(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_xor();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_xor() {
    Formula lhs = parse_or();
    while (cur_.kind == Tok::Xor) {
      advance();
      lhs = lxor(std::move(lhs), parse_or());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_nand();
    while (cur_.kind == Tok::Or) {
      advance();
      lhs = lor(std::move(lhs), parse_nand());
    }
    return lhs;
  }

  Formula parse_nand() {
    Formula lhs = parse_and();
    while (cur_.kind == Tok::Nand) {
      advance();
      lhs = nand(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (cur_.kind == Tok::And) {
      advance();
      lhs = land(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (cur_.kind == Tok::Not) {
      advance();
      return lnot(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (cur_.kind) {
      case Tok::True:
        advance();
        return Formula::constant(true);
      case Tok::False:
        advance();
        return Formula::constant(false);
      case Tok::Ident: {
        Formula f = var(cur_.text);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula inner = parse_iff();
        if (cur_.kind != Tok::RParen) fail({"')'", "'<->'", "'->'", "'xor'", "'|'", "'nand'", "'&'"});
        advance();
        return inner;
      }
      default:
        fail(kAtomStart);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, ""};
};

}  // namespace

Formula parse_formula(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw ParseError(0, {"formula"}, "empty input");
  return Parser(text).parse_all();
}

}  // namespace exactlab::logic
