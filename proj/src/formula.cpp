#include "argbelief/formula.hpp"

#include <algorithm>
#include <cctype>

#include "argbelief/domain.hpp"

namespace argbelief {

Formula atom(std::string name) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::atom, std::move(name), nullptr, nullptr, 0}));
}

Formula top() {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::top, {}, nullptr, nullptr, 0}));
}

Formula negation(Formula operand) {
  const auto depth = operand.depth();
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{
      Formula::Kind::negation, {}, std::make_shared<const Formula>(std::move(operand)), nullptr, depth}));
}

Formula conjunction(Formula lhs, Formula rhs) {
  const auto depth = std::max(lhs.depth(), rhs.depth());
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::conjunction, {}, std::make_shared<const Formula>(std::move(lhs)),
                    std::make_shared<const Formula>(std::move(rhs)), depth}));
}

Formula belief(Formula operand) {
  const auto depth = operand.depth() + 1;
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{
      Formula::Kind::belief, {}, std::make_shared<const Formula>(std::move(operand)), nullptr, depth}));
}

Formula bottom() { return negation(top()); }

Formula disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula equivalence(Formula lhs, Formula rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::atom: return a.name() == b.name();
    case Formula::Kind::top: return true;
    case Formula::Kind::negation:
    case Formula::Kind::belief: return a.left() == b.left();
    case Formula::Kind::conjunction: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void print(const Formula& f, bool unary_context, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::atom: out += f.name(); return;
    case Formula::Kind::top: out += "true"; return;
    case Formula::Kind::negation:
      out += '~';
      print(f.left(), true, out);
      return;
    case Formula::Kind::belief:
      out += f.left().kind() == Formula::Kind::conjunction ? "B" : "B ";
      print(f.left(), true, out);
      return;
    case Formula::Kind::conjunction:
      if (unary_context) out += '(';
      print(f.left(), false, out);
      out += " & ";
      // The parser associates '&' to the left, so a right-nested conjunction
      // keeps its parentheses.
      print(f.right(), true, out);
      if (unary_context) out += ')';
      return;
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom: out.insert(f.name()); return;
    case Formula::Kind::top: return;
    case Formula::Kind::negation:
    case Formula::Kind::belief: collect_atoms(f.left(), out); return;
    case Formula::Kind::conjunction:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

}  // namespace

std::string to_string(const Formula& formula) {
  std::string out;
  print(formula, false, out);
  return out;
}

std::set<std::string> atoms_of(const Formula& formula) {
  std::set<std::string> out;
  collect_atoms(formula, out);
  return out;
}

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, std::string found)
    : Error(ErrorKind::syntax_error, "at position " + std::to_string(position) + ": expected " +
                                         describe_expected(expected) + " but found " + found),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { neg, bel, conj, disj, imp, iff, lparen, rparen, truth, falsity, ident, end };

struct Token {
  Tok kind;
  std::size_t position;
  std::string text;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    Formula f = parse_iff();
    if (current_.kind != Tok::end) fail({"'&'", "'|'", "'->'", "'<->'", "end of input"});
    return f;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, start, "end of input"};
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      current_ = {kind, start, std::string("'") + c + "'"};
    };
    switch (c) {
      case '~':
      case '!': single(Tok::neg); return;
      case 'B': single(Tok::bel); return;
      case '&': single(Tok::conj); return;
      case '|': single(Tok::disj); return;
      case '(': single(Tok::lparen); return;
      case ')': single(Tok::rparen); return;
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      current_ = {Tok::imp, start, "'->'"};
      return;
    }
    if (text_.substr(pos_, 3) == "<->") {
      pos_ += 3;
      current_ = {Tok::iff, start, "'<->'"};
      return;
    }
    if (c >= 'a' && c <= 'z') {
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (!((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_')) break;
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      const Tok kind = word == "true" ? Tok::truth : word == "false" ? Tok::falsity : Tok::ident;
      current_ = {kind, start, std::move(word)};
      return;
    }
    throw SyntaxError(start, {"formula"}, std::string("'") + c + "'");
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found =
        current_.kind == Tok::end || current_.kind == Tok::ident || current_.kind == Tok::truth ||
                current_.kind == Tok::falsity
            ? (current_.kind == Tok::end ? current_.text : "'" + current_.text + "'")
            : current_.text;
    throw SyntaxError(current_.position, std::move(expected), found);
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    while (current_.kind == Tok::iff) {
      advance();
      lhs = equivalence(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (current_.kind == Tok::imp) {
      advance();
      return implication(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (current_.kind == Tok::disj) {
      advance();
      lhs = disjunction(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (current_.kind == Tok::conj) {
      advance();
      lhs = conjunction(lhs, parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (current_.kind) {
      case Tok::neg:
        advance();
        return negation(parse_unary());
      case Tok::bel:
        advance();
        return belief(parse_unary());
      case Tok::lparen: {
        advance();
        Formula inner = parse_iff();
        if (current_.kind != Tok::rparen) fail({"')'", "'&'", "'|'", "'->'", "'<->'"});
        advance();
        return inner;
      }
      case Tok::truth: advance(); return top();
      case Tok::falsity: advance(); return bottom();
      case Tok::ident: {
        std::string name = current_.text;
        advance();
        return atom(std::move(name));
      }
      default: fail({"atom", "'true'", "'false'", "'~'", "'!'", "'B'", "'('"});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::end, 0, {}};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace argbelief
