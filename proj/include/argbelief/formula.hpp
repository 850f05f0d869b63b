#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "argbelief/error.hpp"

namespace argbelief {

/// Formulas of the belief language: atoms, truth, negation, conjunction and
/// the belief modality. Disjunction, implication, equivalence and falsity are
/// built from these by the helper constructors below.
class Formula {
 public:
  enum class Kind { atom, top, negation, conjunction, belief };

  Kind kind() const noexcept { return node_->kind; }
  /// Atom name; empty for other kinds.
  const std::string& name() const noexcept { return node_->name; }
  /// Operand of negation/belief; left operand of conjunction.
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  std::size_t depth() const noexcept { return node_->depth; }

  friend bool operator==(const Formula& a, const Formula& b);

  friend Formula atom(std::string name);
  friend Formula top();
  friend Formula negation(Formula operand);
  friend Formula conjunction(Formula lhs, Formula rhs);
  friend Formula belief(Formula operand);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t depth = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Formula atom(std::string name);
Formula top();
Formula negation(Formula operand);
Formula conjunction(Formula lhs, Formula rhs);
Formula belief(Formula operand);

Formula bottom();
Formula disjunction(Formula lhs, Formula rhs);
Formula implication(Formula lhs, Formula rhs);
Formula equivalence(Formula lhs, Formula rhs);

/// Concrete syntax with minimal parentheses; `parse_formula` reads it back
/// to an identical tree.
std::string to_string(const Formula& formula);

std::set<std::string> atoms_of(const Formula& formula);

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, std::string found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Grammar, loosest binding first:
///   iff   := imp ('<->' imp)*            (left associative)
///   imp   := or ('->' imp)?              (right associative)
///   or    := and ('|' and)*
///   and   := unary ('&' unary)*
///   unary := ('~' | '!' | 'B') unary | '(' iff ')' | 'true' | 'false' | atom
/// Atoms match [a-z][a-z0-9_]*.
Formula parse_formula(std::string_view text);

}  // namespace argbelief
