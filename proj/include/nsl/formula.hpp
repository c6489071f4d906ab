#pragma once

#include <memory>
#include <set>
#include <string>

namespace nsl::nlogic {

enum class Connective { Atom, Not, And, Or, Implies };

/// Immutable propositional formula; subtrees are shared.
class Formula {
public:
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula binary(Connective op, Formula l, Formula r);

  [[nodiscard]] Connective op() const { return node_->op; }
  [[nodiscard]] const std::string& name() const { return node_->name; }
  [[nodiscard]] const Formula& lhs() const { return *node_->lhs; }
  [[nodiscard]] const Formula& rhs() const { return *node_->rhs; }
  /// Operand of a negation.
  [[nodiscard]] const Formula& operand() const { return *node_->lhs; }

  [[nodiscard]] int depth() const;
  [[nodiscard]] std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Connective op;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical text with minimal parentheses: `not A and B -> C`.
std::string to_string(const Formula& f);

}  // namespace nsl::nlogic
