#include "nsl/formula.hpp"

#include <algorithm>

namespace nsl::nlogic {

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Connective::Not, {}, std::make_shared<const Formula>(std::move(f)), nullptr}));
}

Formula Formula::binary(Connective op, Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{op, {}, std::make_shared<const Formula>(std::move(l)),
                                                   std::make_shared<const Formula>(std::move(r))}));
}

Formula Formula::conjunction(Formula l, Formula r) { return binary(Connective::And, std::move(l), std::move(r)); }
Formula Formula::disjunction(Formula l, Formula r) { return binary(Connective::Or, std::move(l), std::move(r)); }
Formula Formula::implication(Formula l, Formula r) { return binary(Connective::Implies, std::move(l), std::move(r)); }

int Formula::depth() const {
  switch (op()) {
    case Connective::Atom:
      return 0;
    case Connective::Not:
      return 1 + operand().depth();
    default:
      return 1 + std::max(lhs().depth(), rhs().depth());
  }
}

std::set<std::string> Formula::atoms() const {
  if (op() == Connective::Atom) return {name()};
  std::set<std::string> out = lhs().atoms();
  if (op() != Connective::Not) out.merge(rhs().atoms());
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Connective::Atom:
      return a.name() == b.name();
    case Connective::Not:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

// Binding strength: -> (1) < or (2) < and (3) < not (4) < atom (5).
int precedence(Connective c) {
  switch (c) {
    case Connective::Implies:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    case Connective::Not:
      return 4;
    case Connective::Atom:
      return 5;
  }
  return 0;
}

const char* keyword(Connective c) {
  switch (c) {
    case Connective::And:
      return " and ";
    case Connective::Or:
      return " or ";
    default:
      return " -> ";
  }
}

std::string print(const Formula& f, int min_prec) {
  std::string s;
  const int p = precedence(f.op());
  switch (f.op()) {
    case Connective::Atom:
      return f.name();
    case Connective::Not:
      s = "not " + print(f.operand(), p);
      break;
    case Connective::Implies:
      // right-associative
      s = print(f.lhs(), p + 1) + keyword(f.op()) + print(f.rhs(), p);
      break;
    default:
      // and/or are left-associative
      s = print(f.lhs(), p) + keyword(f.op()) + print(f.rhs(), p + 1);
      break;
  }
  return p < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const Formula& f) { return print(f, 0); }

}  // namespace nsl::nlogic
