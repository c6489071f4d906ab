#include "nsl/nlogic.hpp"

namespace nsl::nlogic {

using nsets::clamp_to_unit;

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::Corrected:
      return "corrected";
    case Semantics::Original:
      return "original";
    case Semantics::Clamped:
      return "clamped";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "corrected") return Semantics::Corrected;
  if (text == "original") return Semantics::Original;
  if (text == "clamped") return Semantics::Clamped;
  return std::nullopt;
}

const NSet& NValue::component(int i) const {
  switch (i) {
    case 0:
      return truth;
    case 1:
      return indeterminacy;
    case 2:
      return falsity;
    default:
      throw std::out_of_range("component index " + std::to_string(i));
  }
}

bool within_unit(const NValue& v) {
  const NSet unit = nsets::unit_interval();
  return nsets::is_subset(v.truth, unit) && nsets::is_subset(v.indeterminacy, unit) &&
         nsets::is_subset(v.falsity, unit);
}

std::string to_string(const NValue& v) {
  return "(" + nsets::to_string(v.truth) + ", " + nsets::to_string(v.indeterminacy) + ", " +
         nsets::to_string(v.falsity) + ")";
}

namespace {

NSet finish(NSet s, Semantics sem) { return sem == Semantics::Clamped ? clamp_to_unit(s) : s; }

template <class Op>
NValue componentwise(const NValue& a, const NValue& b, Op op) {
  return {op(a.truth, b.truth), op(a.indeterminacy, b.indeterminacy), op(a.falsity, b.falsity)};
}

}  // namespace

NSet and_set(const NSet& a, const NSet& b, Semantics sem) { return finish(nsets::owedge(a, b), sem); }

NSet or_set(const NSet& a, const NSet& b, Semantics sem) {
  if (sem == Semantics::Corrected) return nsets::ovee(a, b);
  return finish(nsets::ovee_prime(a, b), sem);
}

NSet implies_set(const NSet& a, const NSet& b, Semantics sem) {
  if (sem == Semantics::Corrected) return nsets::obslash(a, b);
  return finish(nsets::obslash_prime(a, b), sem);
}

NSet not_set(const NSet& a, Semantics sem) {
  return finish(nsets::elem_sub(nsets::right_monad(1), a), sem);
}

NValue and_(const NValue& a, const NValue& b, Semantics sem) {
  return componentwise(a, b, [sem](const NSet& x, const NSet& y) { return and_set(x, y, sem); });
}

NValue or_(const NValue& a, const NValue& b, Semantics sem) {
  return componentwise(a, b, [sem](const NSet& x, const NSet& y) { return or_set(x, y, sem); });
}

NValue implies(const NValue& a, const NValue& b, Semantics sem) {
  return componentwise(a, b, [sem](const NSet& x, const NSet& y) { return implies_set(x, y, sem); });
}

NValue not_(const NValue& a, Semantics sem) {
  return {not_set(a.truth, sem), not_set(a.indeterminacy, sem), not_set(a.falsity, sem)};
}

NValue eval(const Formula& phi, const Environment& env, Semantics sem) {
  switch (phi.op()) {
    case Connective::Atom: {
      auto it = env.bindings.find(phi.name());
      if (it == env.bindings.end()) throw UnboundAtom(phi.name());
      return it->second;
    }
    case Connective::Not:
      return not_(eval(phi.operand(), env, sem), sem);
    case Connective::And:
      return and_(eval(phi.lhs(), env, sem), eval(phi.rhs(), env, sem), sem);
    case Connective::Or:
      return or_(eval(phi.lhs(), env, sem), eval(phi.rhs(), env, sem), sem);
    case Connective::Implies:
      return implies(eval(phi.lhs(), env, sem), eval(phi.rhs(), env, sem), sem);
  }
  throw std::logic_error("unknown connective");
}

NValue eval(const Formula& phi, const Environment& env) { return eval(phi, env, env.semantics); }

NSet component_eval(const Formula& phi, const std::map<std::string, NSet>& env, Semantics sem) {
  switch (phi.op()) {
    case Connective::Atom: {
      auto it = env.find(phi.name());
      if (it == env.end()) throw UnboundAtom(phi.name());
      return it->second;
    }
    case Connective::Not:
      return not_set(component_eval(phi.operand(), env, sem), sem);
    case Connective::And:
      return and_set(component_eval(phi.lhs(), env, sem), component_eval(phi.rhs(), env, sem), sem);
    case Connective::Or:
      return or_set(component_eval(phi.lhs(), env, sem), component_eval(phi.rhs(), env, sem), sem);
    case Connective::Implies:
      return implies_set(component_eval(phi.lhs(), env, sem), component_eval(phi.rhs(), env, sem), sem);
  }
  throw std::logic_error("unknown connective");
}

std::map<std::string, NSet> project(const Environment& env, int component) {
  std::map<std::string, NSet> out;
  for (const auto& [name, v] : env.bindings) out.emplace(name, v.component(component));
  return out;
}

}  // namespace nsl::nlogic
