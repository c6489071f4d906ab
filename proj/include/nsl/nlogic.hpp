#pragma once

// Neutrosophic values (T, I, F) and the connectives. Every connective acts
// componentwise, so the three-component logic is the cube of the
// single-component (set-valued) logic; component_eval exposes that factor.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nsl/formula.hpp"
#include "nsl/image.hpp"
#include "nsl/nset.hpp"

namespace nsl::nlogic {

using nsets::NSet;

enum class Semantics {
  Corrected,  ///< owedge / ovee / obslash
  Original,   ///< owedge / ovee' / obslash' on raw elementwise sets
  Clamped,    ///< Original, then every component clamped into the unit interval
};

std::string to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view text);

struct NValue {
  NSet truth;
  NSet indeterminacy;
  NSet falsity;

  [[nodiscard]] const NSet& component(int i) const;
  friend bool operator==(const NValue&, const NValue&) = default;
};

/// Every component is a subset of the unit interval.
bool within_unit(const NValue& v);

/// `(T, I, F)`
std::string to_string(const NValue& v);

/// Single-component connectives.
NSet and_set(const NSet& a, const NSet& b, Semantics sem);
NSet or_set(const NSet& a, const NSet& b, Semantics sem);
NSet implies_set(const NSet& a, const NSet& b, Semantics sem);
/// X -> { c - x : c in 1+, x in X }
NSet not_set(const NSet& a, Semantics sem);

NValue and_(const NValue& a, const NValue& b, Semantics sem);
NValue or_(const NValue& a, const NValue& b, Semantics sem);
NValue implies(const NValue& a, const NValue& b, Semantics sem);
NValue not_(const NValue& a, Semantics sem);

class UnboundAtom : public std::runtime_error {
public:
  explicit UnboundAtom(const std::string& name)
      : std::runtime_error("unbound atom '" + name + "'"), name_(name) {}
  [[nodiscard]] const std::string& name() const { return name_; }

private:
  std::string name_;
};

struct Environment {
  std::map<std::string, NValue> bindings;
  Semantics semantics = Semantics::Corrected;
};

/// Throws UnboundAtom.
NValue eval(const Formula& phi, const Environment& env, Semantics sem);
NValue eval(const Formula& phi, const Environment& env);

/// Evaluates one component's logic over atom -> set bindings.
NSet component_eval(const Formula& phi, const std::map<std::string, NSet>& env, Semantics sem);
/// Projection of an environment onto component i (0 = T, 1 = I, 2 = F).
std::map<std::string, NSet> project(const Environment& env, int component);

}  // namespace nsl::nlogic
