#include <doctest.h>

#include "nsl/image.hpp"
#include "nsl/nlogic.hpp"
#include "nsl/parse.hpp"
#include "nsl/random.hpp"

using namespace nsl::nlogic;
using nsl::cli::parse_formula;
using nsl::cli::parse_nset;
using nsl::cli::parse_nvalue;
using nsl::nsets::NSet;
using nsl::ordfield::Rational;
using nsl::ordfield::RationalFunction;

namespace {

Environment paradox_env() {
  Environment env;
  env.bindings.emplace("A", parse_nvalue("({1},{0},{0})"));
  env.bindings.emplace("B", parse_nvalue("({0},{0},{1})"));
  return env;
}

const std::vector<Semantics> kAll = {Semantics::Corrected, Semantics::Original, Semantics::Clamped};

}  // namespace

TEST_CASE("paradox values") {
  const Environment env = paradox_env();
  const NValue conj = eval(parse_formula("A and B"), env, Semantics::Corrected);
  CHECK(conj == parse_nvalue("({0},{0},{0})"));
  CHECK(conj.falsity == nsl::nsets::singleton(0));

  const NValue neg = eval(parse_formula("not A"), env, Semantics::Corrected);
  CHECK(neg.indeterminacy == nsl::nsets::right_monad(1));
  CHECK(neg.truth == nsl::nsets::right_monad(0));
  CHECK(to_string(neg) == "(right(0), right(1), right(1))");
}

TEST_CASE("connective examples") {
  const NValue a = parse_nvalue("({1},{0},{0})");
  CHECK(implies(a, a, Semantics::Corrected).truth == nsl::nsets::right_monad(1));

  const NValue t01 = parse_nvalue("({0, 1},{0},{0})");
  const NValue t1 = parse_nvalue("({1},{0},{0})");
  CHECK(or_(t01, t1, Semantics::Original).truth.contains(2));
  CHECK_FALSE(or_(t01, t1, Semantics::Corrected).truth.contains(2));
  CHECK_FALSE(or_(t01, t1, Semantics::Clamped).truth.contains(2));

  // Double negation stays inside the unit interval.
  const NValue nn = not_(not_(a, Semantics::Corrected), Semantics::Corrected);
  CHECK(within_unit(nn));
  CHECK(nsl::nsets::is_subset(nn.truth, nsl::nsets::unit_interval()));

  Environment half;
  half.bindings.emplace("A", parse_nvalue("({1/2},{0},{0})"));
  CHECK(component_eval(parse_formula("A and A"), project(half, 0), Semantics::Corrected) ==
        nsl::nsets::singleton(RationalFunction(Rational(1, 4))));
}

TEST_CASE("atoms evaluate to their bindings in every semantics") {
  const Environment env = paradox_env();
  for (auto sem : kAll) CHECK(eval(Formula::atom("A"), env, sem) == env.bindings.at("A"));
}

TEST_CASE("unbound atoms are reported by name") {
  try {
    (void)eval(parse_formula("A and Zed"), paradox_env(), Semantics::Corrected);
    FAIL("expected UnboundAtom");
  } catch (const UnboundAtom& e) {
    CHECK(e.name() == "Zed");
  }
}

TEST_CASE("semantics names") {
  for (auto sem : kAll) CHECK(parse_semantics(to_string(sem)) == sem);
  CHECK_FALSE(parse_semantics("fuzzy").has_value());
}

TEST_CASE("evaluation factors into three component logics") {
  const std::vector<std::string> atoms = {"A", "B", "C"};
  for (int i = 0; i < 150; ++i) {
    auto rng = nsl::gen::rng_for(606, static_cast<std::uint64_t>(i));
    const Formula phi = nsl::gen::formula(rng, 4, atoms);
    const Environment env = nsl::gen::environment(rng, atoms, 2);
    const Semantics sem = kAll[static_cast<std::size_t>(i) % kAll.size()];
    const NValue full = eval(phi, env, sem);
    for (int c = 0; c < 3; ++c) CHECK(component_eval(phi, project(env, c), sem) == full.component(c));
  }
}

TEST_CASE("corrected and clamped results stay in the unit interval") {
  const std::vector<std::string> atoms = {"P", "Q"};
  for (int i = 0; i < 150; ++i) {
    auto rng = nsl::gen::rng_for(77, static_cast<std::uint64_t>(i));
    const Formula phi = nsl::gen::formula(rng, 4, atoms);
    const Environment env = nsl::gen::environment(rng, atoms, 2);
    CHECK(within_unit(eval(phi, env, Semantics::Corrected)));
    const NValue clamped = eval(phi, env, Semantics::Clamped);
    CHECK(within_unit(clamped));
    for (int c = 0; c < 3; ++c)
      CHECK(nsl::nsets::clamp_to_unit(clamped.component(c)) == clamped.component(c));
  }
}

TEST_CASE("relabeling atoms does not change values") {
  const std::vector<std::string> atoms = {"A", "B"};
  for (int i = 0; i < 100; ++i) {
    auto rng = nsl::gen::rng_for(9, static_cast<std::uint64_t>(i));
    const Formula phi = nsl::gen::formula(rng, 4, atoms);
    const Environment env = nsl::gen::environment(rng, atoms, 2);

    // A -> Left, B -> Right
    std::function<Formula(const Formula&)> rename = [&](const Formula& f) -> Formula {
      switch (f.op()) {
        case Connective::Atom:
          return Formula::atom(f.name() == "A" ? "Left" : "Right");
        case Connective::Not:
          return Formula::negation(rename(f.operand()));
        default:
          return Formula::binary(f.op(), rename(f.lhs()), rename(f.rhs()));
      }
    };
    Environment renamed;
    renamed.bindings.emplace("Left", env.bindings.at("A"));
    renamed.bindings.emplace("Right", env.bindings.at("B"));
    for (auto sem : kAll) CHECK(eval(phi, env, sem) == eval(rename(phi), renamed, sem));
  }
}

TEST_CASE("original semantics only changes or and implies") {
  nsl::gen::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const NSet a = nsl::gen::nset(rng, true);
    const NSet b = nsl::gen::nset(rng, true);
    CHECK(and_set(a, b, Semantics::Original) == nsl::nsets::owedge(a, b));
    CHECK(or_set(a, b, Semantics::Original) == nsl::nsets::ovee_prime(a, b));
    CHECK(implies_set(a, b, Semantics::Original) == nsl::nsets::obslash_prime(a, b));
    CHECK(or_set(a, b, Semantics::Clamped) == nsl::nsets::clamp_to_unit(nsl::nsets::ovee_prime(a, b)));
  }
}
