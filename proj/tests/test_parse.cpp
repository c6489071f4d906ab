#include <doctest.h>

#include "nsl/parse.hpp"
#include "nsl/random.hpp"

using namespace nsl::cli;
using nsl::nlogic::Connective;
using nsl::nlogic::Formula;
using nsl::ordfield::Rational;
using nsl::ordfield::RationalFunction;

namespace {

Formula A() { return Formula::atom("A"); }
Formula B() { return Formula::atom("B"); }
Formula C() { return Formula::atom("C"); }

std::size_t error_position(std::string_view text, auto parser) {
  try {
    (void)parser(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for ", std::string(text));
  return 0;
}

}  // namespace

TEST_CASE("formula precedence and associativity") {
  CHECK(parse_formula("A and B") == Formula::conjunction(A(), B()));
  CHECK(parse_formula("not A and B -> C") ==
        Formula::implication(Formula::conjunction(Formula::negation(A()), B()), C()));
  CHECK(parse_formula("A -> B -> C") == Formula::implication(A(), Formula::implication(B(), C())));
  CHECK(parse_formula("A or B and C") == Formula::disjunction(A(), Formula::conjunction(B(), C())));
  CHECK(parse_formula("A and B and C") == Formula::conjunction(Formula::conjunction(A(), B()), C()));
  CHECK(parse_formula("!A & B | C") == parse_formula("not A and B or C"));
  CHECK(parse_formula("(A -> B) -> C") == Formula::implication(Formula::implication(A(), B()), C()));
  CHECK(parse_formula("not not A") == Formula::negation(Formula::negation(A())));
  CHECK(parse_formula("x_1 and Y2").atoms() == std::set<std::string>{"Y2", "x_1"});
}

TEST_CASE("formula printing uses minimal parentheses") {
  CHECK(to_string(parse_formula("((A) and (B))")) == "A and B");
  CHECK(to_string(parse_formula("(A -> B) -> C")) == "(A -> B) -> C");
  CHECK(to_string(parse_formula("A -> (B -> C)")) == "A -> B -> C");
  CHECK(to_string(parse_formula("not (A and B)")) == "not (A and B)");
  CHECK(to_string(parse_formula("A and (B and C)")) == "A and (B and C)");
}

TEST_CASE("formula round trip on random formulas") {
  const std::vector<std::string> atoms = {"A", "B", "Cx", "d_1"};
  for (int i = 0; i < 500; ++i) {
    auto rng = nsl::gen::rng_for(1, static_cast<std::uint64_t>(i));
    const Formula phi = nsl::gen::formula(rng, 6, atoms);
    const std::string text = to_string(phi);
    CHECK(parse_formula(text) == phi);
    CHECK(to_string(parse_formula(text)) == text);
  }
}

TEST_CASE("field element literals") {
  CHECK(parse_field_elem("3") == RationalFunction(3));
  CHECK(parse_field_elem("1/2") == RationalFunction(Rational(1, 2)));
  CHECK(parse_field_elem("(X - 1)/X") == RationalFunction(1) - RationalFunction::inv_x_pow(1));
  CHECK(parse_field_elem("2*X^2 - 1/X^3") ==
        RationalFunction(2) * RationalFunction::x() * RationalFunction::x() - RationalFunction::inv_x_pow(3));
  CHECK(parse_field_elem("X^-2") == RationalFunction::inv_x_pow(2));
  CHECK(parse_field_elem("-(1/2)") == RationalFunction(Rational(-1, 2)));
}

TEST_CASE("field element round trip") {
  for (int i = 0; i < 300; ++i) {
    auto rng = nsl::gen::rng_for(2, static_cast<std::uint64_t>(i));
    RationalFunction r = nsl::gen::bound_value(rng);
    if (i % 3 == 0) r = r / (RationalFunction::x() + nsl::gen::bound_value(rng));
    CHECK(parse_field_elem(r.to_string()) == r);
  }
}

TEST_CASE("set literals") {
  CHECK(parse_nset("right(1)") == nsl::nsets::right_monad(1));
  CHECK(parse_nset("iv(rough:0, 1:rough)") == nsl::nsets::unit_interval());
  CHECK(nsl::nsets::to_string(parse_nset("iv(rough:0, 1:rough)")) == "unit");
  CHECK(parse_nset("{1, 0, 1}") == nsl::nsets::finite_set({0, 1}));
  CHECK(parse_nset("{}").empty());
  CHECK(parse_nset("mon(1/2) u {0}") == nsl::nsets::unite(nsl::nsets::monad(RationalFunction(Rational(1, 2))),
                                                           nsl::nsets::singleton(0)));
  CHECK(nsl::nsets::to_string(parse_nset("iv(strict(2):0, 1:closed)")) == "iv(strict(2):0, 1:closed)");
}

TEST_CASE("set round trip on random sets") {
  for (int i = 0; i < 300; ++i) {
    auto rng = nsl::gen::rng_for(3, static_cast<std::uint64_t>(i));
    const auto s = nsl::gen::nset(rng, i % 2 == 0);
    const std::string text = nsl::nsets::to_string(s);
    CHECK(parse_nset(text) == s);
    CHECK(nsl::nsets::to_string(parse_nset(text)) == text);
  }
}

TEST_CASE("value literals") {
  const auto v = parse_nvalue("({1},{0},{0})");
  CHECK(v.truth == nsl::nsets::singleton(1));
  CHECK(v.indeterminacy == nsl::nsets::singleton(0));
  CHECK(nsl::nlogic::to_string(v) == "({1}, {0}, {0})");
  for (int i = 0; i < 200; ++i) {
    auto rng = nsl::gen::rng_for(4, static_cast<std::uint64_t>(i));
    const auto w = nsl::gen::nvalue(rng);
    CHECK(parse_nvalue(nsl::nlogic::to_string(w)) == w);
  }
}

TEST_CASE("errors carry positions") {
  CHECK(error_position("A and", parse_formula) == 5);
  CHECK(error_position("A # B", parse_formula) == 2);
  CHECK(error_position("(A or B", parse_formula) == 7);
  CHECK(error_position("1/0", parse_field_elem) == 1);
  CHECK(error_position("{0, 1", parse_nset) == 5);
  CHECK(error_position("iv(fuzzy:0, 1:closed)", parse_nset) == 3);

  try {
    (void)parse_nset("iv(closed:1, 0:closed)");
    FAIL("expected an empty-interval error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("empty") != std::string::npos);
    CHECK(what.find("1") != std::string::npos);
  }
}

TEST_CASE("environment files") {
  const auto env = parse_environment(
      "# paradox\n"
      "@semantics original\n"
      "A := ({1}, {0}, {0})\n"
      "\n"
      "B := ({0}, {0}, {1})   # false\n");
  CHECK(env.semantics == nsl::nlogic::Semantics::Original);
  CHECK(env.bindings.size() == 2);
  CHECK(env.bindings.at("B").falsity == nsl::nsets::singleton(1));
  CHECK(parse_environment(to_string(env)).bindings == env.bindings);

  try {
    (void)parse_environment("A := ({1}, {0}, {0})\nB = ({0}, {0}, {1})\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
