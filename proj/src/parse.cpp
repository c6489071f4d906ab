#include "nsl/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace nsl::cli {

using nlogic::Formula;
using nlogic::NValue;
using nsets::BoundKind;
using nsets::NSet;
using ordfield::Polynomial;
using ordfield::Rational;
using ordfield::RationalFunction;

namespace {

enum class Tok { Int, Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", start});
      i += 2;
    } else if (c == ':' && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({Tok::Sym, ":=", start});
      i += 2;
    } else if (std::string_view("+-*/^(){},:&|!").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), start});
      ++i;
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[i_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool is_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(t.pos, what + (t.kind == Tok::End ? " at end of input" : ", found '" + t.text + "'"));
  }

  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    ++i_;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  long parse_int() {
    bool negative = false;
    if (is_sym("-")) {
      negative = true;
      ++i_;
    }
    if (peek().kind != Tok::Int) fail("expected an integer");
    const std::size_t pos = peek().pos;
    long v = 0;
    try {
      v = std::stol(peek().text);
    } catch (const std::out_of_range&) {
      throw ParseError(pos, "integer out of range");
    }
    ++i_;
    return negative ? -v : v;
  }

  // Field elements.
  RationalFunction expr() {
    RationalFunction acc = term();
    while (is_sym("+") || is_sym("-")) {
      const bool plus = peek().text == "+";
      ++i_;
      RationalFunction rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (is_sym("*") || is_sym("/")) {
      const bool times = peek().text == "*";
      const std::size_t pos = peek().pos;
      ++i_;
      RationalFunction rhs = unary();
      if (times) {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) throw ParseError(pos, "division by zero");
        acc = acc / rhs;
      }
    }
    return acc;
  }

  RationalFunction unary() {
    if (is_sym("-")) {
      ++i_;
      return -unary();
    }
    if (is_sym("+")) {
      ++i_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!is_sym("^")) return base;
    const std::size_t pos = peek().pos;
    ++i_;
    const long n = parse_int();
    if (n < 0 && base.is_zero()) throw ParseError(pos, "division by zero");
    if (n > 4096 || n < -4096) throw ParseError(pos, "exponent too large");
    RationalFunction out(1);
    for (long k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
    return n < 0 ? out.inverse() : out;
  }

  RationalFunction primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      ++i_;
      return RationalFunction(Rational(mpq_class(mpz_class(t.text))));
    }
    if (t.kind == Tok::Ident && t.text == "X") {
      ++i_;
      return RationalFunction::x();
    }
    if (is_sym("(")) {
      ++i_;
      RationalFunction v = expr();
      expect_sym(")");
      return v;
    }
    fail("expected a number, X or '('");
  }

  // Sets.
  BoundKind kind() {
    if (peek().kind != Tok::Ident) fail("expected a bound kind");
    const std::string name = peek().text;
    ++i_;
    BoundKind k;
    if (name == "closed") return BoundKind::closed();
    if (name == "open") return BoundKind::open();
    if (name == "rough") {
      k = BoundKind::rough();
    } else if (name == "strict") {
      k = BoundKind::strict();
    } else {
      --i_;
      fail("expected closed, open, rough or strict");
    }
    if (is_sym("(")) {
      ++i_;
      k.order = static_cast<int>(parse_int());
      expect_sym(")");
    }
    return k;
  }

  NSet nterm() {
    const std::size_t pos = peek().pos;
    if (is_sym("{")) {
      ++i_;
      std::vector<RationalFunction> members;
      if (!is_sym("}")) {
        members.push_back(expr());
        while (is_sym(",")) {
          ++i_;
          members.push_back(expr());
        }
      }
      expect_sym("}");
      return nsets::finite_set(members);
    }
    if (is_ident("unit")) {
      ++i_;
      return nsets::unit_interval();
    }
    if (is_ident("iv")) {
      ++i_;
      expect_sym("(");
      const BoundKind lk = kind();
      expect_sym(":");
      const RationalFunction lo = expr();
      expect_sym(",");
      const RationalFunction hi = expr();
      expect_sym(":");
      const BoundKind hk = kind();
      expect_sym(")");
      auto iv = nsets::GenInterval::make(lo, lk, hi, hk);
      if (!iv) {
        throw ParseError(pos, "empty interval: lower bound " + nsets::to_string(lk) + ":" + lo.to_string() +
                                  " exceeds upper bound " + hi.to_string() + ":" + nsets::to_string(hk));
      }
      return nsets::normalize({*iv});
    }
    for (const char* named : {"mon", "left", "right"}) {
      if (!is_ident(named)) continue;
      ++i_;
      expect_sym("(");
      const RationalFunction a = expr();
      expect_sym(")");
      const std::string n = named;
      if (n == "mon") return nsets::monad(a);
      if (n == "left") return nsets::left_monad(a);
      return nsets::right_monad(a);
    }
    fail("expected a set ('{', iv, unit, mon, left or right)");
  }

  NSet nset() {
    NSet acc = nterm();
    while (is_ident("u")) {
      ++i_;
      acc = nsets::unite(acc, nterm());
    }
    return acc;
  }

  NValue nvalue() {
    expect_sym("(");
    NSet t = nset();
    expect_sym(",");
    NSet i = nset();
    expect_sym(",");
    NSet f = nset();
    expect_sym(")");
    return {std::move(t), std::move(i), std::move(f)};
  }

  // Formulas.
  Formula implication() {
    Formula lhs = disjunction();
    if (is_sym("->")) {
      ++i_;
      return Formula::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (is_ident("or") || is_sym("|")) {
      ++i_;
      acc = Formula::disjunction(std::move(acc), conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = negation();
    while (is_ident("and") || is_sym("&")) {
      ++i_;
      acc = Formula::conjunction(std::move(acc), negation());
    }
    return acc;
  }

  Formula negation() {
    if (is_ident("not") || is_sym("!")) {
      ++i_;
      return Formula::negation(negation());
    }
    if (is_sym("(")) {
      ++i_;
      Formula f = implication();
      expect_sym(")");
      return f;
    }
    if (peek().kind == Tok::Ident && peek().text != "and" && peek().text != "or") {
      std::string name = peek().text;
      ++i_;
      return Formula::atom(std::move(name));
    }
    fail("expected an atom, 'not' or '('");
  }

  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected a name");
    return toks_[i_++].text;
  }

private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

template <class F>
auto whole(std::string_view text, F f) {
  Parser p(text);
  auto v = f(p);
  p.expect_end();
  return v;
}

}  // namespace

RationalFunction parse_field_elem(std::string_view text) {
  return whole(text, [](Parser& p) { return p.expr(); });
}

NSet parse_nset(std::string_view text) {
  return whole(text, [](Parser& p) { return p.nset(); });
}

NValue parse_nvalue(std::string_view text) {
  return whole(text, [](Parser& p) { return p.nvalue(); });
}

Formula parse_formula(std::string_view text) {
  return whole(text, [](Parser& p) { return p.implication(); });
}

nlogic::Environment parse_environment(std::string_view text) {
  nlogic::Environment env;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto first = line.find_first_not_of(" \t");
      if (line[first] == '@') {
        std::istringstream in{std::string(line.substr(first + 1))};
        std::string key;
        std::string value;
        std::string extra;
        in >> key >> value;
        if (key != "semantics" || value.empty() || (in >> extra))
          throw ParseError(first, "expected '@semantics corrected|original|clamped'");
        auto sem = nlogic::parse_semantics(value);
        if (!sem) throw ParseError(first, "unknown semantics '" + value + "'");
        env.semantics = *sem;
        continue;
      }
      Parser p(line);
      std::string name = p.ident();
      p.expect_sym(":=");
      NValue v = p.nvalue();
      p.expect_end();
      if (!env.bindings.emplace(name, std::move(v)).second) throw ParseError(first, "duplicate binding '" + name + "'");
    } catch (const ParseError& e) {
      throw ParseError(e.position(), "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return env;
}

std::string to_string(const nlogic::Environment& env) {
  std::string out = "@semantics " + nlogic::to_string(env.semantics) + "\n";
  for (const auto& [name, v] : env.bindings) out += name + " := " + nlogic::to_string(v) + "\n";
  return out;
}

}  // namespace nsl::cli
