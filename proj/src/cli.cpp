#include "nsl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "nsl/image.hpp"
#include "nsl/parse.hpp"
#include "nsl/random.hpp"
#include "nsl/refute.hpp"

namespace nsl::cli {

using nlogic::NValue;
using nlogic::Semantics;
using nsets::NSet;
using ordfield::RationalFunction;

int cmd_eval(const std::string& env_path, const std::string& formula, std::optional<Semantics> semantics,
             std::ostream& out, std::ostream& err) {
  std::ifstream in(env_path);
  if (!in) {
    err << "error: cannot read environment file '" << env_path << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const nlogic::Environment env = parse_environment(buf.str());
    const nlogic::Formula phi = parse_formula(formula);
    const Semantics sem = semantics.value_or(env.semantics);
    out << nlogic::to_string(nlogic::eval(phi, env, sem)) << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlogic::UnboundAtom& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

namespace {

struct OperatorCase {
  const char* name;
  std::function<NSet(const NSet&, const NSet&)> apply;
};

std::vector<OperatorCase> operators_for(Semantics sem) {
  return {
      {"and", [sem](const NSet& a, const NSet& b) { return nlogic::and_set(a, b, sem); }},
      {"or", [sem](const NSet& a, const NSet& b) { return nlogic::or_set(a, b, sem); }},
      {"implies", [sem](const NSet& a, const NSet& b) { return nlogic::implies_set(a, b, sem); }},
  };
}

const char* operator_symbol(Semantics sem, const std::string& op) {
  if (op == "and") return "owedge";
  if (sem == Semantics::Corrected) return op == "or" ? "ovee" : "obslash";
  if (sem == Semantics::Original) return op == "or" ? "ovee'" : "obslash'";
  return op == "or" ? "clamp(ovee')" : "clamp(obslash')";
}

struct Violation {
  long iteration;
  std::string op;
  NSet a;
  NSet b;
  NSet result;
  std::optional<RationalFunction> member;
};

struct IterationReport {
  int violations = 0;
  std::optional<Violation> first;
};

IterationReport check_iteration(long i, std::uint64_t seed, Semantics sem) {
  static const NSet unit = nsets::unit_interval();
  gen::Rng rng = gen::rng_for(seed, static_cast<std::uint64_t>(i));
  const NSet a = gen::nset(rng, true);
  const NSet b = gen::nset(rng, true);
  IterationReport rep;
  for (const auto& op : operators_for(sem)) {
    const NSet r = op.apply(a, b);
    std::optional<RationalFunction> escaped;
    for (const auto& p : nsets::probe_points(r)) {
      if (r.contains(p) && !unit.contains(p)) {
        escaped = p;
        break;
      }
    }
    if (!escaped && nsets::is_subset(r, unit)) continue;
    ++rep.violations;
    if (!rep.first) rep.first = Violation{i, op.name, a, b, r, escaped};
  }
  return rep;
}

}  // namespace

int cmd_closure_check(long iters, std::uint64_t seed, Semantics sem, int jobs, std::ostream& out, std::ostream& err) {
  if (iters <= 0) {
    err << "error: --iters must be positive\n";
    return kExitUsage;
  }
  jobs = std::clamp(jobs, 1, 64);
  std::vector<IterationReport> reports(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      IterationReport& rep = reports[static_cast<std::size_t>(w)];
      for (long i = w; i < iters; i += jobs) {
        IterationReport r = check_iteration(i, seed, sem);
        rep.violations += r.violations;
        if (r.first && (!rep.first || r.first->iteration < rep.first->iteration)) rep.first = std::move(r.first);
      }
    });
  }
  for (auto& t : workers) t.join();

  long total = 0;
  std::optional<Violation> first;
  for (auto& r : reports) {
    total += r.violations;
    if (r.first && (!first || r.first->iteration < first->iteration)) first = std::move(r.first);
  }

  out << "semantics: " << nlogic::to_string(sem) << "\n";
  out << "operators: " << operator_symbol(sem, "and") << ", " << operator_symbol(sem, "or") << ", "
      << operator_symbol(sem, "implies") << "\n";
  out << "iterations: " << iters << "\n";
  out << "seed: " << seed << "\n";
  out << "violations: " << total << "\n";
  if (first) {
    out << "first violation:\n";
    out << "  iteration: " << first->iteration << "\n";
    out << "  operator: " << operator_symbol(sem, first->op) << "\n";
    out << "  A: " << nsets::to_string(first->a) << "\n";
    out << "  B: " << nsets::to_string(first->b) << "\n";
    out << "  result: " << nsets::to_string(first->result) << "\n";
    if (first->member) {
      out << "  offending member: " << first->member->to_string() << "\n";
    } else {
      out << "  offending member: (structural, no probe escaped)\n";
    }
    out << "  reproduce: nsl closure-check --iters " << first->iteration + 1 << " --seed " << seed
        << " --semantics " << nlogic::to_string(sem) << "\n";
  }
  // Corrected and clamped operators must stay closed; the original ones must not.
  const bool expected = sem == Semantics::Original ? total > 0 : total == 0;
  return expected ? kExitOk : kExitDisagree;
}

int cmd_refute(const std::string& center, const std::string& candidate, const std::string& mode,
               const std::string& eps, std::ostream& out, std::ostream& err) {
  nsets::Extremum which{};
  if (mode == "inf") {
    which = nsets::Extremum::Infimum;
  } else if (mode == "sup") {
    which = nsets::Extremum::Supremum;
  } else {
    err << "error: --mode must be inf or sup\n";
    return kExitUsage;
  }
  try {
    const NSet s = nsets::monad(parse_field_elem(center));
    const RationalFunction l = parse_field_elem(candidate);
    const RationalFunction e = parse_field_elem(eps);
    const auto result = nsets::refute(which, s, l, e);
    out << nsets::to_string(result) << "\n";
    bool ok = true;
    for (const auto& fact : nsets::certify(which, s, l, result)) {
      out << "check " << fact.statement << ": " << (fact.holds ? "true" : "false") << "\n";
      ok = ok && fact.holds;
    }
    return ok ? kExitOk : kExitDisagree;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

namespace {

class Transcript {
public:
  explicit Transcript(std::ostream& out) : out_(out) {}

  void text(const std::string& line) { out_ << line << "\n"; }

  void check(const std::string& label, const std::string& computed, const std::string& expected) {
    const bool ok = computed == expected;
    all_ok_ = all_ok_ && ok;
    out_ << "  " << label << ": " << computed << "  (expected " << expected << ") " << (ok ? "[ok]" : "[MISMATCH]")
         << "\n";
  }

  void check(const std::string& label, bool computed, bool expected) {
    check(label, std::string(computed ? "true" : "false"), std::string(expected ? "true" : "false"));
  }

  int finish() {
    out_ << (all_ok_ ? "verdict: agrees with the expected values" : "verdict: DISAGREES with the expected values")
         << "\n";
    return all_ok_ ? kExitOk : kExitDisagree;
  }

private:
  std::ostream& out_;
  bool all_ok_ = true;
};

int demo_paradox(std::ostream& out) {
  Transcript t(out);
  const NValue a = parse_nvalue("({1}, {0}, {0})");
  const NValue b = parse_nvalue("({0}, {0}, {1})");
  t.text("A := " + nlogic::to_string(a) + "   (a true proposition)");
  t.text("B := " + nlogic::to_string(b) + "   (a false proposition)");
  const NValue conj = nlogic::and_(a, b, Semantics::Corrected);
  t.text("A and B = " + nlogic::to_string(conj));
  t.check("falsity of A and B", nsets::to_string(conj.falsity), "{0}");
  const NValue neg = nlogic::not_(a, Semantics::Corrected);
  t.text("not A = " + nlogic::to_string(neg));
  t.check("indeterminacy of not A", nsets::to_string(neg.indeterminacy), "right(1)");
  return t.finish();
}

int demo_nonclosure(std::ostream& out) {
  Transcript t(out);
  const NSet a = parse_nset("{0, 1}");
  const NSet b = parse_nset("{1}");
  const NSet unit = nsets::unit_interval();
  const RationalFunction eps = RationalFunction::inv_x_pow(1);
  const NSet vee = nsets::ovee_prime(a, b);
  t.text("{0, 1} ovee' {1} = " + nsets::to_string(vee));
  t.check("2 in {0, 1} ovee' {1}", vee.contains(2), true);
  t.check("2 in unit", unit.contains(2), false);
  const NSet imp = nsets::obslash_prime(a, b);
  const RationalFunction two_eps = RationalFunction(2) + eps;
  t.text("{0, 1} obslash' {1} = " + nsets::to_string(imp));
  t.check("2 + 1/X in {0, 1} obslash' {1}", imp.contains(two_eps), true);
  t.check("2 + 1/X in unit", unit.contains(two_eps), false);
  t.text("the corrected operators stay inside the unit interval:");
  t.check("{0, 1} ovee {1} subset of unit", nsets::is_subset(nsets::ovee(a, b), unit), true);
  t.check("{0, 1} obslash {1} subset of unit", nsets::is_subset(nsets::obslash(a, b), unit), true);
  t.text("clamping the original result: " + nsets::to_string(nsets::clamp_to_unit(vee)));
  return t.finish();
}

int demo_monad_vs_interval(std::ostream& out) {
  Transcript t(out);
  const RationalFunction a(ordfield::Rational(1, 2));
  const RationalFunction eps = RationalFunction::inv_x_pow(1);
  const NSet left = nsets::left_monad(a);
  const NSet open_left = nsets::interval(a - eps, nsets::BoundKind::open(), a, nsets::BoundKind::open());
  t.text("a = 1/2, eps = 1/X");
  t.check("a - eps in left(a)", left.contains(a - eps), true);
  t.check("a - eps in iv(open:a - eps, a:open)", open_left.contains(a - eps), false);
  const NSet right = nsets::right_monad(a);
  const NSet open_right = nsets::interval(a, nsets::BoundKind::open(), a + eps, nsets::BoundKind::open());
  t.check("a + eps in right(a)", right.contains(a + eps), true);
  t.check("a + eps in iv(open:a, a + eps:open)", open_right.contains(a + eps), false);
  t.check("left(a) equals the open interval", left == open_left, false);
  return t.finish();
}

int demo_def1_vs_def2(std::ostream& out) {
  Transcript t(out);
  const RationalFunction eps = RationalFunction::inv_x_pow(1);
  const NSet def2 = nsets::unit_interval();
  const NSet def1 = nsets::unit_interval_def1(eps);
  t.text("definition 2: " + nsets::to_string(def2));
  t.text("definition 1 with eps = 1/X: " + nsets::to_string(def1));
  const RationalFunction low = -RationalFunction::inv_x_pow(1, 2);
  const RationalFunction high = RationalFunction(1) + RationalFunction::inv_x_pow(1, 2);
  t.check("-2/X in definition 2", def2.contains(low), true);
  t.check("-2/X in definition 1", def1.contains(low), false);
  t.check("1 + 2/X in definition 2", def2.contains(high), true);
  t.check("1 + 2/X in definition 1", def1.contains(high), false);
  t.check("0 in both", def2.contains(0) && def1.contains(0), true);
  t.check("1 in both", def2.contains(1) && def1.contains(1), true);
  return t.finish();
}

}  // namespace

int cmd_demo(const std::string& name, std::ostream& out, std::ostream& err) {
  if (name == "paradox") return demo_paradox(out);
  if (name == "nonclosure") return demo_nonclosure(out);
  if (name == "monad-vs-interval") return demo_monad_vs_interval(out);
  if (name == "def1-vs-def2") return demo_def1_vs_def2(out);
  err << "error: unknown demo '" << name << "' (paradox, nonclosure, monad-vs-interval, def1-vs-def2)\n";
  return kExitUsage;
}

int cmd_calc(const std::string& expr, std::ostream& out, std::ostream& err) {
  try {
    const RationalFunction r = parse_field_elem(expr);
    out << "value: " << r.to_string() << "\n";
    out << "sign: " << r.sign() << "\n";
    out << "infinitesimal: " << (ordfield::is_infinitesimal(r) ? "true" : "false") << "\n";
    out << "finite: " << (ordfield::is_finite(r) ? "true" : "false") << "\n";
    const auto st = ordfield::try_standard_part(r);
    out << "st: " << (st ? st->to_string() : "(infinite)") << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact neutrosophic logic over the nonarchimedean field Q(X)", "nsl"};
  app.require_subcommand(1);

  const std::vector<std::string> sem_names{"corrected", "original", "clamped"};

  std::string env_path;
  std::string formula;
  std::string eval_sem;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula in an environment file");
  eval->add_option("--env", env_path, "Environment file")->required();
  eval->add_option("--formula", formula, "Formula text")->required();
  eval->add_option("--semantics", eval_sem, "corrected | original | clamped (default: the file's @semantics)")
      ->check(CLI::IsMember(sem_names));

  long iters = 0;
  std::uint64_t seed = 0;
  std::string check_sem = "corrected";
  int jobs = 1;
  auto* closure = app.add_subcommand("closure-check", "Randomized closure test of the set operators");
  closure->add_option("--iters", iters, "Number of random operand pairs")->required();
  closure->add_option("--seed", seed, "Seed")->required();
  closure->add_option("--semantics", check_sem, "corrected | original | clamped")->check(CLI::IsMember(sem_names));
  closure->add_option("--jobs", jobs, "Worker threads (does not change the report)");

  std::string center;
  std::string candidate;
  std::string mode;
  std::string eps = "1/X";
  auto* refute = app.add_subcommand("refute", "Certify that a candidate is not the infimum/supremum of mon(A)");
  refute->add_option("--center", center, "Center A of the monad")->required();
  refute->add_option("--candidate", candidate, "Candidate bound L")->required();
  refute->add_option("--mode", mode, "inf | sup")->required()->check(CLI::IsMember({"inf", "sup"}));
  refute->add_option("--eps", eps, "Positive infinitesimal (default 1/X)");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Self-verifying demonstration");
  demo->add_option("name", demo_name, "paradox | nonclosure | monad-vs-interval | def1-vs-def2")->required();

  std::string expr;
  auto* calc = app.add_subcommand("calc", "Inspect a field element");
  calc->add_option("expr", expr, "Element of Q(X)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (eval->parsed()) {
    const auto sem = eval_sem.empty() ? std::nullopt : nlogic::parse_semantics(eval_sem);
    return cmd_eval(env_path, formula, sem, out, err);
  }
  if (closure->parsed())
    return cmd_closure_check(iters, seed, *nlogic::parse_semantics(check_sem), jobs, out, err);
  if (refute->parsed()) return cmd_refute(center, candidate, mode, eps, out, err);
  if (demo->parsed()) return cmd_demo(demo_name, out, err);
  if (calc->parsed()) return cmd_calc(expr, out, err);
  return kExitUsage;
}

}  // namespace nsl::cli
