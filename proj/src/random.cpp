#include "nsl/random.hpp"

namespace nsl::gen {

using nsets::BoundKind;
using nsets::GenInterval;
using ordfield::Rational;
using ordfield::RationalFunction;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

RationalFunction with_infinitesimal(Rng& rng, const Rational& p) {
  if (coin(rng, 0.4)) return RationalFunction(p);
  const Rational q(uniform(rng, -2, 2), uniform(rng, 1, 2));
  return RationalFunction(p) + RationalFunction::inv_x_pow(1, q);
}

}  // namespace

Rng rng_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Rational small_rational(Rng& rng, int max_den, int max_num) {
  return {uniform(rng, -max_num, max_num), uniform(rng, 1, max_den)};
}

RationalFunction unit_bound_value(Rng& rng) {
  // Endpoints 0 and 1 are overrepresented: that is where the monads sit.
  const int pick = uniform(rng, 0, 5);
  Rational p;
  if (pick == 0) {
    p = Rational(0);
  } else if (pick == 1) {
    p = Rational(1);
  } else {
    const int den = uniform(rng, 1, 6);
    p = Rational(uniform(rng, 0, den), den);
  }
  return with_infinitesimal(rng, p);
}

RationalFunction bound_value(Rng& rng) {
  const int den = uniform(rng, 1, 4);
  return with_infinitesimal(rng, Rational(uniform(rng, -2 * den, 2 * den), den));
}

BoundKind basic_kind(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return BoundKind::closed();
    case 1:
      return BoundKind::open();
    default:
      return BoundKind::rough();
  }
}

GenInterval interval(Rng& rng, bool within_unit) {
  const nsets::NSet unit = nsets::unit_interval();
  for (;;) {
    RationalFunction a = within_unit ? unit_bound_value(rng) : bound_value(rng);
    std::optional<GenInterval> iv;
    if (coin(rng, 0.2)) {
      iv = GenInterval::point(a);
    } else {
      RationalFunction b = within_unit ? unit_bound_value(rng) : bound_value(rng);
      if (b < a) std::swap(a, b);
      iv = GenInterval::make(a, basic_kind(rng), b, basic_kind(rng));
    }
    if (!iv) continue;
    if (within_unit && !nsets::is_subset(nsets::normalize({*iv}), unit)) continue;
    return *iv;
  }
}

nsets::NSet nset(Rng& rng, bool within_unit, int max_intervals) {
  const int n = uniform(rng, 1, max_intervals);
  std::vector<GenInterval> ivs;
  for (int i = 0; i < n; ++i) ivs.push_back(interval(rng, within_unit));
  return nsets::normalize(std::move(ivs));
}

nlogic::NValue nvalue(Rng& rng, int max_intervals) {
  nlogic::NValue v;
  v.truth = nset(rng, true, max_intervals);
  v.indeterminacy = nset(rng, true, max_intervals);
  v.falsity = nset(rng, true, max_intervals);
  return v;
}

nlogic::Formula formula(Rng& rng, int max_depth, const std::vector<std::string>& atoms) {
  using nlogic::Formula;
  if (max_depth == 0 || coin(rng, 0.3)) return Formula::atom(atoms[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(atoms.size()) - 1))]);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return Formula::negation(formula(rng, max_depth - 1, atoms));
    case 1:
      return Formula::conjunction(formula(rng, max_depth - 1, atoms), formula(rng, max_depth - 1, atoms));
    case 2:
      return Formula::disjunction(formula(rng, max_depth - 1, atoms), formula(rng, max_depth - 1, atoms));
    default:
      return Formula::implication(formula(rng, max_depth - 1, atoms), formula(rng, max_depth - 1, atoms));
  }
}

nlogic::Environment environment(Rng& rng, const std::vector<std::string>& atoms, int max_intervals) {
  nlogic::Environment env;
  for (const auto& a : atoms) env.bindings.emplace(a, nvalue(rng, max_intervals));
  return env;
}

}  // namespace nsl::gen
