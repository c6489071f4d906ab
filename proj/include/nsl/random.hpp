#pragma once

// Seeded generators for property runs. Bound values have the form p + q/X
// with small-height rationals p, q so that arithmetic stays cheap.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsl/nlogic.hpp"

namespace nsl::gen {

using Rng = std::mt19937_64;

/// Per-item generator, so a run can be split across workers without changing
/// what each item sees.
Rng rng_for(std::uint64_t seed, std::uint64_t index);

ordfield::Rational small_rational(Rng& rng, int max_den = 6, int max_num = 6);
/// p + q/X with p drawn in [0, 1].
ordfield::RationalFunction unit_bound_value(Rng& rng);
/// p + q/X with p drawn in [-2, 2].
ordfield::RationalFunction bound_value(Rng& rng);

nsets::BoundKind basic_kind(Rng& rng);

/// Single nonempty interval with basic kinds; `within_unit` restricts it to
/// subsets of the unit interval.
nsets::GenInterval interval(Rng& rng, bool within_unit);
/// 1-3 intervals.
nsets::NSet nset(Rng& rng, bool within_unit, int max_intervals = 3);

nlogic::NValue nvalue(Rng& rng, int max_intervals = 2);
nlogic::Formula formula(Rng& rng, int max_depth, const std::vector<std::string>& atoms);
nlogic::Environment environment(Rng& rng, const std::vector<std::string>& atoms, int max_intervals = 2);

}  // namespace nsl::gen
