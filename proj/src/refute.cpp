#include "nsl/refute.hpp"

#include <stdexcept>

namespace nsl::nsets {

RationalFunction monad_center(const NSet& s) {
  const auto& ivs = s.intervals();
  if (ivs.size() == 1) {
    const Cut& lo = ivs.front().lower();
    const Cut& hi = ivs.front().upper();
    if (lo.order() == 1 && hi.order() == 1 && lo.side() == Side::Below && hi.side() == Side::Above &&
        lo.value() == hi.value())
      return lo.value();
  }
  throw std::invalid_argument("expected a two-sided monad mon(a), got " + to_string(s));
}

namespace {

void require_positive_infinitesimal(const RationalFunction& eps) {
  if (eps.sign() <= 0 || !ordfield::is_infinitesimal(eps))
    throw std::invalid_argument("eps must be a positive infinitesimal, got " + eps.to_string());
}

}  // namespace

RefutationResult refute_infimum(const NSet& s, const RationalFunction& candidate, const RationalFunction& eps) {
  require_positive_infinitesimal(eps);
  const RationalFunction a = monad_center(s);
  if (ordfield::infinitely_close(candidate, a)) {
    // x = candidate is a member with x <= L + eps, and x - 2 eps stays in the monad.
    return Witness{candidate - eps - eps};
  }
  if (candidate > a) return Witness{a};
  return BetterBound{candidate + (a - candidate) / RationalFunction(2)};
}

RefutationResult refute_supremum(const NSet& s, const RationalFunction& candidate, const RationalFunction& eps) {
  require_positive_infinitesimal(eps);
  const RationalFunction a = monad_center(s);
  if (ordfield::infinitely_close(candidate, a)) return Witness{candidate + eps + eps};
  if (candidate < a) return Witness{a};
  return BetterBound{candidate - (candidate - a) / RationalFunction(2)};
}

RefutationResult refute(Extremum which, const NSet& s, const RationalFunction& candidate, const RationalFunction& eps) {
  return which == Extremum::Infimum ? refute_infimum(s, candidate, eps) : refute_supremum(s, candidate, eps);
}

std::vector<CertificateFact> certify(Extremum which, const NSet& s, const RationalFunction& candidate,
                                     const RefutationResult& result) {
  const bool inf = which == Extremum::Infimum;
  const std::string set_text = to_string(s);
  const std::string l = candidate.to_string();
  std::vector<CertificateFact> facts;
  if (const auto* w = std::get_if<Witness>(&result)) {
    const std::string p = w->point.to_string();
    facts.push_back({"contains(" + set_text + ", " + p + ")", s.contains(w->point)});
    if (inf) {
      facts.push_back({p + " < " + l, w->point < candidate});
    } else {
      facts.push_back({p + " > " + l, w->point > candidate});
    }
    return facts;
  }
  const auto& b = std::get<BetterBound>(result).bound;
  const std::string p = b.to_string();
  if (inf) {
    facts.push_back({p + " > " + l, b > candidate});
    facts.push_back({"lower_bound(" + set_text + ", " + p + ")", is_lower_bound(s, b)});
  } else {
    facts.push_back({p + " < " + l, b < candidate});
    facts.push_back({"upper_bound(" + set_text + ", " + p + ")", is_upper_bound(s, b)});
  }
  return facts;
}

bool verify(Extremum which, const NSet& s, const RationalFunction& candidate, const RefutationResult& result) {
  for (const auto& f : certify(which, s, candidate, result))
    if (!f.holds) return false;
  return true;
}

std::string to_string(const RefutationResult& r) {
  if (const auto* w = std::get_if<Witness>(&r)) return "Witness(" + w->point.to_string() + ")";
  return "BetterBound(" + std::get<BetterBound>(r).bound.to_string() + ")";
}

}  // namespace nsl::nsets
