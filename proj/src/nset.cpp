#include "nsl/nset.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsl::nsets {

Cut make_cut(const RationalFunction& v, BoundKind kind, Role role) {
  const Side inc = inclusive_side(role);
  switch (kind.tag) {
    case KindTag::Closed:
      return {v, kPoint, inc};
    case KindTag::Open:
      return {v, kPoint, flip(inc)};
    case KindTag::Rough:
      return {v, kind.order, inc};
    case KindTag::Strict:
      return {v, kind.order, flip(inc)};
  }
  throw std::logic_error("unknown bound kind");
}

BoundKind kind_of(const Cut& c, Role role) {
  const bool inc = c.side() == inclusive_side(role);
  if (c.is_point()) return inc ? BoundKind::closed() : BoundKind::open();
  return inc ? BoundKind::rough(c.order()) : BoundKind::strict(c.order());
}

std::optional<GenInterval> GenInterval::from_cuts(Cut lower, Cut upper) {
  if (!(lower < upper)) return std::nullopt;
  return GenInterval(std::move(lower), std::move(upper));
}

std::optional<GenInterval> GenInterval::make(const RationalFunction& lo, BoundKind lo_kind, const RationalFunction& hi,
                                             BoundKind hi_kind) {
  return from_cuts(make_cut(lo, lo_kind, Role::Lower), make_cut(hi, hi_kind, Role::Upper));
}

GenInterval GenInterval::point(const RationalFunction& v) { return {Cut::below(v), Cut::above(v)}; }

bool GenInterval::contains(const RationalFunction& x) const { return lies_above(x, lo_) && !lies_above(x, hi_); }

std::optional<RationalFunction> GenInterval::singleton_value() const {
  if (lo_.is_point() && hi_.is_point() && lo_.side() == Side::Below && hi_.side() == Side::Above &&
      lo_.value() == hi_.value())
    return lo_.value();
  return std::nullopt;
}

bool NSet::contains(const RationalFunction& x) const {
  return std::any_of(ivs_.begin(), ivs_.end(), [&](const GenInterval& iv) { return iv.contains(x); });
}

NSet normalize(std::vector<GenInterval> raw) {
  std::sort(raw.begin(), raw.end(), [](const GenInterval& a, const GenInterval& b) {
    const auto c = a.lower() <=> b.lower();
    if (c != 0) return c < 0;
    return a.upper() < b.upper();
  });
  NSet out;
  for (auto& iv : raw) {
    if (!out.ivs_.empty() && iv.lower() <= out.ivs_.back().upper()) {
      GenInterval& last = out.ivs_.back();
      if (last.upper() < iv.upper()) last = *GenInterval::from_cuts(last.lower(), iv.upper());
      continue;
    }
    out.ivs_.push_back(std::move(iv));
  }
  return out;
}

bool contains(const NSet& s, const RationalFunction& x) { return s.contains(x); }

NSet empty_set() { return {}; }

NSet singleton(const RationalFunction& v) { return normalize({GenInterval::point(v)}); }

NSet finite_set(const std::vector<RationalFunction>& members) {
  std::vector<GenInterval> ivs;
  ivs.reserve(members.size());
  for (const auto& m : members) ivs.push_back(GenInterval::point(m));
  return normalize(std::move(ivs));
}

NSet interval(const RationalFunction& lo, BoundKind lo_kind, const RationalFunction& hi, BoundKind hi_kind) {
  auto iv = GenInterval::make(lo, lo_kind, hi, hi_kind);
  if (!iv) {
    throw std::invalid_argument("empty interval with bounds " + lo.to_string() + " (" + to_string(lo_kind) +
                                ") and " + hi.to_string() + " (" + to_string(hi_kind) + ")");
  }
  return normalize({*iv});
}

NSet unit_interval() { return interval(0, BoundKind::rough(), 1, BoundKind::rough()); }

NSet unit_interval_def1(const RationalFunction& eps) {
  if (eps.sign() <= 0 || !ordfield::is_infinitesimal(eps))
    throw std::invalid_argument("eps must be a positive infinitesimal, got " + eps.to_string());
  return interval(-eps, BoundKind::open(), RationalFunction(1) + eps, BoundKind::open());
}

NSet left_monad(const RationalFunction& a) { return interval(a, BoundKind::rough(), a, BoundKind::open()); }

NSet right_monad(const RationalFunction& b) { return interval(b, BoundKind::open(), b, BoundKind::rough()); }

NSet monad(const RationalFunction& a) { return interval(a, BoundKind::rough(), a, BoundKind::rough()); }

NSet unite(const NSet& a, const NSet& b) {
  std::vector<GenInterval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return normalize(std::move(all));
}

NSet intersect(const NSet& a, const NSet& b) {
  std::vector<GenInterval> out;
  for (const auto& x : a.intervals()) {
    for (const auto& y : b.intervals()) {
      auto iv = GenInterval::from_cuts(std::max(x.lower(), y.lower()), std::min(x.upper(), y.upper()));
      if (iv) out.push_back(*iv);
    }
  }
  return normalize(std::move(out));
}

bool is_subset(const NSet& a, const NSet& b) {
  // A convex piece of a normalized union lies inside a single interval of it.
  return std::all_of(a.intervals().begin(), a.intervals().end(), [&](const GenInterval& x) {
    return std::any_of(b.intervals().begin(), b.intervals().end(), [&](const GenInterval& y) {
      return y.lower() <= x.lower() && x.upper() <= y.upper();
    });
  });
}

bool set_eq(const NSet& a, const NSet& b) { return a == b; }

bool is_lower_bound(const NSet& s, const RationalFunction& y) {
  const Cut at = Cut::below(y);
  return std::all_of(s.intervals().begin(), s.intervals().end(),
                     [&](const GenInterval& iv) { return at <= iv.lower(); });
}

bool is_upper_bound(const NSet& s, const RationalFunction& y) {
  const Cut at = Cut::above(y);
  return std::all_of(s.intervals().begin(), s.intervals().end(),
                     [&](const GenInterval& iv) { return iv.upper() <= at; });
}

std::vector<RationalFunction> probe_points(const NSet& s) {
  const RationalFunction half(Rational(1, 2));
  const RationalFunction inv_x = RationalFunction::inv_x_pow(1);
  std::vector<RationalFunction> offsets = {1,
                                           half,
                                           inv_x,
                                           RationalFunction::inv_x_pow(1, 2),
                                           half + inv_x,
                                           RationalFunction::inv_x_pow(2),
                                           RationalFunction::inv_x_pow(3)};
  std::vector<RationalFunction> out;
  auto around = [&](const RationalFunction& v, const std::vector<RationalFunction>& offs) {
    out.push_back(v);
    for (const auto& o : offs) {
      out.push_back(v + o);
      out.push_back(v - o);
    }
  };
  for (const auto& iv : s.intervals()) {
    for (const Cut* c : {&iv.lower(), &iv.upper()}) {
      around(c->value(), offsets);
      if (!c->is_point()) {
        const int k = c->order();
        around(c->value(), {RationalFunction::inv_x_pow(k), RationalFunction::inv_x_pow(k - 1),
                            RationalFunction::inv_x_pow(k + 1), RationalFunction::inv_x_pow(k - 1, 2)});
      }
    }
    out.push_back((iv.lo_value() + iv.hi_value()) * half);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(BoundKind k) {
  switch (k.tag) {
    case KindTag::Closed:
      return "closed";
    case KindTag::Open:
      return "open";
    case KindTag::Rough:
      return k.order == 1 ? "rough" : "rough(" + std::to_string(k.order) + ")";
    case KindTag::Strict:
      return k.order == 1 ? "strict" : "strict(" + std::to_string(k.order) + ")";
  }
  return "?";
}

namespace {

std::optional<std::string> named_form(const GenInterval& iv) {
  const Cut& lo = iv.lower();
  const Cut& hi = iv.upper();
  const bool lo_rough = lo.order() == 1 && lo.side() == Side::Below;
  const bool hi_rough = hi.order() == 1 && hi.side() == Side::Above;
  if (lo_rough && hi_rough) {
    if (lo.value() == RationalFunction(0) && hi.value() == RationalFunction(1)) return "unit";
    if (lo.value() == hi.value()) return "mon(" + lo.value().to_string() + ")";
  }
  if (lo_rough && hi.is_point() && hi.side() == Side::Below && hi.value().truncated(1) == lo.value())
    return "left(" + hi.value().to_string() + ")";
  if (hi_rough && lo.is_point() && lo.side() == Side::Above && lo.value().truncated(1) == hi.value())
    return "right(" + lo.value().to_string() + ")";
  return std::nullopt;
}

}  // namespace

std::string to_string(const GenInterval& iv) {
  if (auto v = iv.singleton_value()) return "{" + v->to_string() + "}";
  if (auto named = named_form(iv)) return *named;
  return "iv(" + to_string(iv.lo_kind()) + ":" + iv.lo_value().to_string() + ", " + iv.hi_value().to_string() + ":" +
         to_string(iv.hi_kind()) + ")";
}

std::string to_string(const NSet& s) {
  if (s.empty()) return "{}";
  std::vector<std::string> parts;
  std::vector<std::string> run;
  auto flush = [&] {
    if (run.empty()) return;
    std::string lit = "{";
    for (std::size_t i = 0; i < run.size(); ++i) lit += (i ? ", " : "") + run[i];
    parts.push_back(lit + "}");
    run.clear();
  };
  for (const auto& iv : s.intervals()) {
    if (auto v = iv.singleton_value()) {
      run.push_back(v->to_string());
      continue;
    }
    flush();
    parts.push_back(to_string(iv));
  }
  flush();
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " u " : "") + parts[i];
  return out;
}

}  // namespace nsl::nsets
