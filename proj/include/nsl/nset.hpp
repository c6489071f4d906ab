#pragma once

// Truth-value sets: finite unions of generalized intervals of Q(X). This is
// the computable class of subsets of the nonstandard unit interval the logic
// works with. It contains singletons, finite sets, ordinary intervals, the
// one- and two-sided monads and the unit interval itself.

#include <optional>
#include <string>
#include <vector>

#include "nsl/cut.hpp"

namespace nsl::nsets {

enum class KindTag {
  Closed,  ///< x >= v (lower) / x <= v (upper)
  Open,    ///< x > v / x < v
  Rough,   ///< x > v or x - v in M_k; order 1 is "roughly greater than v"
  Strict,  ///< x > v and x - v not in M_k; the complement of Rough
};

struct BoundKind {
  KindTag tag = KindTag::Closed;
  int order = 1;  // only meaningful for Rough / Strict

  static BoundKind closed() { return {KindTag::Closed, 1}; }
  static BoundKind open() { return {KindTag::Open, 1}; }
  static BoundKind rough(int k = 1) { return {KindTag::Rough, k}; }
  static BoundKind strict(int k = 1) { return {KindTag::Strict, k}; }

  friend bool operator==(const BoundKind&, const BoundKind&) = default;
};

Cut make_cut(const RationalFunction& v, BoundKind kind, Role role);
BoundKind kind_of(const Cut& c, Role role);

/// Nonempty convex set { x : lower < x < upper } between two cuts.
class GenInterval {
public:
  /// std::nullopt when the bounds admit no element.
  static std::optional<GenInterval> make(const RationalFunction& lo, BoundKind lo_kind, const RationalFunction& hi,
                                         BoundKind hi_kind);
  static std::optional<GenInterval> from_cuts(Cut lower, Cut upper);
  static GenInterval point(const RationalFunction& v);

  [[nodiscard]] const Cut& lower() const { return lo_; }
  [[nodiscard]] const Cut& upper() const { return hi_; }
  [[nodiscard]] const RationalFunction& lo_value() const { return lo_.value(); }
  [[nodiscard]] const RationalFunction& hi_value() const { return hi_.value(); }
  [[nodiscard]] BoundKind lo_kind() const { return kind_of(lo_, Role::Lower); }
  [[nodiscard]] BoundKind hi_kind() const { return kind_of(hi_, Role::Upper); }

  [[nodiscard]] bool contains(const RationalFunction& x) const;
  [[nodiscard]] std::optional<RationalFunction> singleton_value() const;

  friend bool operator==(const GenInterval&, const GenInterval&) = default;

private:
  GenInterval(Cut lo, Cut hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  Cut lo_;
  Cut hi_;
};

/// Normalized finite union: sorted by lower cut, pairwise disjoint and not
/// mergeable. Equal sets have equal representations.
class NSet {
public:
  NSet() = default;

  [[nodiscard]] const std::vector<GenInterval>& intervals() const { return ivs_; }
  [[nodiscard]] bool empty() const { return ivs_.empty(); }
  [[nodiscard]] bool contains(const RationalFunction& x) const;

  friend bool operator==(const NSet&, const NSet&) = default;
  friend NSet normalize(std::vector<GenInterval> raw);

private:
  std::vector<GenInterval> ivs_;
};

NSet normalize(std::vector<GenInterval> raw);

bool contains(const NSet& s, const RationalFunction& x);

NSet empty_set();
NSet singleton(const RationalFunction& v);
NSet finite_set(const std::vector<RationalFunction>& members);
/// Throws std::invalid_argument when the bounds admit no element.
NSet interval(const RationalFunction& lo, BoundKind lo_kind, const RationalFunction& hi, BoundKind hi_kind);

/// { x : 0 roughly<= x roughly<= 1 }
NSet unit_interval();
/// The open interval (0 - eps, 1 + eps). Requires eps positive infinitesimal.
NSet unit_interval_def1(const RationalFunction& eps);
/// { a - x : x positive infinitesimal }
NSet left_monad(const RationalFunction& a);
/// { b + x : x positive infinitesimal }
NSet right_monad(const RationalFunction& b);
/// { x : x infinitely close to a }
NSet monad(const RationalFunction& a);

NSet unite(const NSet& a, const NSet& b);
NSet intersect(const NSet& a, const NSet& b);
bool is_subset(const NSet& a, const NSet& b);
bool set_eq(const NSet& a, const NSet& b);

/// Every member is >= y (resp. <= y).
bool is_lower_bound(const NSet& s, const RationalFunction& y);
bool is_upper_bound(const NSet& s, const RationalFunction& y);

/// Deterministic sample of elements around every bound of `s`, sorted
/// ascending without duplicates.
std::vector<RationalFunction> probe_points(const NSet& s);

/// Canonical text: named forms (`unit`, `mon(a)`, `left(a)`, `right(a)`),
/// runs of singletons as `{a, b}`, otherwise `iv(kind:a, b:kind)`, joined by
/// ` u ` in ascending order. The empty set prints as `{}`.
std::string to_string(const NSet& s);
std::string to_string(const GenInterval& iv);
std::string to_string(BoundKind k);

}  // namespace nsl::nsets
