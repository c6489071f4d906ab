#pragma once

// Cuts of Q(X). Interval endpoints in this library are not field elements but
// positions between them: just below or just above a point v, or just below or
// just above a whole coset v + M_k, where M_k = { x : valuation(x) >= k }.
// k = 1 gives the monad (all elements infinitely close to v), so "roughly
// smaller than" bounds are coset cuts of order 1. Products of infinitesimals
// land in higher orders (M_1 * M_1 = M_2), which is why the order is explicit.

#include <climits>
#include <compare>
#include <string>

#include "nsl/ratfunc.hpp"

namespace nsl::nsets {

using ordfield::Rational;
using ordfield::RationalFunction;

/// Order of a point cut (the coset {v} = v + M_inf).
inline constexpr int kPoint = INT_MAX;

enum class Side { Below, Above };

enum class Role { Lower, Upper };

class Cut {
public:
  /// Canonicalizes: coset cuts keep only the truncated Laurent representative.
  Cut(RationalFunction value, int order, Side side);

  static Cut below(const RationalFunction& v) { return {v, kPoint, Side::Below}; }
  static Cut above(const RationalFunction& v) { return {v, kPoint, Side::Above}; }

  [[nodiscard]] const RationalFunction& value() const { return value_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] Side side() const { return side_; }
  [[nodiscard]] bool is_point() const { return order_ == kPoint; }
  /// The coset contains zero (canonical value is 0).
  [[nodiscard]] bool zero_anchored() const { return value_.is_zero(); }

  friend bool operator==(const Cut&, const Cut&) = default;
  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b);

private:
  RationalFunction value_;
  int order_;
  Side side_;
};

/// x lies strictly above the cut (elements are never equal to a cut).
bool lies_above(const RationalFunction& x, const Cut& c);

Side flip(Side s);
/// Side that keeps the boundary coset inside a set: Below for lower bounds.
Side inclusive_side(Role r);

Cut shift(const Cut& c, const RationalFunction& t);
/// Multiply by a nonzero element; a negative factor flips the side.
Cut scale(const Cut& c, const RationalFunction& s);
/// Endpoint of a Minkowski sum given the endpoints (same role) of the summands.
Cut sum(const Cut& a, const Cut& b, Role role);
/// Endpoint of { xy } for convex sets of positive elements.
Cut positive_product(const Cut& a, const Cut& b, Role role);

std::string to_debug_string(const Cut& c);

}  // namespace nsl::nsets
