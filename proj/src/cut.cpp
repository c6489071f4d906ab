#include "nsl/cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsl::nsets {

namespace {

int add_orders(int k, int v) {
  if (k == kPoint) return kPoint;
  return k + v;
}

// Endpoint at `value` built from two contributing germs: the coarser coset
// dominates; at equal order the result keeps the boundary only if both do.
Cut combine(const RationalFunction& value, int k1, Side s1, int k2, Side s2, Role role) {
  if (k1 < k2) return {value, k1, s1};
  if (k2 < k1) return {value, k2, s2};
  const Side inc = inclusive_side(role);
  return {value, k1, (s1 == inc && s2 == inc) ? inc : flip(inc)};
}

}  // namespace

Cut::Cut(RationalFunction value, int order, Side side) : value_(std::move(value)), order_(order), side_(side) {
  if (order_ != kPoint) value_ = value_.truncated(order_);
}

std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
  const int k = std::min(a.order_, b.order_);
  const auto d = ordfield::gap(a.value_, b.value_);
  if (d.valuation < k) return d.sign < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  // Same coset at the coarser order.
  if (a.order_ == b.order_) {
    if (a.side_ == b.side_) return std::strong_ordering::equal;
    return a.side_ == Side::Below ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.order_ < b.order_) return a.side_ == Side::Below ? std::strong_ordering::less : std::strong_ordering::greater;
  return b.side_ == Side::Below ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool lies_above(const RationalFunction& x, const Cut& c) {
  const auto d = ordfield::gap(x, c.value());
  if (d.valuation < c.order()) return d.sign > 0;
  return c.side() == Side::Below;
}

Side flip(Side s) { return s == Side::Below ? Side::Above : Side::Below; }

Side inclusive_side(Role r) { return r == Role::Lower ? Side::Below : Side::Above; }

Cut shift(const Cut& c, const RationalFunction& t) { return {c.value() + t, c.order(), c.side()}; }

Cut scale(const Cut& c, const RationalFunction& s) {
  if (s.is_zero()) throw std::invalid_argument("cut scaled by zero");
  const Side side = s.sign() > 0 ? c.side() : flip(c.side());
  return {c.value() * s, add_orders(c.order(), s.valuation()), side};
}

Cut sum(const Cut& a, const Cut& b, Role role) {
  return combine(a.value() + b.value(), a.order(), a.side(), b.order(), b.side(), role);
}

Cut positive_product(const Cut& a, const Cut& b, Role role) {
  const bool za = a.zero_anchored();
  const bool zb = b.zero_anchored();
  if (!za && !zb) {
    // (v1 + s)(v2 + t): the cross term st is finer than both linear terms.
    return combine(a.value() * b.value(), add_orders(a.order(), b.value().valuation()), a.side(),
                   add_orders(b.order(), a.value().valuation()), b.side(), role);
  }
  if (role == Role::Lower) {
    // A zero-anchored lower cut of a positive set is "open at 0" or "above M_k".
    if ((za && a.side() != Side::Above) || (zb && b.side() != Side::Above))
      throw std::logic_error("lower cut of a positive set reaches zero");
    if (za && zb) {
      if (a.is_point() || b.is_point()) return Cut::above(RationalFunction());
      // val(x) <= k1 - 1 and val(y) <= k2 - 1 give val(xy) <= k1 + k2 - 2.
      return {RationalFunction(), a.order() + b.order() - 1, Side::Above};
    }
    const Cut& z = za ? a : b;
    const Cut& n = za ? b : a;
    if (z.is_point()) return Cut::above(RationalFunction());
    return {RationalFunction(), z.order() + n.value().valuation(), Side::Above};
  }
  // A zero-anchored upper cut of a nonempty positive set is the top of M_k.
  if ((za && (a.is_point() || a.side() != Side::Above)) || (zb && (b.is_point() || b.side() != Side::Above)))
    throw std::logic_error("upper cut of a positive set at or below zero");
  if (za && zb) return {RationalFunction(), a.order() + b.order(), Side::Above};
  const Cut& z = za ? a : b;
  const Cut& n = za ? b : a;
  return {RationalFunction(), z.order() + n.value().valuation(), Side::Above};
}

std::string to_debug_string(const Cut& c) {
  std::string s = c.side() == Side::Below ? "below(" : "above(";
  s += c.value().to_string();
  if (!c.is_point()) s += " + M_" + std::to_string(c.order());
  return s + ")";
}

}  // namespace nsl::nsets
