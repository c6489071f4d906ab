#pragma once

// Exact images of truth-value sets under maps that are affine in each
// argument, and the set-level operators built from them.

#include <vector>

#include "nsl/nset.hpp"

namespace nsl::nsets {

/// phi(x, y) = c0 + cx*x + cy*y + cxy*x*y
struct Bilinear {
  RationalFunction c0;
  RationalFunction cx;
  RationalFunction cy;
  RationalFunction cxy;

  [[nodiscard]] RationalFunction operator()(const RationalFunction& x, const RationalFunction& y) const {
    return c0 + cx * x + cy * y + cxy * x * y;
  }
};

enum class Map {
  F,  ///< f(a, b) = ab
  G,  ///< g(a, b) = a + b - ab
  H,  ///< h(c, a, b) = c - a + ab
};

/// Interval-level primitives.
std::vector<GenInterval> product(const GenInterval& a, const GenInterval& b);
GenInterval minkowski_sum(const GenInterval& a, const GenInterval& b);
GenInterval affine(const GenInterval& a, const RationalFunction& slope, const RationalFunction& offset);
std::vector<GenInterval> image(const Bilinear& phi, const GenInterval& a, const GenInterval& b);

/// { phi(x, y) : x in a, y in b }
NSet image(const Bilinear& phi, const NSet& a, const NSet& b);

/// For Map::H the c operand is right_monad(1).
NSet image_multilinear(Map map, const NSet& a, const NSet& b);
/// Map::H with an explicit c operand: { c - a + ab : c in c_set, a in a, b in b }.
NSet image_h(const NSet& c_set, const NSet& a, const NSet& b);

NSet owedge(const NSet& a, const NSet& b);
NSet ovee(const NSet& a, const NSet& b);
NSet obslash(const NSet& a, const NSet& b);

NSet elem_add(const NSet& a, const NSet& b);
NSet elem_sub(const NSet& a, const NSet& b);
NSet elem_mul(const NSet& a, const NSet& b);

/// (A + B) - (A * B) with each occurrence drawn independently.
NSet ovee_prime(const NSet& a, const NSet& b);
/// 1+ - A + (A * B) with each occurrence drawn independently.
NSet obslash_prime(const NSet& a, const NSet& b);

/// Keeps the part inside the unit interval; material appreciably below 0 is
/// replaced by left_monad(0), material appreciably above 1 by right_monad(1).
NSet clamp_to_unit(const NSet& s);

}  // namespace nsl::nsets
