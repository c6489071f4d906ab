#include "nsl/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsl::nsets {

namespace {

const RationalFunction kZero;
const RationalFunction kOne(1);

GenInterval checked(std::optional<GenInterval> iv, const char* what) {
  if (!iv) throw std::logic_error(std::string("empty result in ") + what);
  return *iv;
}

GenInterval negate(const GenInterval& a) {
  return checked(GenInterval::from_cuts(scale(a.upper(), -1), scale(a.lower(), -1)), "negate");
}

GenInterval positive_box(const GenInterval& a, const GenInterval& b) {
  return checked(GenInterval::from_cuts(positive_product(a.lower(), b.lower(), Role::Lower),
                                        positive_product(a.upper(), b.upper(), Role::Upper)),
                 "positive product");
}

struct SignedPiece {
  int sign;
  GenInterval magnitude;  // subset of the positive elements
};

std::vector<SignedPiece> signed_pieces(const GenInterval& a) {
  std::vector<SignedPiece> out;
  if (auto pos = GenInterval::from_cuts(std::max(a.lower(), Cut::above(kZero)), a.upper())) out.push_back({1, *pos});
  if (auto neg = GenInterval::from_cuts(a.lower(), std::min(a.upper(), Cut::below(kZero))))
    out.push_back({-1, negate(*neg)});
  return out;
}

}  // namespace

std::vector<GenInterval> product(const GenInterval& a, const GenInterval& b) {
  std::vector<GenInterval> out;
  if (a.contains(kZero) || b.contains(kZero)) out.push_back(GenInterval::point(kZero));
  const auto pa = signed_pieces(a);
  const auto pb = signed_pieces(b);
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      GenInterval r = positive_box(x.magnitude, y.magnitude);
      out.push_back(x.sign * y.sign > 0 ? r : negate(r));
    }
  }
  return out;
}

GenInterval minkowski_sum(const GenInterval& a, const GenInterval& b) {
  return checked(GenInterval::from_cuts(sum(a.lower(), b.lower(), Role::Lower), sum(a.upper(), b.upper(), Role::Upper)),
                 "sum");
}

GenInterval affine(const GenInterval& a, const RationalFunction& slope, const RationalFunction& offset) {
  if (slope.is_zero()) return GenInterval::point(offset);
  if (slope.sign() > 0) {
    return checked(GenInterval::from_cuts(shift(scale(a.lower(), slope), offset), shift(scale(a.upper(), slope), offset)),
                   "affine");
  }
  return checked(GenInterval::from_cuts(shift(scale(a.upper(), slope), offset), shift(scale(a.lower(), slope), offset)),
                 "affine");
}

std::vector<GenInterval> image(const Bilinear& phi, const GenInterval& a, const GenInterval& b) {
  if (phi.cxy.is_zero()) return {minkowski_sum(affine(a, phi.cx, phi.c0), affine(b, phi.cy, kZero))};
  // c0 + cx x + cy y + cxy x y = cxy (x + cy/cxy)(y + cx/cxy) + c0 - cx cy / cxy
  const GenInterval xs = affine(a, kOne, phi.cy / phi.cxy);
  const GenInterval ys = affine(b, kOne, phi.cx / phi.cxy);
  const RationalFunction offset = phi.c0 - phi.cx * phi.cy / phi.cxy;
  std::vector<GenInterval> out;
  for (const auto& p : product(xs, ys)) out.push_back(affine(p, phi.cxy, offset));
  return out;
}

NSet image(const Bilinear& phi, const NSet& a, const NSet& b) {
  std::vector<GenInterval> out;
  for (const auto& x : a.intervals()) {
    for (const auto& y : b.intervals()) {
      auto part = image(phi, x, y);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return normalize(std::move(out));
}

namespace {

const Bilinear kF{0, 0, 0, 1};
const Bilinear kG{0, 1, 1, -1};
const Bilinear kHTail{0, -1, 0, 1};  // -a + ab
const Bilinear kAdd{0, 1, 1, 0};
const Bilinear kSub{0, 1, -1, 0};

}  // namespace

NSet image_h(const NSet& c_set, const NSet& a, const NSet& b) { return elem_add(c_set, image(kHTail, a, b)); }

NSet image_multilinear(Map map, const NSet& a, const NSet& b) {
  switch (map) {
    case Map::F:
      return image(kF, a, b);
    case Map::G:
      return image(kG, a, b);
    case Map::H:
      return image_h(right_monad(kOne), a, b);
  }
  throw std::logic_error("unknown map");
}

NSet owedge(const NSet& a, const NSet& b) { return image(kF, a, b); }
NSet ovee(const NSet& a, const NSet& b) { return image(kG, a, b); }
NSet obslash(const NSet& a, const NSet& b) { return image_h(right_monad(kOne), a, b); }

NSet elem_add(const NSet& a, const NSet& b) { return image(kAdd, a, b); }
NSet elem_sub(const NSet& a, const NSet& b) { return image(kSub, a, b); }
NSet elem_mul(const NSet& a, const NSet& b) { return image(kF, a, b); }

NSet ovee_prime(const NSet& a, const NSet& b) { return elem_sub(elem_add(a, b), elem_mul(a, b)); }

NSet obslash_prime(const NSet& a, const NSet& b) {
  return elem_add(elem_sub(right_monad(kOne), a), elem_mul(a, b));
}

NSet clamp_to_unit(const NSet& s) {
  const Cut below_unit(kZero, 1, Side::Below);  // upper bound: x < 0 and not x ~ 0
  const Cut above_unit(kOne, 1, Side::Above);   // lower bound: x > 1 and not x ~ 1
  bool has_below = false;
  bool has_above = false;
  for (const auto& iv : s.intervals()) {
    has_below = has_below || GenInterval::from_cuts(iv.lower(), std::min(iv.upper(), below_unit)).has_value();
    has_above = has_above || GenInterval::from_cuts(std::max(iv.lower(), above_unit), iv.upper()).has_value();
  }
  NSet out = intersect(s, unit_interval());
  if (has_below) out = unite(out, left_monad(kZero));
  if (has_above) out = unite(out, right_monad(kOne));
  return out;
}

}  // namespace nsl::nsets
