#include <doctest.h>

#include <random>

#include "nsl/image.hpp"
#include "nsl/nset.hpp"
#include "nsl/random.hpp"
#include "nsl/refute.hpp"
#include "oracles.hpp"

using namespace nsl::nsets;
using nsl::ordfield::Rational;
using nsl::ordfield::RationalFunction;

namespace {

RationalFunction q(long n, long d = 1) { return RationalFunction(Rational(n, d)); }
RationalFunction inv(int n, long c = 1) { return RationalFunction::inv_x_pow(n, Rational(c)); }

NSet closed(const RationalFunction& a, const RationalFunction& b) {
  return interval(a, BoundKind::closed(), b, BoundKind::closed());
}

}  // namespace

TEST_CASE("unit interval membership") {
  const NSet u = unit_interval();
  CHECK(u.contains(q(0)));
  CHECK(u.contains(q(1)));
  CHECK(u.contains(q(1, 2)));
  CHECK(u.contains(-inv(1, 2)));
  CHECK(u.contains(q(1) + inv(1)));
  CHECK(u.contains(q(1, 2) + inv(1)));
  CHECK_FALSE(u.contains(q(2)));
  CHECK_FALSE(u.contains(q(-1, 1000)));
  CHECK(to_string(u) == "unit");
}

TEST_CASE("definition 1 excludes points the second definition keeps") {
  const NSet d1 = unit_interval_def1(inv(1));
  CHECK_FALSE(d1.contains(-inv(1, 2)));
  CHECK(d1.contains(q(0)));
  CHECK_FALSE(d1.contains(-inv(1)));
  CHECK(d1.contains(-inv(2)));
  CHECK_THROWS_AS(unit_interval_def1(q(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(unit_interval_def1(-inv(1)), std::invalid_argument);
}

TEST_CASE("monads") {
  const RationalFunction a = q(1, 3);
  CHECK(left_monad(a).contains(a - inv(1)));
  CHECK_FALSE(interval(a - inv(1), BoundKind::open(), a, BoundKind::open()).contains(a - inv(1)));
  CHECK_FALSE(left_monad(a).contains(a));
  CHECK(monad(q(1, 2)).contains(q(1, 2)));
  CHECK_FALSE(right_monad(q(1)).contains(q(1)));
  CHECK(right_monad(q(1)).contains(q(1) + inv(3)));
  CHECK_FALSE(right_monad(q(1)).contains(q(1) - inv(3)));
  CHECK(to_string(monad(q(1, 2))) == "mon(1/2)");
  CHECK(to_string(left_monad(q(0))) == "left(0)");
  CHECK(to_string(right_monad(q(1))) == "right(1)");
  CHECK(set_eq(unite(unite(left_monad(q(0)), singleton(q(0))), right_monad(q(0))), monad(q(0))));
}

TEST_CASE("monad versus open interval on random centers") {
  nsl::gen::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const RationalFunction a = nsl::gen::bound_value(rng);
    const RationalFunction e = inv(1 + i % 3, 1 + i % 5);
    CHECK(left_monad(a).contains(a - e));
    CHECK_FALSE(interval(a - e, BoundKind::open(), a, BoundKind::open()).contains(a - e));
    CHECK(right_monad(a).contains(a + e));
  }
}

TEST_CASE("union, subset and normalize") {
  const NSet a = closed(q(0), q(1, 2));
  CHECK(unite(a, empty_set()) == a);
  CHECK(to_string(unite(singleton(q(1)), singleton(q(0)))) == "{0, 1}");
  CHECK(is_subset(right_monad(q(1)), unit_interval()));
  CHECK_FALSE(is_subset(unit_interval(), right_monad(q(1))));

  const NSet merged = normalize({*GenInterval::make(q(0), BoundKind::closed(), q(1, 2), BoundKind::closed()),
                                 *GenInterval::make(q(1, 2), BoundKind::closed(), q(1), BoundKind::closed())});
  CHECK(merged == closed(q(0), q(1)));

  const NSet absorbed = normalize({*GenInterval::make(q(0), BoundKind::rough(), q(0), BoundKind::rough()),
                                   GenInterval::point(q(0))});
  CHECK(absorbed == monad(q(0)));
  CHECK(normalize({}).empty());
  CHECK(to_string(empty_set()) == "{}");

  // Open halves meet at a point that neither contains.
  const NSet gap = unite(interval(q(0), BoundKind::closed(), q(1, 2), BoundKind::open()),
                         interval(q(1, 2), BoundKind::open(), q(1), BoundKind::closed()));
  CHECK(gap.intervals().size() == 2);
  CHECK_FALSE(gap.contains(q(1, 2)));
  CHECK(unite(gap, singleton(q(1, 2))) == closed(q(0), q(1)));
}

TEST_CASE("empty interval is rejected with the bounds named") {
  CHECK_FALSE(GenInterval::make(q(1), BoundKind::closed(), q(0), BoundKind::closed()).has_value());
  CHECK_FALSE(GenInterval::make(q(0), BoundKind::open(), q(0), BoundKind::closed()).has_value());
  CHECK(GenInterval::make(q(0), BoundKind::rough(), q(0), BoundKind::open()).has_value());
  try {
    (void)interval(q(1), BoundKind::closed(), q(0), BoundKind::closed());
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find('1') != std::string::npos);
    CHECK(msg.find('0') != std::string::npos);
  }
}

TEST_CASE("set laws on random sets") {
  nsl::gen::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const NSet a = nsl::gen::nset(rng, i % 2 == 0);
    const NSet b = nsl::gen::nset(rng, i % 2 == 0);
    const NSet c = nsl::gen::nset(rng, true);
    CHECK(unite(a, b) == unite(b, a));
    CHECK(unite(unite(a, b), c) == unite(a, unite(b, c)));
    CHECK(unite(a, a) == a);
    CHECK(normalize(a.intervals()) == a);
    CHECK(is_subset(a, unite(a, b)));
    CHECK(is_subset(intersect(a, b), a));

    std::vector<GenInterval> raw = a.intervals();
    raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
    const NSet u = normalize(raw);
    std::vector<RationalFunction> probes = probe_points(a);
    const auto pb = probe_points(b);
    probes.insert(probes.end(), pb.begin(), pb.end());
    for (const auto& p : probes) {
      bool raw_member = false;
      for (const auto& iv : raw) raw_member = raw_member || iv.contains(p);
      CHECK(u.contains(p) == raw_member);
      CHECK(intersect(a, b).contains(p) == (a.contains(p) && b.contains(p)));
    }
  }
}

TEST_CASE("structural subset agrees with probes") {
  nsl::gen::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const NSet a = nsl::gen::nset(rng, false);
    const NSet b = nsl::gen::nset(rng, false);
    if (!is_subset(a, b)) continue;
    for (const auto& p : probe_points(a))
      if (a.contains(p)) CHECK(b.contains(p));
  }
}

TEST_CASE("probe points") {
  const auto zero = probe_points(singleton(q(0)));
  for (const auto& p : {-inv(1), q(0), inv(1)}) CHECK(std::find(zero.begin(), zero.end(), p) != zero.end());
  const auto u = probe_points(unit_interval());
  for (const auto& p : {-inv(1, 2), q(1) + inv(1, 2)}) CHECK(std::find(u.begin(), u.end(), p) != u.end());
  CHECK(std::is_sorted(u.begin(), u.end()));
}

TEST_CASE("images of the lemma maps") {
  CHECK(image_multilinear(Map::F, singleton(q(1)), singleton(q(0))) == singleton(q(0)));
  CHECK(image_multilinear(Map::F, closed(q(0), q(1, 2)), closed(q(0), q(1, 2))) == closed(q(0), q(1, 4)));
  CHECK(image_multilinear(Map::H, singleton(q(1)), singleton(q(1))) == right_monad(q(1)));
  CHECK(owedge(singleton(q(0)), singleton(q(1))) == singleton(q(0)));
  CHECK(ovee(singleton(q(0)), singleton(q(0))) == singleton(q(0)));
  CHECK(obslash(singleton(q(1)), singleton(q(1))) == right_monad(q(1)));
  CHECK(owedge(unit_interval(), unit_interval()) == unit_interval());
  CHECK(ovee(unit_interval(), unit_interval()) == unit_interval());
}

TEST_CASE("products of infinitesimal sets reach higher orders") {
  const NSet m2 = owedge(monad(q(0)), monad(q(0)));
  CHECK(m2.contains(inv(2)));
  CHECK(m2.contains(-inv(3, 5)));
  CHECK_FALSE(m2.contains(inv(1)));
  CHECK(to_string(m2) == "iv(rough(2):0, 0:rough(2))");
  // x y with x, y positive infinitesimal: positive and of order >= 2
  const NSet pos = owedge(right_monad(q(0)), right_monad(q(0)));
  CHECK(pos.contains(inv(2)));
  CHECK_FALSE(pos.contains(q(0)));
  CHECK_FALSE(pos.contains(inv(1)));
}

TEST_CASE("elementwise operations on finite sets match enumeration") {
  using nsl::testing::enumerate_finite;
  CHECK(elem_add(finite_set({q(0), q(1)}), singleton(q(1))) == finite_set({q(1), q(2)}));
  CHECK(elem_mul(finite_set({q(0), q(1)}), singleton(q(1))) == finite_set({q(0), q(1)}));
  nsl::gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<RationalFunction> xs;
    std::vector<RationalFunction> ys;
    for (int k = 0; k < 3; ++k) xs.push_back(nsl::gen::bound_value(rng));
    for (int k = 0; k < 2; ++k) ys.push_back(nsl::gen::bound_value(rng));
    const NSet a = finite_set(xs);
    const NSet b = finite_set(ys);
    CHECK(elem_add(a, b) == enumerate_finite(xs, ys, [](auto& x, auto& y) { return x + y; }));
    CHECK(elem_sub(a, b) == enumerate_finite(xs, ys, [](auto& x, auto& y) { return x - y; }));
    CHECK(elem_mul(a, b) == enumerate_finite(xs, ys, [](auto& x, auto& y) { return x * y; }));
    CHECK(elem_sub(a, a).contains(q(0)));
  }
}

TEST_CASE("primed operators leave the unit interval") {
  const NSet a = finite_set({q(0), q(1)});
  const NSet b = singleton(q(1));
  CHECK(ovee_prime(a, b).contains(q(2)));
  CHECK(obslash_prime(a, b).contains(q(2) + inv(1)));
  CHECK(ovee_prime(singleton(q(0)), singleton(q(0))) == singleton(q(0)));
  CHECK_FALSE(is_subset(ovee_prime(a, b), unit_interval()));
}

TEST_CASE("clamp") {
  const NSet c = clamp_to_unit(finite_set({q(0), q(1), q(2)}));
  CHECK(set_eq(c, unite(finite_set({q(0), q(1)}), right_monad(q(1)))));
  CHECK(clamp_to_unit(unit_interval()) == unit_interval());
  CHECK(clamp_to_unit(singleton(q(-1))) == left_monad(q(0)));
  CHECK(clamp_to_unit(singleton(q(1) + inv(1))) == singleton(q(1) + inv(1)));
  nsl::gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const NSet s = nsl::gen::nset(rng, false);
    const NSet once = clamp_to_unit(s);
    CHECK(is_subset(once, unit_interval()));
    CHECK(clamp_to_unit(once) == once);
    CHECK(is_subset(intersect(s, unit_interval()), once));
  }
}

TEST_CASE("closure of the corrected operators") {
  nsl::gen::Rng rng(2);
  const NSet u = unit_interval();
  for (int i = 0; i < 300; ++i) {
    const NSet a = nsl::gen::nset(rng, true);
    const NSet b = nsl::gen::nset(rng, true);
    for (const NSet& r : {owedge(a, b), ovee(a, b), obslash(a, b)}) {
      CHECK(is_subset(r, u));
      for (const auto& p : probe_points(r))
        if (r.contains(p)) CHECK(u.contains(p));
    }
  }
}

TEST_CASE("image soundness and completeness on random intervals") {
  using nsl::testing::completeness_failure;
  using nsl::testing::soundness_failure;
  nsl::gen::Rng rng(1234);
  const std::vector<Bilinear> maps = {
      {0, 0, 0, 1}, {0, 1, 1, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {q(1, 2), -2, q(1, 3), 3}, {1, -1, 0, 1}};
  for (int i = 0; i < 40; ++i) {
    const NSet a = normalize({nsl::gen::interval(rng, i % 3 != 0)});
    const NSet b = normalize({nsl::gen::interval(rng, i % 3 != 0)});
    for (const auto& phi : maps) {
      const NSet img = image(phi, a, b);
      const auto s = soundness_failure(phi, a, b, img);
      const auto c = completeness_failure(phi, a, b, img);
      CHECK_MESSAGE(!s, to_string(a), " ", to_string(b), ": ", s.value_or(""));
      CHECK_MESSAGE(!c, to_string(a), " ", to_string(b), ": ", c.value_or(""));
    }
  }
}

TEST_CASE("h image soundness and completeness") {
  nsl::gen::Rng rng(99);
  for (int i = 0; i < 25; ++i) {
    const NSet a = normalize({nsl::gen::interval(rng, true)});
    const NSet b = normalize({nsl::gen::interval(rng, true)});
    const NSet img = obslash(a, b);
    const auto s = nsl::testing::h_soundness_failure(right_monad(q(1)), a, b, img);
    const auto c = nsl::testing::h_completeness_failure(right_monad(q(1)), a, b, img);
    CHECK_MESSAGE(!s, s.value_or(""));
    CHECK_MESSAGE(!c, c.value_or(""));
  }
}

TEST_CASE("refutation examples") {
  const NSet half = monad(q(1, 2));
  const RationalFunction eps = inv(1);
  CHECK(refute_infimum(half, q(1, 2), eps) == RefutationResult(Witness{q(1, 2) - inv(1, 2)}));
  CHECK(refute_infimum(half, q(0), eps) == RefutationResult(BetterBound{q(1, 4)}));
  CHECK(refute_infimum(half, q(1, 2) - inv(1), eps) == RefutationResult(Witness{q(1, 2) - inv(1, 3)}));
  CHECK(refute_supremum(half, q(1, 2), eps) == RefutationResult(Witness{q(1, 2) + inv(1, 2)}));
  CHECK(refute_supremum(half, q(1), eps) == RefutationResult(BetterBound{q(3, 4)}));
  const auto r = refute_supremum(monad(q(0)), inv(1), eps);
  REQUIRE(std::holds_alternative<Witness>(r));
  CHECK(monad(q(0)).contains(std::get<Witness>(r).point));
  CHECK(std::get<Witness>(r).point > inv(1));
  CHECK(to_string(refute_infimum(half, q(1, 2), eps)) == "Witness(1/2 - 2/X)");

  CHECK_THROWS_AS(refute_infimum(half, q(0), q(1)), std::invalid_argument);
  CHECK_THROWS_AS(refute_infimum(unit_interval(), q(0), eps), std::invalid_argument);
}

TEST_CASE("no candidate survives as an extremum") {
  for (const auto& a : {q(0), q(1, 2), q(1), q(-3, 7)}) {
    const NSet s = monad(a);
    std::vector<RationalFunction> candidates = {a};
    for (const auto& d : {q(1), q(1, 3), inv(1), inv(1, 5), inv(2)}) {
      candidates.push_back(a + d);
      candidates.push_back(a - d);
    }
    for (const auto& eps : {inv(1), inv(2, 3)}) {
      for (const auto& l : candidates) {
        for (auto which : {Extremum::Infimum, Extremum::Supremum}) {
          const auto r = refute(which, s, l, eps);
          CHECK(verify(which, s, l, r));
        }
      }
    }
  }
}

TEST_CASE("the oracles reject wrong images") {
  const Bilinear f{0, 0, 0, 1};
  const NSet a = closed(q(0), q(1, 2));
  const NSet exact = closed(q(0), q(1, 4));
  CHECK_FALSE(nsl::testing::soundness_failure(f, a, a, exact));
  CHECK_FALSE(nsl::testing::completeness_failure(f, a, a, exact));
  // Too small: the corner 1/4 is attained.
  CHECK(nsl::testing::soundness_failure(f, a, a, interval(q(0), BoundKind::closed(), q(1, 4), BoundKind::open())));
  // Too large, by a whole monad and by an appreciable amount.
  CHECK(nsl::testing::completeness_failure(f, a, a, interval(q(0), BoundKind::closed(), q(1, 4), BoundKind::rough())));
  CHECK(nsl::testing::completeness_failure(f, a, a, closed(q(0), q(1, 2))));
  // Second-order products: M_1 * M_1 is M_2, not M_1.
  CHECK(nsl::testing::completeness_failure(f, monad(q(0)), monad(q(0)), monad(q(0))));
}
