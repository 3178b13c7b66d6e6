#include <catch2/catch_amalgamated.hpp>

#include "gkmk/cutspace.hpp"
#include "test_util.hpp"

using namespace gkmk;
using gkmk::testutil::Rng;

TEST_CASE("building cut models") {
  CutSpace c1 = build_cut_space(1, {IntVector{-1}}, IntVector{1});
  REQUIRE(c1.m() == 1);
  CHECK(c1.points[0].kappa == 1);  // trivial structure group

  CutSpace c2 = build_cut_space(2, {IntVector{0, -1}, IntVector{1, -1}}, IntVector{1, 2});
  CHECK(c2.points[0].k == -2);
  CHECK(c2.points[1].k == -1);
  CHECK(c2.points[0].kappa == 2);
  CHECK(c2.K == 2);

  // positive pairings are routed to the general entry point
  CHECK(testutil::throws_code(
      [] { build_cut_space(2, {IntVector{1, 0}, IntVector{0, 1}}, IntVector{1, 1}); },
      errc::mixed_signs));
  CHECK_NOTHROW(build_cut_space_general(2, {IntVector{1, 0}, IntVector{0, 1}}, IntVector{1, 1}));

  // dependent weights have no isolated-fixed-point model
  CHECK(testutil::throws_code(
      [] { build_cut_space(1, {IntVector{-1}, IntVector{-2}}, IntVector{1}); },
      errc::dependent_weights));
}

TEST_CASE("gysin invariant part") {
  CutSpace cs = build_cut_space(2, {IntVector{0, -1}, IntVector{1, -1}}, IntVector{1, 2});
  const CutPoint& pt = cs.points[0];  // alpha = (0,-1), k = -2

  // the class of (lam, 0) is the pullback of a character
  CharElem a(3, pt.lat);
  a.add_term(IntVector{2, 1, 0}, 1);
  CHECK(gysin_invariant_part(a, 2) == CharElem::monomial(2, {2, 1}));

  // the bare cut character is not invariant when |k| = 2
  CharElem z(3, pt.lat);
  z.add_term(IntVector{0, 0, 1}, 1);
  CHECK(gysin_invariant_part(z, 2).is_zero());

  // its square descends with one alpha-shift
  CharElem z2(3, pt.lat);
  z2.add_term(IntVector{0, 0, 2}, 1);
  CHECK(gysin_invariant_part(z2, 2) == CharElem::monomial(2, pt.alpha));
}

TEST_CASE("twists fix invariant elements") {
  CutSpace cs = build_cut_space(2, {IntVector{0, -1}, IntVector{1, -1}}, IntVector{1, 2});
  const CutPoint& pt = cs.points[0];
  CharElemT<CycInt> inv(3, pt.lat);
  inv.add_term(IntVector{1, 0, 0}, CycInt(2));   // c-component 0
  inv.add_term(IntVector{0, 1, 2}, CycInt(-1));  // c-component 2, divisible by |k|
  for (unsigned s = 1; s < pt.kappa; ++s) CHECK(twist_sigma(inv, cs, pt, s) == inv);
}

TEST_CASE("orbifold index sanity values") {
  // CP1 model: ind(1) = 1 and the twisted class (1, x^alpha) has index 0
  CutSpace cs = build_cut_space(1, {IntVector{-1}}, IntVector{1});
  CutDelta one = cut_delta_from_restrictions(cs, {CharElem::one(1)}, CharElem::one(1));
  CHECK(orbifold_index(cs, one) == CharElem::one(1));
  CutDelta tw = cut_delta_from_restrictions(cs, {CharElem::one(1)},
                                            CharElem::monomial(1, IntVector{-1}));
  CHECK(orbifold_index(cs, tw).is_zero());

  // weighted projective line with T-weights (-2, -1): one Z/2 chart
  CutSpace td = build_cut_space(1, {IntVector{-2}}, IntVector{1});
  CHECK(td.points[0].kappa == 2);
  CutDelta tone = cut_delta_from_restrictions(td, {CharElem::one(1)}, CharElem::one(1));
  CHECK(orbifold_index(td, tone) == CharElem::one(1));

  // CP2 cut model (the descending data of the top vertex)
  CutSpace c2 = build_cut_space(2, {IntVector{0, -1}, IntVector{1, -1}}, IntVector{1, 2});
  CutDelta o2 = cut_delta_from_restrictions(c2, {CharElem::one(2), CharElem::one(2)},
                                            CharElem::one(2));
  CHECK(orbifold_index(c2, o2) == CharElem::one(2));

  // delta = 0
  CutDelta z2 = cut_delta_from_restrictions(c2, {CharElem::zero(2), CharElem::zero(2)},
                                            CharElem::zero(2));
  CHECK(orbifold_index(c2, z2).is_zero());
}

TEST_CASE("index of the unit is 1 on random models") {
  Rng rng(1401);
  int done = 0;
  for (int iter = 0; iter < 200 && done < 12; ++iter) {
    std::size_t n = 1 + iter % 3;
    IntVector xi(n);
    xi[0] = 1;
    for (std::size_t j = 1; j < n; ++j) xi[j] = testutil::rand_int(rng, 0, 2);
    std::size_t m = 1 + iter % 3;
    std::vector<IntVector> w;
    int guard = 0;
    while (w.size() < m && guard++ < 200) {
      IntVector c = testutil::rand_nonzero_vec(rng, n, -2, 2);
      if (dot(c, xi) == 0) continue;
      if (dot(c, xi) > 0) c = -c;
      bool dep = false;
      for (const auto& p : w) dep = dep || pairwise_dependent(p, c);
      if (!dep) w.push_back(c);
    }
    if (w.size() < m) continue;
    CutSpace cs = build_cut_space(n, w, xi);
    std::vector<CharElem> pts(m, CharElem::one(n));
    CutDelta d = cut_delta_from_restrictions(cs, pts, CharElem::one(n));
    CHECK(orbifold_index(cs, d) == CharElem::one(n));
    ++done;
  }
  CHECK(done == 12);
}

TEST_CASE("general index with mixed signs") {
  // r = 0 coincides with orbifold_index
  CutSpace cs = build_cut_space_general(1, {IntVector{-1}}, IntVector{1});
  CutDelta one = cut_delta_from_restrictions(cs, {CharElem::one(1)}, CharElem::one(1));
  CHECK(index_general(cs, one) == orbifold_index(cs, one));

  // CP1 with the positive weight: the sign-and-twist reduction gives 1
  CutSpace cp = build_cut_space_general(1, {IntVector{1}}, IntVector{1});
  CutDelta onep = cut_delta_from_restrictions(cp, {CharElem::one(1)}, CharElem::one(1));
  CHECK(index_general(cp, onep) == CharElem::one(1));

  CutDelta zp = cut_delta_from_restrictions(cp, {CharElem::zero(1)}, CharElem::zero(1));
  CHECK(index_general(cp, zp).is_zero());

  // two positive pairings: the structure sheaf still has index 1
  CutSpace c2 = build_cut_space_general(2, {IntVector{1, 0}, IntVector{0, 1}}, IntVector{1, 1});
  CutDelta o2 = cut_delta_from_restrictions(c2, {CharElem::one(2), CharElem::one(2)},
                                            CharElem::one(2));
  CHECK(index_general(c2, o2) == CharElem::one(2));
}

TEST_CASE("localization oracle agrees with the engine") {
  Rng rng(1402);
  GkmGraph g = gen_cpn(2);
  MorseOrientation mo = orient(g, {g.xi, {}});
  CanonicalBasis cb = basis(g, mo);
  for (int i = 0; i < 4; ++i) {
    KClass a = testutil::rand_class(rng, g, cb);
    for (const auto& v : g.vertices)
      CHECK(oracle_local_index(g, mo, a, v) == local_index(g, mo, a, v));
  }
}
