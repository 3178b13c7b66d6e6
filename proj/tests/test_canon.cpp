#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace gkmk;
using gkmk::testutil::Rng;

TEST_CASE("CP1 closed forms") {
  GkmGraph g = gen_cpn(1);
  MorseOrientation mo = orient(g, {g.xi, {}});

  KClass ta = tau(g, mo, "P0");
  CHECK(ta.at("P0") == CharElem::one(1));
  CHECK(ta.at("P1") == CharElem::monomial(1, {-1}));

  KClass tb = tau(g, mo, "P1");
  CHECK(tb.at("P0").is_zero());
  CHECK(tb.at("P1") == CharElem::one(1) - CharElem::monomial(1, {-1}));
}

TEST_CASE("extreme vertices have closed forms") {
  for (std::size_t m : {2u, 3u}) {
    GkmGraph g = gen_cpn(m);
    MorseOrientation mo = orient(g, {g.xi, {}});
    const std::string top = mo.order.back(), bot = mo.order.front();

    // at the maximum all edges descend: indicator times the Euler factor
    KClass tt = tau(g, mo, top);
    for (const auto& v : g.vertices) {
      if (v == top)
        CHECK(tt.at(v) == lambda_minus(g, mo, top));
      else
        CHECK(tt.at(v).is_zero());
    }
    // at the minimum the Euler factor is empty
    CHECK(tau(g, mo, bot).at(bot) == CharElem::one(g.rank));
  }
}

TEST_CASE("basis carries the Kronecker property and triangular support") {
  GkmGraph g = gen_cpn(2);
  MorseOrientation mo = orient(g, {g.xi, {}});
  CanonicalBasis cb = basis(g, mo);  // internally checks the delta matrix
  CHECK(cb.taus.size() == 3);

  // diagonal entries are the Euler factors
  for (const auto& q : g.vertices) CHECK(cb.taus.at(q).at(q) == lambda_minus(g, mo, q));

  // the unit resolves as the sum of the basis classes
  KClass s = kclass_zero(g);
  for (const auto& [p, t] : cb.taus)
    for (const auto& v : g.vertices) s[v] += t.at(v);
  for (const auto& v : g.vertices) CHECK(s.at(v) == CharElem::one(2));
}

TEST_CASE("decomposition") {
  GkmGraph g = gen_cpn(2);
  MorseOrientation mo = orient(g, {g.xi, {}});
  CanonicalBasis cb = basis(g, mo);

  // a basis class decomposes as its own indicator
  auto c1 = decompose(g, mo, cb, cb.taus.at("P1"));
  for (const auto& v : g.vertices)
    CHECK(c1.at(v) == (v == "P1" ? CharElem::one(2) : CharElem::zero(2)));

  // the unit class has all coefficients 1
  auto c2 = decompose(g, mo, cb, kclass_constant(g, CharElem::one(2)));
  for (const auto& v : g.vertices) CHECK(c2.at(v) == CharElem::one(2));

  // twisting by a non-invariant monomial: reconstruction is exact even
  // though the coefficients need not be the twisted indicator
  Rng rng(1301);
  for (int i = 0; i < 5; ++i) {
    KClass a = testutil::rand_class(rng, g, cb);
    auto co = decompose(g, mo, cb, a);
    KClass rec = kclass_zero(g);
    for (const auto& [p, c] : co)
      for (const auto& v : g.vertices) rec[v] += c * cb.taus.at(p).at(v);
    for (const auto& v : g.vertices) CHECK(rec.at(v) == a.at(v));
  }
  KClass xa = kclass_zero(g);
  CharElem tw = CharElem::monomial(2, {1, 0});  // pairs nonzero with xi
  for (const auto& v : g.vertices) xa[v] = tw * cb.taus.at("P1").at(v);
  auto c3 = decompose(g, mo, cb, xa);
  KClass rec = kclass_zero(g);
  for (const auto& [p, c] : c3)
    for (const auto& v : g.vertices) rec[v] += c * cb.taus.at(p).at(v);
  for (const auto& v : g.vertices) CHECK(rec.at(v) == xa.at(v));
}

TEST_CASE("transfer operator") {
  GkmGraph g = gen_cpn(1);
  MorseOrientation mo = orient(g, {g.xi, {}});
  auto sb = make_split_basis(g.xi);
  PathStep e{0, "P0", "P1"};

  ZHatForm one;
  one.basis = sb;
  one.add_term(Int(0), Fraction::one(0));
  ZHatForm q1 = q_e(g, mo, e, one);
  // Q_e(1) = x^{-1}
  REQUIRE(q1.ck.size() == 1);
  CHECK(q1.ck.begin()->first == -1);
  CHECK(q1.ck.begin()->second == Fraction::one(0));

  ZHatForm zero;
  zero.basis = sb;
  CHECK(q_e(g, mo, e, zero).is_zero());

  // the Euler factor of the target has no proper part
  ZHatForm lam = to_hat(z_split(lambda_minus(g, mo, "P1"), sb));
  CHECK(q_e(g, mo, e, lam).is_zero());
}

TEST_CASE("path formula matches the recursion") {
  GkmGraph g1 = gen_cpn(1);
  MorseOrientation mo1 = orient(g1, {g1.xi, {}});
  CHECK(tau_via_paths(g1, mo1, "P0", "P1", 16) == CharElem::monomial(1, {-1}));
  CHECK(tau_via_paths(g1, mo1, "P0", "P0", 16) == CharElem::one(1));  // minimum
  CHECK(tau_via_paths(g1, mo1, "P1", "P1", 16) ==
        CharElem::one(1) - CharElem::monomial(1, {-1}));

  GkmGraph g2 = gen_cpn(2);
  MorseOrientation mo2 = orient(g2, {g2.xi, {}});
  KClass t0 = tau(g2, mo2, "P0");
  // two-path sum; certified against the recursion inside the call
  CHECK(tau_via_paths(g2, mo2, "P0", "P2", 16) == t0.at("P2"));
}

TEST_CASE("grassmannian pipelines agree on small data") {
  GkmGraph g = gen_grassmannian(1, 2);
  MorseOrientation global = orient(g, {g.xi, {}});
  MorseOrientation circles = orient(g, {g.xi, g.vertex_circles});
  CanonicalBasis cb1 = basis(g, global);
  CanonicalBasis cb2 = basis(g, circles);
  // rank-1 circle data coincides with the global pipeline here
  for (const auto& v : g.vertices) {
    CHECK(cb1.taus.at(v).at(v) == lambda_minus(g, global, v));
    CHECK(cb2.taus.at(v).at(v) == lambda_minus(g, circles, v));
  }
}
