#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace gkmk;
using gkmk::testutil::Rng;

TEST_CASE("validation of the model fixtures") {
  GkmGraph cp1 = gen_cpn(1);
  ValidationReport r1 = validate_graph(cp1);
  CHECK(r1.ok());
  CHECK(r1.valence == 1);

  GkmGraph cp2 = gen_cpn(2);
  ValidationReport r2 = validate_graph(cp2);
  CHECK(r2.ok());
  CHECK(r2.valence == 2);

  // duplicating a label at a vertex breaks pairwise independence
  GkmGraph bad = cp2;
  bad.edges[1].label_at_from = bad.edges[0].label_at_from;
  ValidationReport rb = validate_graph(bad);
  REQUIRE_FALSE(rb.ok());
  CHECK(rb.issues.front().find("PairwiseDependence") != std::string::npos);
}

TEST_CASE("orientation") {
  GkmGraph cp1 = gen_cpn(1);
  MorseOrientation mo = orient(cp1, {cp1.xi, {}});
  CHECK(mo.order == std::vector<std::string>{"P0", "P1"});
  CHECK(mo.ascending_from_to[0]);

  GkmGraph cp2 = gen_cpn(2);
  MorseOrientation mo2 = orient(cp2, {cp2.xi, {}});
  CHECK(mo2.order == std::vector<std::string>{"P0", "P1", "P2"});
  const auto& ds = mo2.descending.at("P2");
  REQUIRE(ds.size() == 2);
  // descending at P2: -eps2 (k=-2) toward P0 and eps1-eps2 (k=-1) toward P1
  CHECK(ds[0].lower == "P0");
  CHECK(ds[0].label == IntVector{0, -1});
  CHECK(ds[0].k == -2);
  CHECK(ds[1].lower == "P1");
  CHECK(ds[1].label == IntVector{1, -1});
  CHECK(ds[1].k == -1);

  CHECK(testutil::throws_code([&] { orient(cp1, {IntVector{0}, {}}); },
                              errc::genericity_violation));

  // positive scaling of the polarization keeps all flags
  MorseOrientation mo3 = orient(cp2, {Int(3) * cp2.xi, {}});
  CHECK(mo3.ascending_from_to == mo2.ascending_from_to);
  CHECK(mo3.order == mo2.order);

  // a vertex circle must pair negatively with every descending label
  GkmGraph gr = gen_grassmannian(1, 2);
  Polarization bad{gr.xi, gr.vertex_circles};
  bad.vertex_xi.at("2") = -bad.vertex_xi.at("2");  // "2" is the maximum under xi=(0,1)
  CHECK(testutil::throws_code([&] { orient(gr, bad); }, errc::bad_vertex_circle));
}

TEST_CASE("class membership") {
  GkmGraph cp1 = gen_cpn(1);
  CHECK(check_class(cp1, kclass_constant(cp1, CharElem::monomial(1, {2}, 5))).ok);

  KClass t{{"P0", CharElem::one(1)}, {"P1", CharElem::monomial(1, {-1})}};
  CHECK(check_class(cp1, t).ok);

  KClass bad{{"P0", CharElem::one(1)},
             {"P1", CharElem::monomial(1, {-2}) + CharElem::one(1)}};
  ClassCheck cc = check_class(cp1, bad);
  CHECK_FALSE(cc.ok);
  CHECK(cc.witness == "P0-P1");

  // R(G)-linear combinations of valid classes stay valid
  Rng rng(901);
  GkmGraph cp2 = gen_cpn(2);
  MorseOrientation mo2 = orient(cp2, {cp2.xi, {}});
  CanonicalBasis cb = basis(cp2, mo2);
  for (int i = 0; i < 5; ++i) {
    KClass a = testutil::rand_class(rng, cp2, cb);
    CHECK(check_class(cp2, a).ok);
  }
}

TEST_CASE("ascending paths") {
  GkmGraph cp1 = gen_cpn(1);
  MorseOrientation mo1 = orient(cp1, {cp1.xi, {}});
  auto p1 = ascending_paths(cp1, mo1, "P0", "P1", 8);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].size() == 1);

  GkmGraph cp2 = gen_cpn(2);
  MorseOrientation mo2 = orient(cp2, {cp2.xi, {}});
  auto p2 = ascending_paths(cp2, mo2, "P0", "P2", 8);
  CHECK(p2.size() == 2);  // direct edge and through P1

  CHECK(ascending_paths(cp2, mo2, "P2", "P0", 8).empty());
  CHECK(testutil::throws_code([&] { ascending_paths(cp2, mo2, "P0", "P2", 1); },
                              errc::cap_exceeded));
}

TEST_CASE("lambda_minus") {
  GkmGraph cp1 = gen_cpn(1);
  MorseOrientation mo1 = orient(cp1, {cp1.xi, {}});
  CHECK(lambda_minus(cp1, mo1, "P0") == CharElem::one(1));
  CHECK(lambda_minus(cp1, mo1, "P1") == CharElem::one(1) - CharElem::monomial(1, {-1}));

  GkmGraph cp2 = gen_cpn(2);
  MorseOrientation mo2 = orient(cp2, {cp2.xi, {}});
  CharElem expect = (CharElem::one(2) - CharElem::monomial(2, {0, -1})) *
                    (CharElem::one(2) - CharElem::monomial(2, {1, -1}));
  CHECK(lambda_minus(cp2, mo2, "P2") == expect);
}

TEST_CASE("projective space generator") {
  for (std::size_t m = 1; m <= 3; ++m) {
    GkmGraph g = gen_cpn(m);
    ValidationReport r = validate_graph(g);
    CHECK(r.ok());
    CHECK(r.valence == m);
    CHECK(g.vertices.size() == m + 1);
    CHECK(g.edges.size() == m * (m + 1) / 2);
    orient(g, {g.xi, {}});  // orientable with the bundled polarization
  }
}

TEST_CASE("grassmannian generator") {
  GkmGraph g12 = gen_grassmannian(1, 2);
  CHECK(g12.vertices.size() == 2);
  REQUIRE(g12.edges.size() == 1);
  // label at {1}: e_2 - e_1
  CHECK(g12.edges[0].from == "1");
  CHECK(g12.edges[0].label_at_from == IntVector{-1, 1});

  GkmGraph g = gen_grassmannian(2, 4);
  ValidationReport r = validate_graph(g);
  CHECK(r.ok());
  CHECK(g.vertices.size() == 6);
  CHECK(r.valence == 4);
  CHECK(g.edges.size() == 12);

  // torsion-free certificate: every label pairs to -1 with its vertex circle
  for (const auto& v : g.vertices) {
    const IntVector& circ = g.vertex_circles.at(v);
    for (std::size_t e : g.incident(v)) CHECK(dot(g.label_at(e, v), circ) == -1);
  }

  // labels live in the sum-zero sublattice
  for (const auto& e : g.edges) {
    Int s = 0;
    for (const auto& x : e.label_at_from.v) s += x;
    CHECK(s == 0);
  }

  CHECK(testutil::throws_code([] { gen_grassmannian(0, 4); }, errc::bad_parameters));
}
