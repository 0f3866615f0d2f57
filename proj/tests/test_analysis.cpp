#include "doctest.h"

#include "generators.hpp"
#include "iomdin/analysis.hpp"
#include "iomdin/fixtures.hpp"

using namespace iomdin;

TEST_CASE("partition of the fixtures") {
  const GammaC cusp = gammac_fixture("cusp");
  const Partition p = partition(cusp);
  CHECK(p.v1.empty());
  CHECK(p.v2.size() == 3);
  REQUIRE(p.gamma1.size() == 1);
  CHECK(p.gamma1[0] == std::vector<int>{cusp.find("A1")});
  REQUIRE(p.gamma2.size() == 1);
  CHECK(p.gamma2[0].vertex_count() == 4);
  CHECK(p.gamma2[0].vertices[3].is_arrowhead());

  const Partition node = partition(gammac_fixture("node"));
  CHECK(node.gamma1.size() == 2);
  CHECK(node.gamma2.size() == 1);

  GammaC flat;
  const int a = flat.add_curve("a", {1, 0, 1});
  const int b = flat.add_curve("b", {1, 0, 1});
  flat.add_edge(a, b, 1);
  flat.add_edge(b, flat.add_arrowhead("x"), 1);
  const Partition fp = partition(flat);
  CHECK(fp.gamma2.empty());
  CHECK(fp.gamma1.size() == 1);
  CHECK(fp.gamma1[0].size() == 3);
}

TEST_CASE("normalization graph G¹") {
  const auto cusp = build_G1(gammac_fixture("cusp"), partition(gammac_fixture("cusp")));
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].convention);
  CHECK(cusp[0].graph.vertex_count() == 1);
  CHECK(cusp[0].graph.arrows.empty());
  const GammaC node = gammac_fixture("node");
  CHECK(build_G1(node, partition(node)).size() == 2);

  GammaC bad;
  bad.add_edge(bad.add_curve("v", {1, 0, 2}), bad.add_arrowhead("x"), 1);
  CHECK_THROWS_AS(build_G1(bad, partition(bad)), DomainError);

  // a V¹ curve meeting V² through a weight-2 edge records a strict transform
  GammaC mixed;
  const int v = mixed.add_curve("v", {1, 0, 1});
  const int w = mixed.add_curve("w", {2, 0, 1});
  mixed.add_edge(v, mixed.add_arrowhead("x"), 1);
  mixed.add_edge(v, w, 2);
  mixed.add_edge(w, mixed.add_arrowhead("y"), 2);
  const auto g1 = build_G1(mixed, partition(mixed));
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].strict_transform_supports.size() == 1);
  CHECK(*g1[0].graph.vertices[0].self_intersection == -1);
}

TEST_CASE("G¹ of the smooth-f family is the plane graph of g") {
  gen::Rng rng(8);
  for (int rep = 0; rep < 40; ++rep) {
    const ResGraph plane = gen::random_plane_curve_graph(rng, 1 + rep % 6, 1 + rep % 3);
    const GammaC g = gen::smooth_f_graph(plane);
    const auto g1 = build_G1(g, partition(g));
    REQUIRE(g1.size() == 1);
    CHECK(isomorphic_trees(g1[0].graph, plane));
    CHECK(chi_correction(g, 7) == 0);
  }
}

TEST_CASE("K_l classes") {
  const Partition p = partition(gammac_fixture("cusp"));
  const KlPartition kl = kl_partition(p.gamma2[0]);
  CHECK(kl.ok());
  REQUIRE(kl.classes.size() == 3);
  for (const KlClass& k : kl.classes) CHECK(k.self_intersections == std::vector<Int>{0});

  GammaC single;
  single.add_curve("a", {2, 0, 3});
  CHECK(kl_partition(single).ok());

  GammaC two;
  two.add_edge(two.add_curve("a", {2, 0, 1}), two.add_curve("b", {2, 1, 1}), 1);
  const KlPartition t = kl_partition(two);
  CHECK(t.ok());
  REQUIRE(t.classes.size() == 1);
  CHECK(t.classes[0].nu == 1);
  CHECK(t.classes[0].self_intersections == std::vector<Int>{-1, -1});

  GammaC irrational;
  irrational.add_edge(irrational.add_curve("a", {2, 0, 1}), irrational.add_curve("b", {2, 0, 2}),
                      1);
  CHECK_FALSE(kl_partition(irrational).ok());

  GammaC elliptic;
  elliptic.add_curve("a", {2, 0, 1}, 1);
  CHECK_FALSE(kl_partition(elliptic).ok());
}

TEST_CASE("quotient and covering data") {
  const Partition p = partition(gammac_fixture("cusp"));
  const KlPartition kl = kl_partition(p.gamma2[0]);
  const Quotient q = quotient_and_data(p.gamma2[0], kl);
  CHECK(q.graph.vertex_count() == 4);
  CHECK(q.graph.is_tree());
  CHECK(q.data.vertex == std::vector<Int>{1, 1, 1, 1});
  CHECK(q.data.edge == std::vector<Int>{1, 1, 1});

  GammaC lone;
  const int v = lone.add_curve("v", {2, 0, 2});
  lone.add_edge(v, lone.add_arrowhead("x", {1, 0, 2}), 2);
  lone.add_edge(v, lone.add_arrowhead("y", {1, 0, 2}), 2);
  const Quotient lq = quotient_and_data(lone, kl_partition(lone));
  CHECK(lq.graph.vertex_count() == 3);
  CHECK(lq.data.vertex[0] == 2);
  const TransversalReport lt = transversal_graph(lone);
  CHECK(lt.d == 2);
  CHECK(lt.branches == 2);
  CHECK(lt.milnor == 1);

  GammaC cyclic;
  const int a = cyclic.add_curve("a", {2, 0, 1});
  const int b = cyclic.add_curve("b", {2, 0, 1});
  cyclic.add_edge(a, b, 2);
  cyclic.add_edge(a, b, 2);
  CHECK_THROWS_WITH_AS(quotient_and_data(cyclic, kl_partition(cyclic)),
                       doctest::Contains("cts1 violated"), DomainError);
}

TEST_CASE("transversal graphs") {
  const Partition p = partition(gammac_fixture("cusp"));
  const TransversalReport t = transversal_graph(p.gamma2[0]);
  CHECK(t.d == 1);
  CHECK(t.milnor == 2);
  CHECK(t.branches == 1);
  CHECK(isomorphic_trees(t.graph, plane_curve_fixture("cusp")));

  const TransversalReport n = transversal_graph(partition(gammac_fixture("node")).gamma2[0]);
  CHECK(n.d == 1);
  CHECK(n.milnor == 1);
  CHECK(n.graph.vertex_count() == 1);
  CHECK(n.graph.arrows.size() == 2);

  // n_w = 1 with an arrowhead of ν = 2: the covering is not the identity
  GammaC twisted;
  const int x = twisted.add_curve("x", {2, 0, 1});
  const int y = twisted.add_curve("y", {2, 1, 2});
  const int z = twisted.add_curve("z", {2, 0, 1});
  twisted.add_edge(x, y, 1);
  twisted.add_edge(y, z, 1);
  twisted.add_edge(y, twisted.add_arrowhead("a", {1, 1, 2}), 2);
  const TransversalReport tw = transversal_graph(twisted);
  CHECK(tw.quotient.graph.vertex_count() == 2);
  CHECK(tw.quotient.data.vertex == std::vector<Int>{1, 2});
  CHECK(tw.d == 1);
  REQUIRE(tw.graph.vertex_count() == 1);
  CHECK(tw.graph.arrows.size() == 2);
  CHECK(tw.branches == 2);
  CHECK(tw.arrow_degree == std::vector<Int>{2});
  CHECK(tw.kl.classes[0].self_intersections == std::vector<Int>{-2, -1, -2});
}

TEST_CASE("chi correction") {
  for (Int k = 1; k <= 12; ++k) {
    CHECK(chi_correction(gammac_fixture("cusp"), k) == 2 * k);
    CHECK(chi_correction(gammac_fixture("node"), k) == k);
  }
  GammaC flat;
  flat.add_edge(flat.add_curve("a", {1, 0, 1}), flat.add_arrowhead("x"), 1);
  CHECK(chi_correction(flat, 5) == 0);
}

TEST_CASE("plane-curve conversion") {
  CHECK(serialize_gammac(from_plane_curve_graph(plane_curve_fixture("cusp"))) ==
        serialize_gammac(gammac_fixture("cusp")));
  const GammaC smooth = from_plane_curve_graph(plane_curve_fixture("smooth"));
  REQUIRE(smooth.vertex_count() == 2);
  CHECK(smooth.vertices[0].triple == Triple{1, 0, 1});
  CHECK(smooth.vertices[1].is_arrowhead());
  CHECK(smooth.edges[0].weight == 1);
  CHECK(partition(smooth).gamma2.empty());
  for (const GcEdge& e : gammac_fixture("tacnode").edges) CHECK(e.weight == 2);

  ResGraph cyc = plane_curve_fixture("node");
  cyc.add_edge(0, 0);
  CHECK_THROWS_AS(from_plane_curve_graph(cyc), std::invalid_argument);
}

TEST_CASE("round trip through the transversal graph") {
  gen::Rng rng(12);
  for (int rep = 0; rep < 150; ++rep) {
    const ResGraph g = gen::random_plane_curve_graph(rng, 1 + rep % 8, 1 + rep % 4);
    const Analysis a = analyze(from_plane_curve_graph(g));
    REQUIRE(a.transversal.size() == 1);
    CHECK(a.transversal[0].d == 1);
    CHECK(isomorphic_trees(a.transversal[0].graph, g));
    CHECK(a.chi_coefficient == milnor_from_plane_graph(g));
    CHECK(a.g1.size() == g.arrows.size());
  }
}

TEST_CASE("structural validation surfaces analysis failures") {
  GammaC cyclic;
  const int a = cyclic.add_curve("a", {2, 0, 1});
  const int b = cyclic.add_curve("b", {2, 0, 1});
  cyclic.add_edge(a, b, 2);
  cyclic.add_edge(a, b, 2);
  cyclic.add_edge(a, cyclic.add_arrowhead("x"), 2);
  CHECK(validate(cyclic).ok());
  const ValidationReport r = validate_structure(cyclic);
  CHECK_FALSE(r.ok());
  CHECK(r.has("structure"));
  CHECK(validate_structure(gammac_fixture("cusp")).ok());
}
