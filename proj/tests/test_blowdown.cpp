#include "doctest.h"

#include "generators.hpp"
#include "iomdin/blowdown.hpp"
#include "iomdin/lattice.hpp"

using namespace iomdin;

namespace {

int vertex(ResGraph& g, const char* name, Int e, Int genus = 0) {
  ResVertex v;
  v.name = name;
  v.self_intersection = e;
  v.genus = genus;
  return g.add_vertex(std::move(v));
}

}  // namespace

TEST_CASE("single contraction joins the two neighbours") {
  ResGraph g;
  const int a = vertex(g, "a", -3);
  const int c = vertex(g, "c", -1);
  const int b = vertex(g, "b", -2);
  g.add_edge(a, c);
  g.add_edge(c, b);
  auto once = blow_down_once(g);
  REQUIRE(once);
  REQUIRE(once->vertex_count() == 2);
  CHECK(once->vertices[0].name == "a");
  CHECK(*once->vertices[0].self_intersection == -2);
  CHECK(*once->vertices[1].self_intersection == -1);
  REQUIRE(once->edge_count() == 1);
  // the fixpoint keeps going: b, then a
  CHECK(blow_down(g).vertex_count() == 0);
}

TEST_CASE("exclusions") {
  ResGraph loop;
  const int v = vertex(loop, "v", -1);
  loop.add_edge(v, v);
  CHECK(blow_down(loop).vertex_count() == 1);

  ResGraph elliptic;
  vertex(elliptic, "e", -1, 1);
  CHECK(blow_down(elliptic).vertex_count() == 1);

  ResGraph star;
  const int c = vertex(star, "c", -1);
  for (const char* n : {"x", "y", "z"}) star.add_edge(c, vertex(star, n, -3));
  CHECK(blow_down(star).vertex_count() == 4);
  const ResGraph aggressive = blow_down(star, BlowDownMode::Aggressive);
  CHECK(aggressive.vertex_count() == 3);
  CHECK(aggressive.edge_count() == 3);
  for (const ResVertex& w : aggressive.vertices) CHECK(*w.self_intersection == -2);

  ResGraph arrows;
  arrows.add_arrow(vertex(arrows, "a", -1), 1);
  CHECK_THROWS_AS(blow_down(arrows), std::invalid_argument);
}

TEST_CASE("double edges become loops") {
  ResGraph g;
  const int a = vertex(g, "a", -4);
  const int c = vertex(g, "c", -1);
  g.add_edge(a, c);
  g.add_edge(a, c);
  const ResGraph out = blow_down(g);
  REQUIRE(out.vertex_count() == 1);
  CHECK(*out.vertices[0].self_intersection == -2);
  CHECK(intersection_matrix(out)(0, 0) == 0);
  CHECK(out.edge_count() == 1);
  CHECK(out.edges[0].is_loop());
}

TEST_CASE("determinant invariance and idempotence on random graphs") {
  gen::Rng rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    const ResGraph plane = strip_embedding(
        gen::random_plane_curve_graph(rng, 1 + static_cast<int>(rng() % 8), 1));
    ResGraph g = plane;
    // decorate: some genus, a few extra curves hanging off
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
      ResVertex w;
      w.self_intersection = -2 - static_cast<Int>(rng() % 3);
      const int v = g.add_vertex(std::move(w));
      g.add_edge(static_cast<int>(rng() % v), v);
    }
    const BigInt before = det_abs(intersection_matrix(g));
    for (BlowDownMode mode : {BlowDownMode::NormalCrossing, BlowDownMode::Aggressive}) {
      const ResGraph out = blow_down(g, mode);
      CHECK(det_abs(intersection_matrix(out)) == before);
      const ResGraph again = blow_down(out, mode);
      CHECK(again.vertex_count() == out.vertex_count());
      CHECK(again.edge_count() == out.edge_count());
    }
    CHECK(blow_down(plane).vertex_count() == 0);
  }
}
