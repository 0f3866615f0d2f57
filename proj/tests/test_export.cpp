#include "doctest.h"

#include "iomdin/export.hpp"
#include "iomdin/fixtures.hpp"
#include "iomdin/gammac.hpp"
#include "iomdin/pipeline.hpp"

using namespace iomdin;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("empty graph") {
  CHECK(to_dot(ResGraph{}) == "graph G {\n}\n");
  const auto j = nlohmann::json::parse(export_graph(ResGraph{}, "json"));
  CHECK(j["vertices"].empty());
  CHECK(j["edges"].empty());
}

TEST_CASE("E8 export") {
  const Resolution r = resolve(gammac_fixture("cusp"), 5);
  const std::string dot = export_graph(r.surface, "dot");
  CHECK(count(dot, "label=") == 8);
  CHECK(count(dot, " -- ") == 7);
  CHECK(dot.find("[0] -2") != std::string::npos);
  CHECK(export_graph(r.surface, "dot") == dot);
  const auto j = to_json(r.embedded);
  CHECK(j["vertices"].size() == 11);
  CHECK(j["arrowheads"].size() == 1);
}

TEST_CASE("loops and unknown formats") {
  ResGraph g;
  ResVertex v;
  v.self_intersection = -1;
  g.add_vertex(v);
  g.add_edge(0, 0);
  CHECK(to_dot(g).find("\"w0\" -- \"w0\"") != std::string::npos);
  CHECK_THROWS_AS(export_graph(g, "svg"), std::invalid_argument);
}
