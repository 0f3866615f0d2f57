#include "iomdin/fixtures.hpp"

#include <stdexcept>

#include "iomdin/analysis.hpp"

namespace iomdin {

namespace {

int curve(ResGraph& g, const char* name, Int m, Int e) {
  ResVertex v;
  v.name = name;
  v.multiplicity = m;
  v.self_intersection = e;
  return g.add_vertex(std::move(v));
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"node", "cusp", "three-lines", "tacnode", "smooth"};
}

ResGraph plane_curve_fixture(std::string_view name) {
  ResGraph g;
  if (name == "node") {
    // x² + y²
    const int e = curve(g, "E1", 2, -1);
    g.add_arrow(e, 1, "A1");
    g.add_arrow(e, 1, "A2");
  } else if (name == "cusp") {
    // x² + y³
    const int e1 = curve(g, "E1", 2, -3);
    const int e2 = curve(g, "E2", 3, -2);
    const int e3 = curve(g, "E3", 6, -1);
    g.add_edge(e3, e1);
    g.add_edge(e3, e2);
    g.add_arrow(e3, 1, "A1");
  } else if (name == "three-lines" || name == "d4") {
    // x³ - x y²
    const int e = curve(g, "E1", 3, -1);
    g.add_arrow(e, 1, "A1");
    g.add_arrow(e, 1, "A2");
    g.add_arrow(e, 1, "A3");
  } else if (name == "tacnode") {
    // y² - x⁴
    const int e1 = curve(g, "E1", 2, -2);
    const int e2 = curve(g, "E2", 4, -1);
    g.add_edge(e1, e2);
    g.add_arrow(e2, 1, "A1");
    g.add_arrow(e2, 1, "A2");
  } else if (name == "smooth") {
    const int e = curve(g, "E1", 1, -1);
    g.add_arrow(e, 1, "A1");
  } else {
    throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
  }
  return g;
}

GammaC gammac_fixture(std::string_view name) {
  return from_plane_curve_graph(plane_curve_fixture(name));
}

}  // namespace iomdin
