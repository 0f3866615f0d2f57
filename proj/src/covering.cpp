#include "iomdin/covering.hpp"


namespace iomdin {

CoveringReport check_data(const MultiGraph& base, const CoveringData& data,
                          const std::vector<int>& flagged) {
  CoveringReport r;
  if (static_cast<int>(data.vertex.size()) != base.vertex_count() ||
      static_cast<int>(data.edge.size()) != base.edge_count()) {
    r.violations.push_back("covering data does not match the base graph");
    r.unique = false;
    return r;
  }
  for (int v = 0; v < base.vertex_count(); ++v) {
    if (data.vertex[v] < 1) {
      r.violations.push_back("vertex " + std::to_string(v) + ": n_v must be positive");
    }
  }
  r.edge_degree.assign(base.edge_count(), 0);
  for (int id = 0; id < base.edge_count(); ++id) {
    const Edge& e = base.edge(id);
    const Int ne = data.edge[id];
    const Int n1 = data.vertex[e.a];
    const Int n2 = data.vertex[e.b];
    if (ne < 1) {
      r.violations.push_back("edge " + std::to_string(id) + ": n_e must be positive");
      continue;
    }
    if (n1 < 1 || n2 < 1) continue;
    const Int l = lcm(n1, n2);
    if (ne % l != 0) {
      r.violations.push_back("edge " + std::to_string(id) + ": lcm(" + std::to_string(n1) +
                             "," + std::to_string(n2) + ") = " + std::to_string(l) +
                             " does not divide n_e = " + std::to_string(ne));
      continue;
    }
    if (e.is_loop() && n1 != 1) {
      r.violations.push_back("edge " + std::to_string(id) + ": loop at a vertex with n_v = " +
                             std::to_string(n1));
      continue;
    }
    r.edge_degree[id] = ne / l;
  }
  for (int v : flagged) {
    if (v < 0 || v >= base.vertex_count() || data.vertex[v] != 1) r.unique = false;
  }
  return r;
}

CoveredGraph standard_covering(const MultiGraph& base, const CoveringData& data) {
  const CoveringReport report = check_data(base, data);
  if (!report.valid()) throw DomainError("invalid covering data: " + report.violations.front());

  CoveredGraph c;
  c.offset.resize(base.vertex_count());
  for (int v = 0; v < base.vertex_count(); ++v) {
    c.offset[v] = c.graph.vertex_count();
    for (Int i = 0; i < data.vertex[v]; ++i) {
      c.graph.add_vertex();
      c.vertex_base.push_back(v);
      c.vertex_sheet.push_back(i);
    }
  }
  for (int id = 0; id < base.edge_count(); ++id) {
    const Edge& e = base.edge(id);
    for (Int j = 0; j < data.edge[id]; ++j) {
      c.graph.add_edge(c.lift(e.a, j % data.vertex[e.a]), c.lift(e.b, j % data.vertex[e.b]));
      c.edge_base.push_back(id);
      c.edge_sheet.push_back(j);
    }
  }
  return c;
}

Int component_count(const MultiGraph& tree, const CoveringData& data) {
  if (!tree.is_tree()) throw std::invalid_argument("component_count: base is not a tree");
  Int g = 0;
  for (Int n : data.vertex) g = gcd(g, n);
  return g;
}

bool verify_local_degrees(const MultiGraph& base, const CoveringData& data,
                          const CoveredGraph& cover, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  const MultiGraph& g = cover.graph;
  if (static_cast<int>(cover.edge_base.size()) != g.edge_count()) {
    return fail("edge projection has the wrong size");
  }
  // ends[e * lifts + x]: lifted ends of base edge e at lift x
  const int lifts = g.vertex_count();
  std::vector<Int> ends(static_cast<size_t>(base.edge_count()) * lifts, 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& le = g.edge(id);
    const int eb = cover.edge_base[id];
    const Edge& be = base.edge(eb);
    const int pa = cover.vertex_base[le.a];
    const int pb = cover.vertex_base[le.b];
    if (!((pa == be.a && pb == be.b) || (pa == be.b && pb == be.a))) {
      return fail("lifted edge " + std::to_string(id) + " does not project onto its base edge");
    }
    ++ends[static_cast<size_t>(eb) * lifts + le.a];
    ++ends[static_cast<size_t>(eb) * lifts + le.b];
  }
  for (int id = 0; id < base.edge_count(); ++id) {
    const Edge& be = base.edge(id);
    for (int v : {be.a, be.b}) {
      const Int expected = (be.is_loop() ? 2 : 1) * data.edge[id] / data.vertex[v];
      for (Int i = 0; i < data.vertex[v]; ++i) {
        const Int got = ends[static_cast<size_t>(id) * lifts + cover.lift(v, i)];
        if (got != expected) {
          return fail("lift (" + std::to_string(v) + "," + std::to_string(i) + ") meets " +
                      std::to_string(got) + " lifts of edge " + std::to_string(id) +
                      ", expected " + std::to_string(expected));
        }
      }
      if (be.is_loop()) break;
    }
  }
  return true;
}

}  // namespace iomdin
