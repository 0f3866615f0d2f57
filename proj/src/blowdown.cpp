#include "iomdin/blowdown.hpp"

#include <map>
#include <stdexcept>

namespace iomdin {

namespace {

int find_contractible(const ResGraph& g, BlowDownMode mode) {
  const auto loops = g.loop_counts();
  const auto val = g.valences();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const ResVertex& w = g.vertices[v];
    if (w.genus != 0 || w.self_intersection != -1 || loops[v] != 0) continue;
    if (mode == BlowDownMode::NormalCrossing && val[v] > 2) continue;
    return v;
  }
  return -1;
}

ResGraph contract(const ResGraph& g, int p) {
  std::map<int, Int> hits;  // neighbor -> number of edges to p
  for (const Edge& e : g.edges) {
    if (e.a == p) ++hits[e.b];
    else if (e.b == p) ++hits[e.a];
  }

  ResGraph out;
  std::vector<int> index(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == p) continue;
    index[v] = out.add_vertex(g.vertices[v]);
  }
  for (const Edge& e : g.edges) {
    if (e.a == p || e.b == p) continue;
    out.add_edge(index[e.a], index[e.b]);
  }
  for (const auto& [u, c] : hits) {
    ResVertex& w = out.vertices[index[u]];
    // the diagonal gains c²: c from e, the rest from the new loops
    *w.self_intersection += c;
    for (Int i = 0; i < c * (c - 1) / 2; ++i) out.add_edge(index[u], index[u]);
  }
  for (auto it = hits.begin(); it != hits.end(); ++it) {
    for (auto jt = std::next(it); jt != hits.end(); ++jt) {
      for (Int i = 0; i < it->second * jt->second; ++i) {
        out.add_edge(index[it->first], index[jt->first]);
      }
    }
  }
  return out;
}

void require_plain(const ResGraph& g) {
  if (!g.arrows.empty()) throw std::invalid_argument("blow_down expects a graph without arrows");
  for (const ResVertex& w : g.vertices) {
    if (!w.self_intersection) {
      throw DomainError("vertex " + w.name + " has no self-intersection");
    }
  }
}

}  // namespace

std::optional<ResGraph> blow_down_once(const ResGraph& g, BlowDownMode mode) {
  require_plain(g);
  const int p = find_contractible(g, mode);
  if (p < 0) return std::nullopt;
  return contract(g, p);
}

ResGraph blow_down(ResGraph g, BlowDownMode mode) {
  require_plain(g);
  for (int p = find_contractible(g, mode); p >= 0; p = find_contractible(g, mode)) {
    g = contract(g, p);
  }
  return g;
}

}  // namespace iomdin
