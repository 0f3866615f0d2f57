#include <algorithm>

#include "iomdin/resgraph.hpp"

namespace iomdin {

namespace {

std::string optional_text(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : std::string("?");
}

// AHU encoding of the subtree hanging from `v` away from `parent`.
std::string encode(const ResGraph& g, const std::vector<std::vector<int>>& adj,
                   const std::vector<std::string>& labels, int v, int parent) {
  std::vector<std::string> children;
  for (int w : adj[v]) {
    if (w != parent) children.push_back(encode(g, adj, labels, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(" + labels[v];
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace

std::string tree_canonical_form(const ResGraph& g) {
  if (!g.topology().is_tree()) {
    throw std::invalid_argument("tree_canonical_form: graph is not a tree");
  }
  const int n = g.vertex_count();
  std::vector<std::vector<Int>> arrow_mults(n);
  for (const ResArrow& a : g.arrows) arrow_mults[a.support].push_back(a.multiplicity.value_or(-1));
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) {
    const ResVertex& w = g.vertices[v];
    auto& am = arrow_mults[v];
    std::sort(am.begin(), am.end());
    std::string arrows;
    for (Int m : am) arrows += (arrows.empty() ? "" : ",") + std::to_string(m);
    labels[v] = optional_text(w.multiplicity) + "|" + std::to_string(w.genus) + "|" +
                optional_text(w.self_intersection) + "|" + arrows;
  }
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  // Centers by repeated leaf removal.
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string form = encode(g, adj, labels, c, -1);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

bool isomorphic_trees(const ResGraph& a, const ResGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.arrows.size() == b.arrows.size() &&
         tree_canonical_form(a) == tree_canonical_form(b);
}

}  // namespace iomdin
