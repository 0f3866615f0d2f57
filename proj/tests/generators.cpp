#include "generators.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "iomdin/analysis.hpp"

namespace gen {

using namespace iomdin;

MultiGraph random_tree(Rng& rng, int n) {
  MultiGraph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        g.add_edge(v, c);
        --degree[v];
        --degree[c];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

namespace {

// Canonical string of a rooted unlabeled tree given as parent links.
std::string rooted_form(const std::vector<std::vector<int>>& children, int v) {
  std::vector<std::string> parts;
  for (int c : children[v]) parts.push_back(rooted_form(children, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

std::string free_form(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::string best;
  const auto adj = g.adjacency();
  for (int root = 0; root < n; ++root) {
    std::vector<std::vector<int>> children(n);
    std::vector<int> stack{root}, parent(n, -1);
    std::vector<bool> seen(n, false);
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, _] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        children[v].push_back(w);
        stack.push_back(w);
      }
    }
    std::string f = rooted_form(children, root);
    if (best.empty() || f < best) best = f;
  }
  return best;
}

}  // namespace

std::vector<MultiGraph> all_trees(int n) {
  if (n == 1) return {MultiGraph(1)};
  std::vector<MultiGraph> out;
  std::set<std::string> seen;
  // Every tree on n vertices is a tree on n - 1 vertices plus a leaf.
  for (const MultiGraph& t : all_trees(n - 1)) {
    for (int v = 0; v < n - 1; ++v) {
      MultiGraph g(n);
      for (const Edge& e : t.edges()) g.add_edge(e.a, e.b);
      g.add_edge(v, n - 1);
      if (seen.insert(free_form(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

CoveringData random_data(Rng& rng, const MultiGraph& g, int max_v, int max_e) {
  CoveringData d;
  std::uniform_int_distribution<int> pick(1, max_v);
  for (int v = 0; v < g.vertex_count(); ++v) d.vertex.push_back(pick(rng));
  for (const Edge& e : g.edges()) {
    const Int l = lcm(d.vertex[e.a], d.vertex[e.b]);
    const Int top = std::max<Int>(1, max_e / l);
    std::uniform_int_distribution<Int> mult(1, top);
    d.edge.push_back(l * mult(rng));
  }
  return d;
}

namespace {

// Solves A x = b exactly for a nonsingular A.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const size_t n = b.size();
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (a[p][k] == 0) ++p;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

ResGraph random_plane_curve_graph(Rng& rng, int blowups, int branches) {
  for (int attempt = 1;; ++attempt) {
    // a single branch may be unreachable for this many blow-ups; two always work
    if (attempt % 64 == 0 && branches < 2) ++branches;
    std::vector<Int> self{-1};
    std::vector<std::pair<int, int>> edges;
    for (int step = 1; step < blowups; ++step) {
      const int fresh = static_cast<int>(self.size());
      std::uniform_int_distribution<int> coin(0, 2);
      if (!edges.empty() && coin(rng) == 0) {
        std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
        const size_t i = pick(rng);
        const auto [a, b] = edges[i];
        edges.erase(edges.begin() + static_cast<long>(i));
        --self[a];
        --self[b];
        edges.push_back({a, fresh});
        edges.push_back({b, fresh});
      } else {
        std::uniform_int_distribution<int> pick(0, fresh - 1);
        const int a = pick(rng);
        --self[a];
        edges.push_back({a, fresh});
      }
      self.push_back(-1);
    }
    const int n = static_cast<int>(self.size());
    std::vector<Int> arrows(n, 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < branches; ++i) ++arrows[pick(rng)];

    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (int v = 0; v < n; ++v) m[v][v] = self[v];
    for (auto [a, b] : edges) {
      m[a][b] += 1;
      m[b][a] += 1;
    }
    std::vector<Rational> rhs(n);
    for (int v = 0; v < n; ++v) rhs[v] = -arrows[v];
    const auto mult = solve(m, rhs);

    bool ok = true;
    for (const Rational& x : mult) ok &= denominator(x) == 1 && x >= 2;
    if (!ok) continue;

    ResGraph g;
    for (int v = 0; v < n; ++v) {
      ResVertex w;
      w.name = "E" + std::to_string(v + 1);
      w.multiplicity = static_cast<Int>(numerator(mult[v]));
      w.self_intersection = self[v];
      g.add_vertex(std::move(w));
    }
    for (auto [a, b] : edges) g.add_edge(a, b);
    int count = 0;
    for (int v = 0; v < n; ++v) {
      for (Int i = 0; i < arrows[v]; ++i) g.add_arrow(v, 1, "A" + std::to_string(++count));
    }
    return g;
  }
}

GammaC smooth_f_graph(const ResGraph& plane) {
  GammaC out;
  for (const ResVertex& v : plane.vertices) {
    out.add_curve(v.name, Triple{1, 0, *v.multiplicity}, 0);
  }
  for (const Edge& e : plane.edges) out.add_edge(e.a, e.b, 1);
  for (const ResArrow& a : plane.arrows) {
    const int h = out.add_arrowhead(a.name);
    out.add_edge(a.support, h, 1);
  }
  return out;
}

GammaC random_gammac(Rng& rng, bool* plane_family) {
  std::uniform_int_distribution<int> blowups(1, 7);
  std::uniform_int_distribution<int> branches(1, 4);
  std::uniform_int_distribution<int> family(0, 9);
  const bool plane = family(rng) < 7;
  if (plane_family != nullptr) *plane_family = plane;
  const ResGraph g = random_plane_curve_graph(rng, blowups(rng), branches(rng));
  return plane ? from_plane_curve_graph(g) : smooth_f_graph(g);
}

}  // namespace gen
