#include "iomdin/resgraph.hpp"

#include <map>
#include <set>

#include "iomdin/lattice.hpp"

namespace iomdin {

int ResGraph::add_vertex(ResVertex v) {
  if (v.name.empty()) v.name = "w" + std::to_string(vertices.size());
  vertices.push_back(std::move(v));
  return vertex_count() - 1;
}

int ResGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  edges.push_back({a, b});
  return edge_count() - 1;
}

int ResGraph::add_arrow(int support, std::optional<Int> multiplicity, std::string name) {
  if (support < 0 || support >= vertex_count()) {
    throw std::out_of_range("arrow support out of range");
  }
  if (name.empty()) name = "a" + std::to_string(arrows.size());
  arrows.push_back({std::move(name), support, multiplicity});
  return static_cast<int>(arrows.size()) - 1;
}

int ResGraph::find_vertex(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices[v].name == name) return v;
  }
  return -1;
}

MultiGraph ResGraph::topology() const {
  MultiGraph m(vertex_count());
  for (const Edge& e : edges) m.add_edge(e.a, e.b);
  return m;
}

std::vector<int> ResGraph::valences() const {
  std::vector<int> val(vertex_count(), 0);
  for (const Edge& e : edges) {
    ++val[e.a];
    ++val[e.b];
  }
  for (const ResArrow& a : arrows) ++val[a.support];
  return val;
}

std::vector<int> ResGraph::loop_counts() const {
  std::vector<int> loops(vertex_count(), 0);
  for (const Edge& e : edges) {
    if (e.is_loop()) ++loops[e.a];
  }
  return loops;
}

std::vector<int> ResGraph::arrow_counts() const {
  std::vector<int> count(vertex_count(), 0);
  for (const ResArrow& a : arrows) ++count[a.support];
  return count;
}

namespace {

// Σ adjacent multiplicities (loops twice, arrows included) per vertex.
std::vector<Int> neighbor_mass(const ResGraph& g) {
  std::vector<Int> mass(g.vertex_count(), 0);
  auto mult = [&](int v) -> Int {
    const auto& m = g.vertices[v].multiplicity;
    if (!m) throw DomainError("vertex " + g.vertices[v].name + " has no multiplicity");
    return *m;
  };
  for (const Edge& e : g.edges) {
    mass[e.a] += mult(e.b);
    mass[e.b] += mult(e.a);
  }
  for (const ResArrow& a : g.arrows) {
    if (!a.multiplicity) throw DomainError("arrow " + a.name + " has no multiplicity");
    mass[a.support] += *a.multiplicity;
  }
  return mass;
}

}  // namespace

std::vector<EulerViolation> euler_check(const ResGraph& g) {
  const auto mass = neighbor_mass(g);
  std::vector<EulerViolation> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const ResVertex& w = g.vertices[v];
    if (!w.self_intersection) {
      throw DomainError("vertex " + w.name + " has no self-intersection");
    }
    const Int r = *w.self_intersection * *w.multiplicity + mass[v];
    if (r != 0) out.push_back({v, r});
  }
  return out;
}

ResGraph solve_selfints(ResGraph g) {
  const auto mass = neighbor_mass(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    ResVertex& w = g.vertices[v];
    if (w.self_intersection) continue;
    const Int m = *w.multiplicity;
    if (m <= 0 || mass[v] % m != 0) {
      throw DomainError("inconsistent multiplicities at vertex " + w.name + ": -" +
                        std::to_string(mass[v]) + "/" + std::to_string(m) +
                        " is not an integer");
    }
    w.self_intersection = -mass[v] / m;
  }
  return g;
}

IntersectionMatrix intersection_matrix(const ResGraph& g) {
  const int n = g.vertex_count();
  IntersectionMatrix m = IntersectionMatrix::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    const auto& e = g.vertices[v].self_intersection;
    if (!e) throw DomainError("vertex " + g.vertices[v].name + " has no self-intersection");
    m(v, v) = *e;
  }
  for (const Edge& e : g.edges) {
    if (e.is_loop()) {
      m(e.a, e.a) += 2;
    } else {
      m(e.a, e.b) += 1;
      m(e.b, e.a) += 1;
    }
  }
  return m;
}

bool is_plane_curve_graph(const ResGraph& g, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  if (!g.topology().is_tree()) return fail("not a plane-curve graph: not a tree");
  for (const ResVertex& w : g.vertices) {
    if (w.genus != 0) return fail("not a plane-curve graph: vertex " + w.name + " has genus > 0");
    if (!w.multiplicity || *w.multiplicity < 1) {
      return fail("not a plane-curve graph: vertex " + w.name + " lacks a multiplicity");
    }
  }
  for (const ResArrow& a : g.arrows) {
    if (a.multiplicity != 1) return fail("not a plane-curve graph: arrow multiplicity != 1");
  }
  return true;
}

Int acampo_chi(const ResGraph& g) {
  std::string why;
  if (!is_plane_curve_graph(g, &why)) throw DomainError(why);
  const auto val = g.valences();
  Int chi = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    chi += *g.vertices[v].multiplicity * (2 - val[v]);
  }
  return chi;
}

Int milnor_from_plane_graph(const ResGraph& g) { return 1 - acampo_chi(g); }

ResGraph strip_embedding(const ResGraph& g) {
  ResGraph out;
  out.vertices = g.vertices;
  out.edges = g.edges;
  for (ResVertex& v : out.vertices) v.multiplicity.reset();
  return out;
}

namespace {

struct SparseRow {
  std::map<int, Rational> off;  // off-diagonal entries
  Rational diag;
};

}  // namespace

FormSignature intersection_form_signature(const ResGraph& g) {
  const int n = g.vertex_count();
  FormSignature sig;
  if (n == 0) {
    sig.negative_definite = true;
    sig.nondegenerate = true;
    return sig;
  }
  const IntersectionMatrix dense = intersection_matrix(g);
  std::vector<SparseRow> rows(n);
  for (int v = 0; v < n; ++v) rows[v].diag = Rational(dense(v, v));
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    rows[e.a].off[e.b] += 1;
    rows[e.b].off[e.a] += 1;
  }

  std::set<std::pair<size_t, int>> queue;
  for (int v = 0; v < n; ++v) queue.insert({rows[v].off.size(), v});
  std::vector<bool> done(n, false);
  Rational det = 1;
  bool definite = true;
  while (!queue.empty()) {
    const int p = queue.begin()->second;
    queue.erase(queue.begin());
    done[p] = true;
    const Rational pivot = rows[p].diag;
    if (pivot == 0) {
      // Elimination order hit a singular leading block; the form is not
      // definite and the determinant needs pivoting.
      sig.negative_definite = false;
      sig.det_abs = det_abs(dense);
      sig.nondegenerate = sig.det_abs != 0;
      return sig;
    }
    if (pivot > 0) definite = false;
    det *= pivot;
    std::vector<std::pair<int, Rational>> nbrs(rows[p].off.begin(), rows[p].off.end());
    for (const auto& [u, _] : nbrs) queue.erase({rows[u].off.size(), u});
    for (size_t i = 0; i < nbrs.size(); ++i) {
      const auto& [u, cu] = nbrs[i];
      rows[u].off.erase(p);
      rows[u].diag -= cu * cu / pivot;
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        const auto& [w, cw] = nbrs[j];
        const Rational delta = cu * cw / pivot;
        Rational& uw = rows[u].off[w];
        uw -= delta;
        Rational& wu = rows[w].off[u];
        wu -= delta;
        if (uw == 0) {
          rows[u].off.erase(w);
          rows[w].off.erase(u);
        }
      }
    }
    for (const auto& [u, _] : nbrs) queue.insert({rows[u].off.size(), u});
  }
  sig.negative_definite = definite;
  sig.nondegenerate = true;
  sig.det_abs = boost::multiprecision::abs(boost::multiprecision::numerator(det));
  return sig;
}

}  // namespace iomdin
