#include "iomdin/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "iomdin/lattice.hpp"

namespace iomdin {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Groups of `members` under `uf`, ordered by smallest member.
std::vector<std::vector<int>> groups(UnionFind& uf, const std::vector<int>& members) {
  std::map<int, std::vector<int>> by_root;
  std::vector<int> order;
  for (int v : members) {
    const int r = uf.find(v);
    if (by_root.find(r) == by_root.end()) order.push_back(r);
    by_root[r].push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (int r : order) out.push_back(std::move(by_root[r]));
  return out;
}

bool in_v1_side(const GcVertex& v) { return v.triple.m == 1; }

}  // namespace

Partition partition(const GammaC& g) {
  Partition p;
  std::vector<int> side1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const GcVertex& x = g.vertices[v];
    if (x.is_arrowhead()) {
      p.arrowheads.push_back(v);
      side1.push_back(v);
    } else if (x.triple.m == 1) {
      p.v1.push_back(v);
      side1.push_back(v);
    } else {
      p.v2.push_back(v);
    }
  }

  UnionFind uf1(g.vertex_count());
  UnionFind uf2(g.vertex_count());
  for (const GcEdge& e : g.edges) {
    const bool a1 = in_v1_side(g.vertices[e.a]);
    const bool b1 = in_v1_side(g.vertices[e.b]);
    if (a1 && b1 && e.weight == 1) uf1.unite(e.a, e.b);
    if (!a1 && !b1) uf2.unite(e.a, e.b);
  }
  p.gamma1 = groups(uf1, side1);

  for (const auto& members : groups(uf2, p.v2)) {
    GammaC comp;
    std::vector<int> origin;
    std::map<int, int> local;
    for (int v : members) {
      local[v] = comp.add_curve(g.vertices[v].id, g.vertices[v].triple, g.vertices[v].genus);
      origin.push_back(v);
    }
    for (int id = 0; id < g.edge_count(); ++id) {
      const GcEdge& e = g.edges[id];
      const bool a_in = local.count(e.a) != 0;
      const bool b_in = local.count(e.b) != 0;
      if (a_in && b_in) {
        comp.add_edge(local[e.a], local[e.b], e.weight);
      } else if (a_in != b_in && e.weight == 2) {
        const int inner = a_in ? e.a : e.b;
        const int outer = a_in ? e.b : e.a;
        const int arrow = comp.add_arrowhead(
            "e" + std::to_string(id) + ":" + g.vertices[outer].id, g.vertices[outer].triple);
        origin.push_back(outer);
        comp.add_edge(local[inner], arrow, 2);
      }
    }
    p.gamma2.push_back(std::move(comp));
    p.gamma2_origin.push_back(std::move(origin));
  }

  for (int id = 0; id < g.edge_count(); ++id) {
    const GcEdge& e = g.edges[id];
    if (e.weight != 2 || e.is_loop()) continue;
    if (!in_v1_side(g.vertices[e.a]) || !in_v1_side(g.vertices[e.b])) continue;
    GammaC pair;
    const std::string tag = "e" + std::to_string(id) + ":";
    const int x = pair.add_arrowhead(tag + g.vertices[e.a].id, g.vertices[e.a].triple);
    const int y = pair.add_arrowhead(tag + g.vertices[e.b].id, g.vertices[e.b].triple);
    pair.add_edge(x, y, 2);
    p.gamma2.push_back(std::move(pair));
    p.gamma2_origin.push_back({e.a, e.b});
  }
  return p;
}

std::vector<G1Component> build_G1(const GammaC& g, const Partition& p) {
  std::vector<G1Component> out;
  for (const auto& members : p.gamma1) {
    G1Component comp;
    if (members.size() == 1 && g.vertices[members.front()].is_arrowhead()) {
      bool supported = false;
      for (const GcEdge& e : g.edges) {
        if ((e.a == members.front() || e.b == members.front()) && e.weight == 1) supported = true;
      }
      if (!supported) {
        ResVertex v;
        v.name = g.vertices[members.front()].id;
        v.multiplicity = 1;
        v.origin = members.front();
        comp.graph.add_vertex(std::move(v));
        comp.convention = true;
        out.push_back(std::move(comp));
        continue;
      }
    }
    std::map<int, int> local;
    for (int v : members) {
      const GcVertex& x = g.vertices[v];
      if (x.is_arrowhead()) continue;
      ResVertex w;
      w.name = x.id;
      w.multiplicity = x.triple.nu;
      w.genus = x.genus;
      w.origin = v;
      local[v] = comp.graph.add_vertex(std::move(w));
    }
    for (const GcEdge& e : g.edges) {
      const bool a_in = local.count(e.a) != 0;
      const bool b_in = local.count(e.b) != 0;
      if (e.weight == 1 && a_in && b_in) {
        comp.graph.add_edge(local[e.a], local[e.b]);
      } else if (e.weight == 1 && (a_in || b_in)) {
        const int arrow = a_in ? e.b : e.a;
        comp.graph.add_arrow(local[a_in ? e.a : e.b], 1, g.vertices[arrow].id);
      } else if (e.weight == 2) {
        if (a_in) comp.strict_transform_supports.push_back(local[e.a]);
        if (b_in) comp.strict_transform_supports.push_back(local[e.b]);
      }
    }
    try {
      comp.graph = solve_selfints(std::move(comp.graph));
    } catch (const DomainError& err) {
      throw DomainError(std::string("invalid Γ_C: G¹ component: ") + err.what());
    }
    out.push_back(std::move(comp));
  }
  return out;
}

KlPartition kl_partition(const GammaC& component) {
  KlPartition out;
  const int n = component.vertex_count();
  out.class_of.assign(n, -1);
  UnionFind uf(n);
  std::vector<int> curves;
  for (int v = 0; v < n; ++v) {
    if (!component.vertices[v].is_arrowhead()) curves.push_back(v);
  }
  for (const GcEdge& e : component.edges) {
    if (e.weight == 1) uf.unite(e.a, e.b);
  }
  for (auto& members : groups(uf, curves)) {
    KlClass k;
    k.members = std::move(members);
    const int index = static_cast<int>(out.classes.size());
    for (int v : k.members) out.class_of[v] = index;
    out.classes.push_back(std::move(k));
  }

  for (size_t l = 0; l < out.classes.size(); ++l) {
    KlClass& k = out.classes[l];
    const std::string tag = "class K" + std::to_string(l) + " (" +
                            component.vertices[k.members.front()].id + ", ...)";
    const int t = static_cast<int>(k.members.size());
    std::map<int, int> pos;
    for (int i = 0; i < t; ++i) pos[k.members[i]] = i;

    k.m = component.vertices[k.members.front()].triple.m;
    for (int v : k.members) {
      const GcVertex& x = component.vertices[v];
      k.nu = gcd(k.nu, x.triple.nu);
      if (x.triple.m != k.m) out.violations.push_back(tag + ": members have different m");
      if (x.genus != 0) out.violations.push_back(tag + ": member " + x.id + " has genus > 0");
    }

    std::vector<int> delta(t, 0);
    std::vector<std::vector<Int>> q(t, std::vector<Int>(t, 0));
    int inner_edges = 0;
    bool loops = false;
    for (const GcEdge& e : component.edges) {
      if (e.weight != 1 || pos.count(e.a) == 0) continue;
      ++inner_edges;
      if (e.is_loop()) {
        loops = true;
        continue;
      }
      const int i = pos[e.a], j = pos[e.b];
      ++delta[i];
      ++delta[j];
      ++q[i][j];
      ++q[j][i];
    }
    if (loops || inner_edges != t - 1) {
      out.violations.push_back(tag + ": Γ(K) is not a tree");
      continue;
    }

    Int rhs = 0;
    for (int i = 0; i < t; ++i) rhs += component.vertices[k.members[i]].triple.nu * (2 - delta[i]);
    if (2 * k.nu != rhs) {
      out.violations.push_back(tag + ": rationality fails, 2ν(K) = " + std::to_string(2 * k.nu) +
                               " but Σ ν(2 - δ) = " + std::to_string(rhs));
    }

    bool integral = true;
    for (int i = 0; i < t; ++i) {
      Int mass = 0;
      for (int j = 0; j < t; ++j) mass += q[i][j] * component.vertices[k.members[j]].triple.nu;
      const Int nu = component.vertices[k.members[i]].triple.nu;
      if (mass % nu != 0) {
        integral = false;
        out.violations.push_back(tag + ": self-intersection of " +
                                 component.vertices[k.members[i]].id + " is not integral");
        break;
      }
      q[i][i] = -mass / nu;
    }
    if (!integral) continue;
    for (int i = 0; i < t; ++i) k.self_intersections.push_back(q[i][i]);
    if (t >= 2) {
      IntersectionMatrix minor(t - 1, t - 1);
      for (int i = 0; i + 1 < t; ++i) {
        for (int j = 0; j + 1 < t; ++j) minor(i, j) = q[i][j];
      }
      if (!is_negative_definite(minor)) {
        out.violations.push_back(tag + ": form is not negative semidefinite of rank t - 1");
      }
    }
  }
  return out;
}

Quotient quotient_and_data(const GammaC& component, const KlPartition& kl) {
  Quotient q;
  std::vector<int> node(component.vertex_count(), -1);
  for (size_t l = 0; l < kl.classes.size(); ++l) {
    const int v = q.graph.add_vertex();
    q.klass.push_back(static_cast<int>(l));
    q.arrowhead.push_back(-1);
    q.multiplicity.push_back(kl.classes[l].m);
    q.data.vertex.push_back(kl.classes[l].nu);
    for (int member : kl.classes[l].members) node[member] = v;
  }
  for (int v = 0; v < component.vertex_count(); ++v) {
    if (!component.vertices[v].is_arrowhead()) continue;
    node[v] = q.graph.add_vertex();
    q.klass.push_back(-1);
    q.arrowhead.push_back(v);
    q.multiplicity.push_back(1);
    q.data.vertex.push_back(component.vertices[v].triple.nu);
  }
  for (const GcEdge& e : component.edges) {
    if (e.weight == 1) continue;
    q.graph.add_edge(node[e.a], node[e.b]);
    q.data.edge.push_back(component.vertices[e.a].triple.nu);
  }
  if (!q.graph.is_tree()) throw DomainError("cts1 violated: quotient graph is not a tree");
  const CoveringReport report = check_data(q.graph, q.data);
  if (!report.valid()) throw DomainError("cts1 violated: " + report.violations.front());
  return q;
}

TransversalReport transversal_graph(const GammaC& component) {
  TransversalReport r;
  bool has_curve = false;
  for (const GcVertex& v : component.vertices) has_curve |= !v.is_arrowhead();
  if (!has_curve) {
    throw DomainError("double-arrow component; apply the extra blow-up normalization first");
  }
  r.kl = kl_partition(component);
  if (!r.kl.ok()) throw DomainError("invalid Γ_C: " + r.kl.violations.front());
  r.quotient = quotient_and_data(component, r.kl);
  const Quotient& q = r.quotient;

  r.d = 0;
  for (const GcVertex& v : component.vertices) {
    if (!v.is_arrowhead()) r.d = gcd(r.d, v.triple.nu);
  }

  const CoveredGraph cover = standard_covering(q.graph, q.data);
  std::string why;
  if (!verify_local_degrees(q.graph, q.data, cover, &why)) {
    throw std::logic_error("standard covering broke local degrees: " + why);
  }
  int count = 0;
  const std::vector<int> label = cover.graph.component_labels(&count);
  if (count != r.d || component_count(q.graph, q.data) != r.d) {
    throw DomainError("invalid Γ_C: covering of the quotient has " + std::to_string(count) +
                      " components but d = " + std::to_string(r.d));
  }

  const auto adjacency = cover.graph.adjacency();
  std::vector<ResGraph> pieces(count);
  std::vector<int> local(cover.graph.vertex_count(), -1);
  for (int x = 0; x < cover.graph.vertex_count(); ++x) {
    const int base = cover.vertex_base[x];
    if (q.is_arrow(base)) continue;
    ResVertex w;
    w.name = "K" + std::to_string(q.klass[base]) + "." + std::to_string(cover.vertex_sheet[x]);
    w.multiplicity = q.multiplicity[base];
    local[x] = pieces[label[x]].add_vertex(std::move(w));
  }
  for (int id = 0; id < cover.graph.edge_count(); ++id) {
    const Edge& e = cover.graph.edge(id);
    if (local[e.a] >= 0 && local[e.b] >= 0) pieces[label[e.a]].add_edge(local[e.a], local[e.b]);
  }
  for (int x = 0; x < cover.graph.vertex_count(); ++x) {
    const int base = cover.vertex_base[x];
    if (!q.is_arrow(base)) continue;
    if (adjacency[x].size() != 1 || local[adjacency[x].front().first] < 0) {
      throw DomainError("invalid Γ_C: a lifted arrowhead is not supported by exactly one curve");
    }
    const int support = adjacency[x].front().first;
    pieces[label[x]].add_arrow(local[support], 1,
                               component.vertices[q.arrowhead[base]].id + "." +
                                   std::to_string(cover.vertex_sheet[x]));
  }
  for (ResGraph& piece : pieces) {
    try {
      piece = solve_selfints(std::move(piece));
    } catch (const DomainError& err) {
      throw DomainError(std::string("invalid Γ_C: transversal graph: ") + err.what());
    }
    if (!is_plane_curve_graph(piece, &why)) throw DomainError("invalid Γ_C: transversal graph " + why);
  }
  const std::string form = tree_canonical_form(pieces.front());
  for (const ResGraph& piece : pieces) {
    if (tree_canonical_form(piece) != form) {
      throw DomainError("invalid Γ_C: the components above the quotient are not isomorphic");
    }
  }
  r.graph = std::move(pieces.front());
  r.branches = static_cast<Int>(r.graph.arrows.size());

  Int total = 0;
  for (int v = 0; v < component.vertex_count(); ++v) {
    if (!component.vertices[v].is_arrowhead()) continue;
    const Int nu = component.vertices[v].triple.nu;
    total += nu;
    r.arrow_nu.push_back(nu);
    if (nu % r.d != 0) throw DomainError("invalid Γ_C: d_j does not divide ν(e)");
    r.arrow_degree.push_back(nu / r.d);
  }
  if (r.d * r.branches != total) {
    throw DomainError("invalid Γ_C: d·#(TΣ) = " + std::to_string(r.d * r.branches) +
                      " but Σ ν(e) = " + std::to_string(total));
  }
  r.milnor = milnor_from_plane_graph(r.graph);
  return r;
}

Analysis analyze(const GammaC& g) {
  const ValidationReport report = validate(g);
  for (const Issue& issue : report.issues) {
    if (issue.severity == Severity::Error) {
      throw DomainError("invalid Γ_C: " + issue.element + ": " + issue.message);
    }
  }
  Analysis a;
  a.graph = normalize_extrablowup(g);
  a.partition = partition(a.graph);
  a.g1 = build_G1(a.graph, a.partition);
  for (const GammaC& component : a.partition.gamma2) {
    a.transversal.push_back(transversal_graph(component));
    a.chi_coefficient += a.transversal.back().d * a.transversal.back().milnor;
  }
  return a;
}

Int chi_correction(const GammaC& g, Int k) { return k * analyze(g).chi_coefficient; }

ValidationReport validate_structure(const GammaC& g) {
  ValidationReport report = validate(g);
  if (!report.ok()) return report;
  try {
    analyze(g);
  } catch (const DomainError& err) {
    report.issues.push_back({Severity::Error, "structure", "graph", err.what()});
  }
  return report;
}

GammaC from_plane_curve_graph(const ResGraph& g) {
  std::string why;
  if (!is_plane_curve_graph(g, &why)) throw std::invalid_argument(why);
  std::set<std::string> names;
  bool named = true;
  for (const ResVertex& v : g.vertices) named &= !v.name.empty() && names.insert(v.name).second;
  for (const ResArrow& a : g.arrows) named &= !a.name.empty() && names.insert(a.name).second;

  GammaC out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string id = named ? g.vertices[v].name : "v" + std::to_string(v);
    out.add_curve(id, Triple{*g.vertices[v].multiplicity, 0, 1}, 0);
  }
  // both ends of multiplicity 1: a smooth point of {f = 0}, off the singular locus
  auto weight = [&](int a, int b) { return *g.vertices[a].multiplicity == 1 && b == 1 ? 1 : 2; };
  for (const Edge& e : g.edges) out.add_edge(e.a, e.b, weight(e.a, *g.vertices[e.b].multiplicity));
  for (size_t i = 0; i < g.arrows.size(); ++i) {
    const std::string id = named ? g.arrows[i].name : "a" + std::to_string(i);
    const int a = out.add_arrowhead(id);
    out.add_edge(g.arrows[i].support, a, weight(g.arrows[i].support, 1));
  }
  return out;
}

}  // namespace iomdin
