#include "iomdin/pipeline.hpp"

#include <algorithm>
#include <cstdio>

#include "iomdin/covering.hpp"

namespace iomdin {

namespace {

Int floor_div(Int a, Int b) { return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0); }

// kν − n, required positive.
Int shifted(const GcVertex& v, Int k) {
  const Int s = k * v.triple.nu - v.triple.n;
  if (s < 1) {
    throw DomainError("inadmissible (Γ_C, k): k·ν - n = " + std::to_string(s) + " at " + v.id +
                      " for k = " + std::to_string(k));
  }
  return s;
}

}  // namespace

Int k_min(const GammaC& g) {
  Int k = 1;
  for (const GcVertex& v : g.vertices) {
    if (v.triple.nu >= 1) k = std::max(k, floor_div(v.triple.n, v.triple.nu) + 1);
  }
  return k;
}

Step1Result step1(const GammaC& g, Int k) {
  Step1Result r;
  r.k = k;
  r.vertices.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const GcVertex& x = g.vertices[v];
    if (x.is_arrowhead()) continue;
    const Star star = star_of(g, v);
    const Int m = x.triple.m;
    const Int base = gcd(m, shifted(x, k));
    Int n = base;
    Int twice_chi = (2 - 2 * x.genus - star.s - star.t) * base;
    for (const Leg& leg : star.legs) {
      const Int datum = leg.weight == 1 ? shifted(g.vertices[leg.far_vertex], k) : leg.other.m;
      n = gcd(n, datum);
      twice_chi += gcd(base, datum);
    }
    VertexLift& lift = r.vertices[v];
    lift.n = n;
    lift.multiplicity = m * x.triple.nu / base;
    // n (2 - 2 g̃) = twice_chi
    if (twice_chi % (2 * n) != 0 || 2 - twice_chi / n < 0) {
      throw DomainError("inadmissible (Γ_C, k): genus of the lift of " + x.id +
                        " is not a nonnegative integer for k = " + std::to_string(k));
    }
    lift.genus = (2 - twice_chi / n) / 2;
  }
  return r;
}

Step2Result step2(const GammaC& g, Int k) {
  Step2Result r;
  r.k = k;
  for (int id = 0; id < g.edge_count(); ++id) {
    const GcEdge& e = g.edges[id];
    EdgeLift lift;
    lift.alpha_end = e.a;
    lift.beta_end = e.b;
    if (g.vertices[e.a].is_arrowhead()) std::swap(lift.alpha_end, lift.beta_end);
    const GcVertex& x = g.vertices[lift.alpha_end];
    const GcVertex& y = g.vertices[lift.beta_end];
    if (x.is_arrowhead()) {
      throw DomainError("edge " + std::to_string(id) + " joins two arrowheads; apply the extra "
                        "blow-up normalization first");
    }
    if (e.weight == 1) {
      const Int p = shifted(x, k), q = shifted(y, k);
      lift.n = gcd(x.triple.m, p, q);
      lift.spec = {p / lift.n, q / lift.n, x.triple.m / lift.n, x.triple.nu, y.triple.nu, 0};
    } else {
      const Int p = shifted(x, k);
      lift.n = gcd(x.triple.m, y.triple.m, p);
      lift.spec = {x.triple.m / lift.n, y.triple.m / lift.n, p / lift.n, 0, 0, x.triple.nu};
    }
    r.edges.push_back(lift);
  }
  return r;
}

ResGraph assemble(const GammaC& g, const Step1Result& s1, const Step2Result& s2) {
  CoveringData data;
  std::vector<int> flagged;
  for (int v = 0; v < g.vertex_count(); ++v) {
    data.vertex.push_back(s1.vertices[v].n);
    if (g.vertices[v].triple.m == 1) flagged.push_back(v);
  }
  for (const EdgeLift& e : s2.edges) data.edge.push_back(e.n);
  const MultiGraph base = g.topology();
  const CoveringReport report = check_data(base, data, flagged);
  if (!report.valid()) throw DomainError("covering data: " + report.violations.front());
  if (!report.unique) throw DomainError("covering data: n_v != 1 on a first-entry-1 vertex");
  const CoveredGraph cover = standard_covering(base, data);

  ResGraph out;
  std::vector<int> vertex_of(cover.graph.vertex_count(), -1);
  for (int x = 0; x < cover.graph.vertex_count(); ++x) {
    const int v = cover.vertex_base[x];
    if (g.vertices[v].is_arrowhead()) continue;
    ResVertex w;
    w.name = g.vertices[v].id + "@" + std::to_string(cover.vertex_sheet[x]);
    w.multiplicity = s1.vertices[v].multiplicity;
    w.genus = s1.vertices[v].genus;
    w.origin = v;
    vertex_of[x] = out.add_vertex(std::move(w));
  }

  std::vector<HJChain> chains;
  for (int id = 0; id < g.edge_count(); ++id) {
    const EdgeLift& e = s2.edges[id];
    HJChain chain = compute_string(e.spec);
    const Int want_alpha = s1.vertices[e.alpha_end].multiplicity;
    const Int want_beta = s1.vertices[e.beta_end].multiplicity;
    if (chain.end_alpha_multiplicity != want_alpha || chain.end_beta_multiplicity != want_beta) {
      throw DomainError("string of edge " + std::to_string(id) + " ends with multiplicities (" +
                        std::to_string(chain.end_alpha_multiplicity) + "," +
                        std::to_string(chain.end_beta_multiplicity) + ") but the lifts carry (" +
                        std::to_string(want_alpha) + "," + std::to_string(want_beta) + ")");
    }
    chains.push_back(std::move(chain));
  }

  for (int le = 0; le < cover.graph.edge_count(); ++le) {
    const int id = cover.edge_base[le];
    const Int j = cover.edge_sheet[le];
    const EdgeLift& e = s2.edges[id];
    const int from = vertex_of[cover.lift(e.alpha_end, j % s1.vertices[e.alpha_end].n)];
    int prev = from;
    const auto& chain = chains[id].vertices;
    for (size_t p = 0; p < chain.size(); ++p) {
      ResVertex w;
      w.name = "e" + std::to_string(id) + "#" + std::to_string(j) + "." + std::to_string(p + 1);
      w.multiplicity = chain[p].multiplicity;
      w.self_intersection = chain[p].self_intersection;
      const int cur = out.add_vertex(std::move(w));
      out.add_edge(prev, cur);
      prev = cur;
    }
    if (g.vertices[e.beta_end].is_arrowhead()) {
      std::string name = g.vertices[e.beta_end].id;
      if (data.edge[id] > 1) name += "." + std::to_string(j);
      out.add_arrow(prev, 1, name);
    } else {
      out.add_edge(prev, vertex_of[cover.lift(e.beta_end, j % s1.vertices[e.beta_end].n)]);
    }
  }
  return out;
}

ResGraph step3(ResGraph g) {
  g = solve_selfints(std::move(g));
  const auto violations = euler_check(g);
  if (!violations.empty()) {
    const ResVertex& w = g.vertices[violations.front().vertex];
    throw DomainError("Euler relation fails at " + w.name + " (residual " +
                      std::to_string(violations.front().residual) + ")");
  }
  return g;
}

Resolution resolve(const GammaC& g, Int k, const ResolveOptions& options) {
  const ValidationReport report = validate(g);
  for (const Issue& issue : report.issues) {
    if (issue.severity == Severity::Error) {
      throw DomainError("invalid Γ_C: " + issue.element + ": " + issue.message);
    }
  }
  if (k < 1) throw DomainError("k must be positive, got " + std::to_string(k));
  Resolution r;
  r.k = k;
  r.input = normalize_extrablowup(g);
  const Int km = k_min(r.input);
  if (k < km) {
    if (!options.force) {
      throw DomainError("k = " + std::to_string(k) + " is below k_min = " + std::to_string(km) +
                        " (use --force to compute anyway)");
    }
    r.verified_regime = false;
  }
  r.embedded = step3(assemble(r.input, step1(r.input, k), step2(r.input, k)));
  r.surface = strip_embedding(r.embedded);
  if (options.minimize) r.surface = blow_down(std::move(r.surface), options.mode);
  if (r.surface.vertex_count() > 0 && r.surface.topology().component_count() != 1) {
    throw DomainError("input not a valid Γ_C/k pair: Γ(X_k) is disconnected");
  }
  r.form = intersection_form_signature(r.surface);
  if (!r.form.negative_definite) {
    throw DomainError("input not a valid Γ_C/k pair: intersection form is not negative definite");
  }
  return r;
}

std::string stable_part(const GammaC& normalized, const ResGraph& embedded) {
  std::vector<std::string> vertices, edges, arrows;
  std::vector<bool> stable(embedded.vertex_count(), false);
  for (int v = 0; v < embedded.vertex_count(); ++v) {
    const ResVertex& w = embedded.vertices[v];
    if (w.origin < 0 || normalized.vertices[w.origin].triple.m != 1) continue;
    stable[v] = true;
    vertices.push_back(w.name + "(" + std::to_string(w.multiplicity.value_or(0)) + ")[" +
                       std::to_string(w.genus) + "]");
  }
  for (const Edge& e : embedded.edges) {
    if (!stable[e.a] || !stable[e.b]) continue;
    std::string a = embedded.vertices[e.a].name, b = embedded.vertices[e.b].name;
    if (b < a) std::swap(a, b);
    edges.push_back(a + "-" + b);
  }
  for (const ResArrow& a : embedded.arrows) {
    arrows.push_back(a.name + ">" + (stable[a.support] ? embedded.vertices[a.support].name : "*"));
  }
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end());
  std::sort(arrows.begin(), arrows.end());
  std::string out;
  auto emit = [&](const char* key, const std::vector<std::string>& items) {
    out += key;
    for (const auto& s : items) out += " " + s;
    out += ";";
  };
  emit("V", vertices);
  emit("E", edges);
  emit("A", arrows);
  return out;
}

std::string stable_hash(const std::string& stable_form) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : stable_form) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<SeriesRow> series(const GammaC& g, Int k_from, Int k_to,
                              const ResolveOptions& options) {
  std::vector<SeriesRow> rows;
  for (Int k = k_from; k <= k_to; ++k) {
    const Resolution r = resolve(g, k, options);
    SeriesRow row;
    row.k = k;
    row.vertices = r.surface.vertex_count();
    row.edges = r.surface.edge_count();
    row.det_abs = r.form.det_abs;
    row.negative_definite = r.form.negative_definite;
    row.embedded_vertices = r.embedded.vertex_count();
    row.stable_form = stable_part(r.input, r.embedded);
    row.stable_hash = stable_hash(row.stable_form);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace iomdin
