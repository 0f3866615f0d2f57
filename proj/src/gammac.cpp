#include "iomdin/gammac.hpp"

#include <map>
#include <set>

#include "json.hpp"

namespace iomdin {

int GammaC::find(std::string_view id) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices[v].id == id) return v;
  }
  return -1;
}

int GammaC::add_curve(std::string id, Triple t, Int genus) {
  vertices.push_back({std::move(id), NodeKind::Curve, t, genus});
  return vertex_count() - 1;
}

int GammaC::add_arrowhead(std::string id, Triple t) {
  vertices.push_back({std::move(id), NodeKind::Arrowhead, t, 0});
  return vertex_count() - 1;
}

int GammaC::add_edge(int a, int b, int weight) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  edges.push_back({a, b, weight});
  return edge_count() - 1;
}

MultiGraph GammaC::topology() const {
  MultiGraph m(vertex_count());
  for (const GcEdge& e : edges) m.add_edge(e.a, e.b);
  return m;
}

std::vector<std::vector<int>> GammaC::incidence() const {
  std::vector<std::vector<int>> inc(vertex_count());
  for (int id = 0; id < edge_count(); ++id) {
    inc[edges[id].a].push_back(id);
    inc[edges[id].b].push_back(id);
  }
  return inc;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

namespace {

using nlohmann::json;

struct Reader {
  std::vector<std::string> errors;

  const json* member(const json& obj, const char* key, const std::string& where, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) errors.push_back(where + ": missing \"" + key + "\"");
      return nullptr;
    }
    return &*it;
  }

  bool integer(const json& obj, const char* key, const std::string& where, bool required,
               Int& out) {
    const json* j = member(obj, key, where, required);
    if (j == nullptr) return false;
    if (!j->is_number_integer()) {
      errors.push_back(where + "/" + key + ": expected an integer");
      return false;
    }
    out = j->get<Int>();
    return true;
  }

  bool id(const json& obj, const std::string& where, std::string& out) {
    const json* j = member(obj, "id", where, true);
    if (j == nullptr) return false;
    if (!j->is_string() || j->get<std::string>().empty()) {
      errors.push_back(where + "/id: expected a non-empty string");
      return false;
    }
    out = j->get<std::string>();
    return true;
  }
};

}  // namespace

GammaC parse_gammac(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError({std::string("malformed document: ") + e.what()});
  }
  if (!doc.is_object()) throw SchemaError({"document root must be an object"});

  Reader r;
  GammaC g;
  std::set<std::string> seen;
  auto claim = [&](const std::string& id, const std::string& where) {
    if (!seen.insert(id).second) {
      r.errors.push_back(where + ": duplicate id \"" + id + "\"");
      return false;
    }
    return true;
  };

  const json* vertices = r.member(doc, "vertices", "", true);
  if (vertices != nullptr && !vertices->is_array()) {
    r.errors.push_back("/vertices: expected an array");
    vertices = nullptr;
  }
  if (vertices != nullptr && vertices->empty()) r.errors.push_back("/vertices: empty graph");
  if (vertices != nullptr) {
    for (size_t i = 0; i < vertices->size(); ++i) {
      const json& jv = (*vertices)[i];
      const std::string where = "/vertices/" + std::to_string(i);
      if (!jv.is_object()) {
        r.errors.push_back(where + ": expected an object");
        continue;
      }
      std::string id;
      Triple t;
      Int genus = 0;
      bool ok = r.id(jv, where, id);
      ok &= r.integer(jv, "m", where, true, t.m);
      ok &= r.integer(jv, "n", where, true, t.n);
      ok &= r.integer(jv, "nu", where, true, t.nu);
      if (jv.contains("genus")) ok &= r.integer(jv, "genus", where, false, genus);
      if (ok && claim(id, where)) g.add_curve(id, t, genus);
    }
  }

  if (const json* arrows = r.member(doc, "arrowheads", "", false)) {
    if (!arrows->is_array()) {
      r.errors.push_back("/arrowheads: expected an array");
    } else {
      for (size_t i = 0; i < arrows->size(); ++i) {
        const json& ja = (*arrows)[i];
        const std::string where = "/arrowheads/" + std::to_string(i);
        if (!ja.is_object()) {
          r.errors.push_back(where + ": expected an object");
          continue;
        }
        std::string id;
        Triple t = kArrowTriple;
        bool ok = r.id(ja, where, id);
        if (ja.contains("m")) ok &= r.integer(ja, "m", where, false, t.m);
        if (ja.contains("n")) ok &= r.integer(ja, "n", where, false, t.n);
        if (ja.contains("nu")) ok &= r.integer(ja, "nu", where, false, t.nu);
        if (ok && claim(id, where)) g.add_arrowhead(id, t);
      }
    }
  }

  const json* edges = r.member(doc, "edges", "", false);
  if (edges != nullptr && !edges->is_array()) {
    r.errors.push_back("/edges: expected an array");
    edges = nullptr;
  }
  if (edges != nullptr) {
    for (size_t i = 0; i < edges->size(); ++i) {
      const json& je = (*edges)[i];
      const std::string where = "/edges/" + std::to_string(i);
      if (!je.is_object()) {
        r.errors.push_back(where + ": expected an object");
        continue;
      }
      const json* ends = r.member(je, "ends", where, true);
      Int weight = 0;
      const bool has_weight = r.integer(je, "weight", where, true, weight);
      if (ends == nullptr) continue;
      if (!ends->is_array() || ends->size() != 2 || !(*ends)[0].is_string() ||
          !(*ends)[1].is_string()) {
        r.errors.push_back(where + "/ends: expected two vertex ids");
        continue;
      }
      int idx[2];
      bool ok = true;
      for (int k = 0; k < 2; ++k) {
        const auto id = (*ends)[k].get<std::string>();
        idx[k] = g.find(id);
        if (idx[k] < 0) {
          r.errors.push_back(where + "/ends/" + std::to_string(k) + ": unknown vertex id \"" +
                             id + "\"");
          ok = false;
        }
      }
      if (has_weight && weight != 1 && weight != 2) {
        r.errors.push_back(where + "/weight: must be 1 or 2");
        ok = false;
      }
      if (ok && has_weight) g.add_edge(idx[0], idx[1], static_cast<int>(weight));
    }
  }

  if (!r.errors.empty()) throw SchemaError(std::move(r.errors));
  return g;
}

std::string serialize_gammac(const GammaC& g) {
  using nlohmann::ordered_json;
  ordered_json vertices = ordered_json::array();
  ordered_json arrows = ordered_json::array();
  for (const GcVertex& v : g.vertices) {
    ordered_json j;
    j["id"] = v.id;
    if (v.is_arrowhead()) {
      if (v.triple != kArrowTriple) {
        j["m"] = v.triple.m;
        j["n"] = v.triple.n;
        j["nu"] = v.triple.nu;
      }
      arrows.push_back(std::move(j));
    } else {
      j["m"] = v.triple.m;
      j["n"] = v.triple.n;
      j["nu"] = v.triple.nu;
      j["genus"] = v.genus;
      vertices.push_back(std::move(j));
    }
  }
  ordered_json edges = ordered_json::array();
  for (const GcEdge& e : g.edges) {
    ordered_json j;
    j["ends"] = {g.vertices[e.a].id, g.vertices[e.b].id};
    j["weight"] = e.weight;
    edges.push_back(std::move(j));
  }
  ordered_json doc;
  doc["vertices"] = std::move(vertices);
  doc["arrowheads"] = std::move(arrows);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

bool ValidationReport::ok() const {
  for (const Issue& i : issues) {
    if (i.severity == Severity::Error) return false;
  }
  return true;
}

bool ValidationReport::has(std::string_view clause) const {
  for (const Issue& i : issues) {
    if (i.clause == clause) return true;
  }
  return false;
}

namespace {

std::string describe(const Triple& t) {
  return "(" + std::to_string(t.m) + ";" + std::to_string(t.n) + "," + std::to_string(t.nu) + ")";
}

std::string edge_name(const GammaC& g, int id) {
  const GcEdge& e = g.edges[id];
  return "edge " + std::to_string(id) + " [" + g.vertices[e.a].id + "-" + g.vertices[e.b].id +
         "]";
}

}  // namespace

ValidationReport validate(const GammaC& g) {
  ValidationReport report;
  auto add = [&](Severity s, std::string clause, std::string element, std::string message) {
    report.issues.push_back({s, std::move(clause), std::move(element), std::move(message)});
  };
  if (g.vertices.empty()) {
    add(Severity::Error, "nonempty", "graph", "empty graph");
    return report;
  }

  for (const GcVertex& v : g.vertices) {
    if (v.is_arrowhead()) {
      if (v.triple != kArrowTriple) {
        add(Severity::Error, "arrowhead-triple", v.id,
            "arrowhead carries " + describe(v.triple) + " instead of (1;0,1)");
      }
      continue;
    }
    const Triple& t = v.triple;
    if (t.m < 1 || t.nu < 1 || t.n < 0) {
      add(Severity::Error, "decoration-range", v.id,
          "triple " + describe(t) + " needs m >= 1, n >= 0, nu >= 1");
    }
    if (v.genus < 0) add(Severity::Error, "decoration-range", v.id, "negative genus");
  }

  if (g.topology().component_count() != 1) {
    add(Severity::Error, "connected", "graph", "graph is not connected");
  }

  const auto inc = g.incidence();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertices[v].is_arrowhead() && inc[v].size() != 1) {
      add(Severity::Error, "arrowhead-incidence", g.vertices[v].id,
          "arrowhead must have exactly one edge, has " + std::to_string(inc[v].size()));
    }
  }

  for (int id = 0; id < g.edge_count(); ++id) {
    const GcEdge& e = g.edges[id];
    const GcVertex& a = g.vertices[e.a];
    const GcVertex& b = g.vertices[e.b];
    const std::string name = edge_name(g, id);
    if (e.weight != 1 && e.weight != 2) {
      add(Severity::Error, "edge-weight", name, "weight must be 1 or 2");
      continue;
    }
    if (e.is_loop() && a.is_arrowhead()) {
      add(Severity::Error, "loop-arrowhead", name, "loops are only allowed at curve vertices");
    }
    if (e.weight == 1 && a.triple.m != b.triple.m) {
      add(Severity::Error, "edge-weight-1", name,
          "weight-1 edge joins unequal first entries " + describe(a.triple) + " and " +
              describe(b.triple));
    }
    if (e.weight == 2 && !a.triple.same_pair(b.triple)) {
      add(Severity::Error, "edge-weight-2", name,
          "weight-2 edge joins unequal pairs " + describe(a.triple) + " and " +
              describe(b.triple));
    }
    if (!e.is_loop() && a.is_arrowhead() && b.is_arrowhead() && e.weight == 1) {
      add(Severity::Error, "arrowhead-pair", name, "two arrowheads joined by a weight-1 edge");
    }
    if (e.weight == 2 && a.triple.m == 1 && b.triple.m == 1) {
      add(Severity::Notice, "extrablowup", name,
          "weight-2 edge between first entries 1; normalize with an extra blow-up");
    }
  }
  return report;
}

Star star_of(const GammaC& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  const GcVertex& center = g.vertices[v];
  if (center.is_arrowhead()) {
    throw std::invalid_argument("star_of: " + center.id + " is an arrowhead");
  }
  Star star;
  star.center = v;
  star.triple = center.triple;
  star.genus = center.genus;
  for (int id = 0; id < g.edge_count(); ++id) {
    const GcEdge& e = g.edges[id];
    if (e.a != v && e.b != v) continue;
    const int far = e.other(v);
    const Leg leg{e.weight, g.vertices[far].triple, id, far};
    star.legs.push_back(leg);
    if (e.is_loop()) star.legs.push_back(leg);
  }
  for (const Leg& leg : star.legs) (leg.weight == 1 ? star.s : star.t) += 1;
  return star;
}

GammaC normalize_extrablowup(const GammaC& g) {
  GammaC out;
  out.vertices = g.vertices;
  std::set<std::string> taken;
  for (const GcVertex& v : g.vertices) taken.insert(v.id);
  for (int id = 0; id < g.edge_count(); ++id) {
    const GcEdge& e = g.edges[id];
    const Triple& ta = g.vertices[e.a].triple;
    const Triple& tb = g.vertices[e.b].triple;
    if (e.weight != 2 || ta.m != 1 || tb.m != 1) {
      out.edges.push_back(e);
      continue;
    }
    std::string name = "x" + std::to_string(id);
    while (taken.count(name) != 0) name += "'";
    taken.insert(name);
    const int mid = out.add_curve(name, Triple{2, ta.n, ta.nu}, 0);
    out.edges.push_back({e.a, mid, 2});
    out.edges.push_back({mid, e.b, 2});
  }
  return out;
}

}  // namespace iomdin
