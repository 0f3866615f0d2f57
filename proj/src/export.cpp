#include "iomdin/export.hpp"

#include <sstream>
#include <stdexcept>

namespace iomdin {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string vertex_label(const ResVertex& v) {
  std::string label;
  if (v.multiplicity) label += "(" + std::to_string(*v.multiplicity) + ")";
  if (!label.empty()) label += " ";
  label += "[" + std::to_string(v.genus) + "]";
  if (v.self_intersection) label += " " + std::to_string(*v.self_intersection);
  return label;
}

}  // namespace

std::string to_dot(const ResGraph& g, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  for (const ResVertex& v : g.vertices) {
    out << "  " << quoted(v.name) << " [label=" << quoted(vertex_label(v)) << "];\n";
  }
  for (const ResArrow& a : g.arrows) {
    std::string label = a.multiplicity ? "(" + std::to_string(*a.multiplicity) + ")" : "";
    out << "  " << quoted(a.name) << " [shape=plaintext, label=" << quoted(label) << "];\n";
  }
  for (const Edge& e : g.edges) {
    out << "  " << quoted(g.vertices[e.a].name) << " -- " << quoted(g.vertices[e.b].name)
        << ";\n";
  }
  for (const ResArrow& a : g.arrows) {
    out << "  " << quoted(g.vertices[a.support].name) << " -- " << quoted(a.name)
        << " [dir=forward, arrowhead=normal];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json to_json(const ResGraph& g) {
  using nlohmann::ordered_json;
  ordered_json vertices = ordered_json::array();
  for (const ResVertex& v : g.vertices) {
    ordered_json jv;
    jv["id"] = v.name;
    if (v.multiplicity) jv["multiplicity"] = *v.multiplicity;
    jv["genus"] = v.genus;
    if (v.self_intersection) jv["self_intersection"] = *v.self_intersection;
    vertices.push_back(std::move(jv));
  }
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({{"ends", {g.vertices[e.a].name, g.vertices[e.b].name}}});
  }
  ordered_json arrows = ordered_json::array();
  for (const ResArrow& a : g.arrows) {
    ordered_json ja;
    ja["id"] = a.name;
    ja["support"] = g.vertices[a.support].name;
    if (a.multiplicity) ja["multiplicity"] = *a.multiplicity;
    arrows.push_back(std::move(ja));
  }
  ordered_json doc;
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  doc["arrowheads"] = std::move(arrows);
  return doc;
}

std::string export_graph(const ResGraph& g, std::string_view format) {
  if (format == "dot") return to_dot(g);
  if (format == "json") return to_json(g).dump(2) + "\n";
  throw std::invalid_argument("unknown export format: " + std::string(format));
}

}  // namespace iomdin
