#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iomdin/multigraph.hpp"
#include "iomdin/types.hpp"

namespace iomdin {

/// Vertex weight (m; n, ν): vanishing orders of f on the c-type divisor and of
/// f and g on the second divisor through the curve.
struct Triple {
  Int m = 1;
  Int n = 0;
  Int nu = 1;

  bool operator==(const Triple&) const = default;
  bool same_pair(const Triple& o) const { return n == o.n && nu == o.nu; }
};

inline constexpr Triple kArrowTriple{1, 0, 1};

enum class NodeKind { Curve, Arrowhead };

struct GcVertex {
  std::string id;
  NodeKind kind = NodeKind::Curve;
  Triple triple;
  Int genus = 0;

  bool is_arrowhead() const { return kind == NodeKind::Arrowhead; }
};

struct GcEdge {
  int a = 0;
  int b = 0;
  int weight = 1;

  bool is_loop() const { return a == b; }
  int other(int v) const { return v == a ? b : a; }
};

/// The decorated dual graph Γ_C. Arrowheads are vertices; every edge carries
/// an explicit weight 1 or 2.
struct GammaC {
  std::vector<GcVertex> vertices;
  std::vector<GcEdge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int find(std::string_view id) const;
  int add_curve(std::string id, Triple t, Int genus = 0);
  int add_arrowhead(std::string id, Triple t = kArrowTriple);
  int add_edge(int a, int b, int weight);

  MultiGraph topology() const;
  /// Incident edge ids per vertex; loops appear twice.
  std::vector<std::vector<int>> incidence() const;
};

/// Structural problems found while reading a Γ_C document.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Reads the document schema
///   { "vertices":   [{"id", "m", "n", "nu", "genus"}],
///     "arrowheads": [{"id"}],
///     "edges":      [{"ends": [id, id], "weight": 1|2}] }.
/// Arrowheads may carry m/n/nu, which validate() then checks against (1;0,1).
GammaC parse_gammac(std::string_view document);
std::string serialize_gammac(const GammaC& g);

enum class Severity { Error, Notice };

struct Issue {
  Severity severity = Severity::Error;
  std::string clause;   // short rule name, e.g. "edge-weight-1"
  std::string element;  // offending vertex or edge
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const;
  bool has(std::string_view clause) const;
};

/// Model-level checks: decoration ranges, arrowhead triples, connectivity,
/// edge compatibility, arrowhead incidence, loop placement, and (as a notice)
/// weight-2 edges between two first-entry-1 endpoints.
ValidationReport validate(const GammaC& g);

struct Leg {
  int weight = 1;
  Triple other;      // (n; c, d) of the far end
  int edge = -1;
  int far_vertex = -1;
};

struct Star {
  int center = -1;
  Triple triple;
  Int genus = 0;
  std::vector<Leg> legs;
  int s = 0;  // weight-1 legs
  int t = 0;  // weight-2 legs
};

/// Each edge at v yields one leg, each loop two identical legs.
Star star_of(const GammaC& g, int v);

/// Replaces every weight-2 edge whose endpoints both have first entry 1 by a
/// path through a new rational vertex (2; n, ν). Idempotent.
GammaC normalize_extrablowup(const GammaC& g);

}  // namespace iomdin
