#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "iomdin/multigraph.hpp"
#include "iomdin/types.hpp"

namespace iomdin {

struct ResVertex {
  std::string name;
  std::optional<Int> multiplicity;
  Int genus = 0;
  std::optional<Int> self_intersection;
  /// Index of the Γ_C vertex this vertex lifts, -1 for string vertices and
  /// graphs not produced by the pipeline.
  int origin = -1;
};

struct ResArrow {
  std::string name;
  int support = 0;
  std::optional<Int> multiplicity;
};

/// Embedded or plain resolution graph: decorated vertices, multi-edges and
/// loops between them, and arrowheads hanging off supporting vertices.
struct ResGraph {
  std::vector<ResVertex> vertices;
  std::vector<Edge> edges;
  std::vector<ResArrow> arrows;

  int add_vertex(ResVertex v);
  int add_edge(int a, int b);
  int add_arrow(int support, std::optional<Int> multiplicity, std::string name = {});

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int find_vertex(const std::string& name) const;

  MultiGraph topology() const;
  /// Edge ends plus arrows at each vertex; loops count twice.
  std::vector<int> valences() const;
  std::vector<int> loop_counts() const;
  std::vector<int> arrow_counts() const;
};

using IntersectionMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

struct EulerViolation {
  int vertex = 0;
  Int residual = 0;
};

/// Residuals e_w m_w + Σ adjacent m + 2 m_w (#loops) + Σ arrow m for every
/// vertex; only the nonzero ones are returned. Throws DomainError naming the
/// first vertex or arrow that lacks a needed decoration.
std::vector<EulerViolation> euler_check(const ResGraph& g);

/// Fills every absent self-intersection from the Euler relation. Throws
/// DomainError("inconsistent multiplicities ...") on a non-integral quotient.
ResGraph solve_selfints(ResGraph g);

/// Diagonal e_w + 2 (#loops at w); off-diagonal the number of joining edges.
IntersectionMatrix intersection_matrix(const ResGraph& g);

/// χ = Σ m_w (2 - δ_w) for a plane-curve embedded resolution graph.
Int acampo_chi(const ResGraph& g);
Int milnor_from_plane_graph(const ResGraph& g);
/// Tree, genera 0, all multiplicities present, arrows of multiplicity 1.
bool is_plane_curve_graph(const ResGraph& g, std::string* why = nullptr);

/// Copy with arrows and multiplicities removed.
ResGraph strip_embedding(const ResGraph& g);

/// Canonical string of a decorated tree (multiplicity, genus,
/// self-intersection, arrow multiplicities per vertex), independent of vertex
/// order and names. Throws std::invalid_argument if g is not a tree.
std::string tree_canonical_form(const ResGraph& g);
bool isomorphic_trees(const ResGraph& a, const ResGraph& b);

}  // namespace iomdin
