#pragma once

#include <span>
#include <utility>
#include <vector>

namespace iomdin {

/// Undirected edge; `a == b` marks a loop.
struct Edge {
  int a = 0;
  int b = 0;

  bool is_loop() const { return a == b; }
  int other(int v) const { return v == a ? b : a; }
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges and loops are
/// allowed; edge ids are positions in `edges()`.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count) : vertex_count_(vertex_count) {}

  int add_vertex() { return vertex_count_++; }
  int add_edge(int a, int b);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  /// Incident (neighbor, edge id) pairs; a loop appears twice.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;
  /// Edge-end count per vertex (loops count twice).
  std::vector<int> degrees() const;

  /// Component label per vertex, labels numbered 0.. in order of first vertex.
  std::vector<int> component_labels(int* count = nullptr) const;
  int component_count() const;
  bool has_loops() const;
  /// Connected, acyclic, no loops or parallel edges. The empty graph is not a tree.
  bool is_tree() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace iomdin
