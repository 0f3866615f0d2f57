#pragma once

#include <string>
#include <vector>

#include "iomdin/multigraph.hpp"
#include "iomdin/types.hpp"

namespace iomdin {

/// n_v per base vertex and n_e per base edge, indexed like the base graph.
struct CoveringData {
  std::vector<Int> vertex;
  std::vector<Int> edge;
};

struct CoveringReport {
  std::vector<std::string> violations;
  /// d_e = n_e / lcm(n_v1, n_v2); zero where the axiom fails.
  std::vector<Int> edge_degree;
  /// n_v = 1 at every vertex flagged by the caller.
  bool unique = true;

  bool valid() const { return violations.empty(); }
};

/// Checks positivity, lcm(n_v1, n_v2) | n_e on every edge, and n_v = 1 at
/// loop vertices. `flagged` lists the vertices whose n_v must be 1 for the
/// covering to be unique up to isomorphism.
CoveringReport check_data(const MultiGraph& base, const CoveringData& data,
                          const std::vector<int>& flagged = {});

/// The standard model: lifts (v, i), i mod n_v, and edge lifts (e, j), j mod
/// n_e, joining (v1, j mod n_v1) with (v2, j mod n_v2).
struct CoveredGraph {
  MultiGraph graph;
  std::vector<int> vertex_base;   // base vertex of each lift
  std::vector<Int> vertex_sheet;  // residue i
  std::vector<int> edge_base;
  std::vector<Int> edge_sheet;
  std::vector<int> offset;        // first lift of base vertex v

  int lift(int v, Int i) const { return offset[v] + static_cast<int>(i); }
};

CoveredGraph standard_covering(const MultiGraph& base, const CoveringData& data);

/// gcd of the vertex data; the base must be a tree.
Int component_count(const MultiGraph& tree, const CoveringData& data);

/// Every lift of v meets n_e / n_v lifts of each base edge e at v (twice
/// that for loops), and every lifted edge projects onto its base edge.
bool verify_local_degrees(const MultiGraph& base, const CoveringData& data,
                          const CoveredGraph& cover, std::string* why = nullptr);

}  // namespace iomdin
