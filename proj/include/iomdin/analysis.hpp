#pragma once

#include <string>
#include <vector>

#include "iomdin/covering.hpp"
#include "iomdin/gammac.hpp"
#include "iomdin/resgraph.hpp"

namespace iomdin {

/// V¹ (first entry 1) against V² (first entry ≥ 2), the components of Γ¹ and
/// of Γ². Indices refer to the Γ_C the partition was built from.
struct Partition {
  std::vector<int> v1;
  std::vector<int> v2;
  std::vector<int> arrowheads;
  /// Γ¹: V¹ vertices and arrowheads joined by weight-1 edges.
  std::vector<std::vector<int>> gamma1;
  /// Γ² components. Weight-2 edges from V² into V¹ (arrowheads included)
  /// become arrowheads carrying the V¹ endpoint's triple.
  std::vector<GammaC> gamma2;
  /// Per Γ² component and per vertex of it: the Γ_C vertex it comes from
  /// (for a synthesized arrowhead, the V¹ endpoint).
  std::vector<std::vector<int>> gamma2_origin;
};

/// Expects an extrablowup-normalized graph; remaining V¹–V¹ weight-2 edges
/// are turned into double-arrow components.
Partition partition(const GammaC& g);

struct G1Component {
  ResGraph graph;
  /// One vertex of multiplicity 1 standing for an untouched smooth germ.
  bool convention = false;
  /// Supports (in `graph`) of the strict transforms of Sing{f=0}: one per
  /// deleted weight-2 edge end. Metadata only.
  std::vector<int> strict_transform_supports;
};

/// Multiplicity ν and genus g per V¹ vertex, arrowheads of multiplicity 1,
/// self-intersections from the Euler relation.
std::vector<G1Component> build_G1(const GammaC& g, const Partition& p);

struct KlClass {
  std::vector<int> members;  // vertices of the Γ² component
  Int m = 0;
  Int nu = 0;                // gcd of the members' third entries
  /// Self-intersection of each member inside B(K), solved from
  /// (Σ ν_k C_k)·C_k' = 0; empty if not integral.
  std::vector<Int> self_intersections;
};

struct KlPartition {
  std::vector<KlClass> classes;
  std::vector<int> class_of;  // per vertex of the component, -1 for arrowheads
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Classes of the weight-1 closure and the checks on Γ(K): tree, genera 0,
/// common m, 2ν(K) = Σ ν(2 − δ), integral self-intersections and a negative
/// semidefinite form of rank t − 1.
KlPartition kl_partition(const GammaC& component);

/// Γ²_j/∼ with its covering data ν.
struct Quotient {
  MultiGraph graph;
  CoveringData data;
  std::vector<int> klass;      // class index, -1 for arrowheads
  std::vector<int> arrowhead;  // arrowhead vertex of the component, -1 for classes
  std::vector<Int> multiplicity;  // m(K) for classes, 1 for arrowheads

  bool is_arrow(int v) const { return arrowhead[v] >= 0; }
};

/// Throws DomainError("cts1 violated: ...") when the quotient is not a tree or
/// the data break the covering axioms.
Quotient quotient_and_data(const GammaC& component, const KlPartition& kl);

struct TransversalReport {
  KlPartition kl;
  Quotient quotient;
  Int d = 1;
  ResGraph graph;  // G(TΣ_j)
  Int branches = 0;
  Int milnor = 0;
  std::vector<Int> arrow_nu;      // ν(e) per arrowhead of the component
  std::vector<Int> arrow_degree;  // d(e) = ν(e) / d
};

/// Throws DomainError when any structural identity fails.
TransversalReport transversal_graph(const GammaC& component);

struct Analysis {
  GammaC graph;  // normalized input
  Partition partition;
  std::vector<G1Component> g1;
  std::vector<TransversalReport> transversal;
  Int chi_coefficient = 0;  // Σ d_j μ_j
};

/// Validates, normalizes and runs every structural check. Throws DomainError
/// naming the first failure.
Analysis analyze(const GammaC& g);

/// k Σ d_j μ_j.
Int chi_correction(const GammaC& g, Int k);

/// validate() plus the structure theory checks, as one report.
ValidationReport validate_structure(const GammaC& g);

/// Vertices (m; 0, 1), arrowheads (1; 0, 1), edges weight 2 except between
/// two ends of multiplicity 1.
GammaC from_plane_curve_graph(const ResGraph& g);

}  // namespace iomdin
