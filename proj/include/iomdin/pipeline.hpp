#pragma once

#include <string>
#include <vector>

#include "iomdin/blowdown.hpp"
#include "iomdin/gammac.hpp"
#include "iomdin/hj_string.hpp"
#include "iomdin/lattice.hpp"
#include "iomdin/resgraph.hpp"

namespace iomdin {

/// Least k with kν − n ≥ 1 at every vertex (hence on every edge). Only a
/// necessary condition for the series to be in its stable range.
Int k_min(const GammaC& g);

struct VertexLift {
  Int n = 1;             // number of lifts
  Int multiplicity = 1;  // m̃
  Int genus = 0;         // g̃
};

struct Step1Result {
  Int k = 0;
  std::vector<VertexLift> vertices;  // indexed like Γ_C; arrowheads lift to one arrow
};

/// Throws DomainError("inadmissible (Γ_C, k) ...") when kν − n < 1 or the
/// genus formula does not give a nonnegative integer.
Step1Result step1(const GammaC& g, Int k);

struct EdgeLift {
  Int n = 1;
  StringSpec spec;
  int alpha_end = 0;  // Γ_C vertex glued to the α end of every string copy
  int beta_end = 0;
};

struct Step2Result {
  Int k = 0;
  std::vector<EdgeLift> edges;  // indexed like Γ_C edges
};

Step2Result step2(const GammaC& g, Int k);

/// Standard covering of Γ_C with the Step 1/2 data, each lifted edge replaced
/// by its string. Lifts are named "<id>@<i>", string vertices
/// "e<edge>#<j>.<p>"; arrows keep the arrowhead ids. Self-intersections are
/// set on string vertices only.
ResGraph assemble(const GammaC& g, const Step1Result& s1, const Step2Result& s2);

/// Solves the lift self-intersections and checks the Euler relation on the
/// whole graph.
ResGraph step3(ResGraph g);

struct ResolveOptions {
  bool force = false;
  bool minimize = true;
  BlowDownMode mode = BlowDownMode::NormalCrossing;
};

struct Resolution {
  Int k = 0;
  /// False when k < k_min was forced.
  bool verified_regime = true;
  GammaC input;       // after the extra blow-up normalization
  ResGraph embedded;  // Γ(X_k, g)
  ResGraph surface;   // Γ(X_k)
  FormSignature form; // of `surface`
};

/// Steps 1-4. Throws DomainError for invalid input, k below k_min without
/// `force`, or a surface graph that is disconnected or not negative definite.
Resolution resolve(const GammaC& g, Int k, const ResolveOptions& options = {});

/// The lifts of V¹ vertices, the edges among them and the arrows, as a
/// canonical text; by construction independent of k.
std::string stable_part(const GammaC& normalized, const ResGraph& embedded);
std::string stable_hash(const std::string& stable_form);

struct SeriesRow {
  Int k = 0;
  int vertices = 0;
  int edges = 0;
  BigInt det_abs = 1;
  bool negative_definite = false;
  int embedded_vertices = 0;  // size of Γ(X_k, g), growing with the 2-edge tails
  std::string stable_form;
  std::string stable_hash;
};

std::vector<SeriesRow> series(const GammaC& g, Int k_from, Int k_to,
                              const ResolveOptions& options = {});

}  // namespace iomdin
