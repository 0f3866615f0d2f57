#pragma once

#include <utility>
#include <vector>

#include "iomdin/types.hpp"

namespace iomdin {

/// Str(α, β; M | a, b; c): the normalization of {z^M = u^α v^β} carrying the
/// function u^a v^b z^c.
struct StringSpec {
  Int alpha = 1;
  Int beta = 1;
  Int modulus = 1;
  Int a = 0;
  Int b = 0;
  Int c = 1;

  bool operator==(const StringSpec&) const = default;
};

struct ChainVertex {
  Int multiplicity = 0;
  Int self_intersection = 0;

  bool operator==(const ChainVertex&) const = default;
};

using LatticePoint = std::pair<Int, Int>;

/// Interior vertices ordered from the α end to the β end.
struct HJChain {
  std::vector<ChainVertex> vertices;
  Int end_alpha_multiplicity = 0;
  Int end_beta_multiplicity = 0;
  /// n_0, ..., n_{s+1}: the boundary lattice points, ends included.
  std::vector<LatticePoint> boundary;

  bool operator==(const HJChain&) const = default;
};

/// Throws DomainError on nonpositive α, β, M, negative exponents, all
/// exponents zero, or gcd(α, β, M) != 1.
void check_spec(const StringSpec& s);

/// Continued-fraction walk along the lattice boundary; O(chain length).
HJChain compute_string(const StringSpec& s);

/// Reference computation: enumerates the lowest lattice point of every column
/// of the box spanned by the ends and takes their lower convex hull.
HJChain hull_oracle(const StringSpec& s);

/// Exponent of u^a v^b z^c at the divisor of lattice point p.
Int multiplicity_at(const StringSpec& s, const LatticePoint& p);

}  // namespace iomdin
