#pragma once

#include <optional>

#include "iomdin/resgraph.hpp"

namespace iomdin {

enum class BlowDownMode {
  /// Only (-1)-curves meeting at most two other curve branches.
  NormalCrossing,
  /// Any rational (-1)-curve without a loop.
  Aggressive,
};

/// Repeatedly contracts rational (-1)-vertices without loops, lowest vertex
/// index first, until none qualifies. A neighbor met c times gains c in
/// self-intersection and c(c-1)/2 loops, so its diagonal entry grows by c²; distinct neighbors met c and c'
/// times are joined by c·c' new edges. Requires a graph without arrows.
ResGraph blow_down(ResGraph g, BlowDownMode mode = BlowDownMode::NormalCrossing);

/// A single contraction of the first qualifying vertex, or nullopt.
std::optional<ResGraph> blow_down_once(const ResGraph& g,
                                       BlowDownMode mode = BlowDownMode::NormalCrossing);

}  // namespace iomdin
