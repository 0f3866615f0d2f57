#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iomdin/gammac.hpp"
#include "iomdin/resgraph.hpp"

namespace iomdin {

/// node, cusp, three-lines (alias d4), tacnode, smooth.
std::vector<std::string> fixture_names();

/// Embedded resolution graph of the named plane curve, with multiplicities,
/// self-intersections and arrows. Throws std::invalid_argument for unknown names.
ResGraph plane_curve_fixture(std::string_view name);

/// from_plane_curve_graph(plane_curve_fixture(name)).
GammaC gammac_fixture(std::string_view name);

}  // namespace iomdin
