#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "iomdin/resgraph.hpp"

namespace iomdin {

/// Graphviz document; vertex labels read "(m) [g] e", absent decorations omitted.
std::string to_dot(const ResGraph& g, std::string_view graph_name = "G");

/// Canonical structured form: vertices, edges, arrowheads in index order.
nlohmann::ordered_json to_json(const ResGraph& g);

/// `format` is "dot" or "json"; anything else throws std::invalid_argument.
std::string export_graph(const ResGraph& g, std::string_view format);

}  // namespace iomdin
