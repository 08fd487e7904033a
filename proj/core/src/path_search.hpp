#pragma once

// Internal rainbow-path search over a possibly partial edge coloring.
// colors[edge] == kUncolored marks edges that are absent for the search.

#include <optional>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg::detail {

inline constexpr ColorId kUncolored = -1;

// Is there a u-v path with pairwise distinct colors, none equal to
// `forbidden` (pass kUncolored for no constraint)?
bool rainbow_path_exists(const Graph& g, const std::vector<ColorId>& colors, int palette,
                         VertexId u, VertexId v, ColorId forbidden);

// Shortest rainbow u-v path of length <= max_len, lexicographically least
// among shortest; nullopt if none. u == v gives the trivial path {u}.
std::optional<std::vector<VertexId>> shortest_rainbow_path(const Graph& g,
                                                           const std::vector<ColorId>& colors,
                                                           int palette, VertexId u, VertexId v,
                                                           int max_len);

// All-pairs rainbow connectivity over a fully assigned raw color vector.
bool is_rainbow_raw(const Graph& g, const std::vector<ColorId>& colors, int palette);

}  // namespace rcg::detail
