#pragma once

// Internal exhaustive search over edge colorings, canonical up to relabeling.

#include <functional>
#include <optional>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg::detail {

// First rainbow coloring of g using exactly k colors, in canonical
// enumeration order (color ids appear in increasing order of first use).
// When `extra` is set, only colorings satisfying it are accepted.
// Requires k >= 1 and g.size() <= kExactSearchEdgeLimit (checked by callers).
std::optional<std::vector<ColorId>> find_rainbow_coloring_raw(
    const Graph& g, int k,
    const std::function<bool(const std::vector<ColorId>&)>& extra = nullptr);

}  // namespace rcg::detail
