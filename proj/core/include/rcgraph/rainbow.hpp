#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcgraph/coloring.hpp"
#include "rcgraph/graph.hpp"

namespace rcg {

// Result of checking whether a coloring is rainbow: every vertex pair must be
// joined by a path whose edge colors are pairwise distinct.
struct RainbowReport {
    bool rainbow = false;
    // Lexicographically least failing pair when !rainbow.
    std::optional<std::pair<VertexId, VertexId>> failing_pair;
    // One rainbow path per pair, filled only when requested.
    std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<VertexId>>> witness_paths;
    int colors_used = 0;
};

// Throws InvalidInput if the coloring's graph does not match g.
RainbowReport verify_rainbow(const Graph& g, const EdgeColoring& c, bool collect_paths = false);

// Rainbow coloring together with a reserved color: every vertex can reach
// `root` on a rainbow path that avoids `reserved_color`.
struct RootedColoring {
    EdgeColoring coloring;
    ColorId reserved_color = 0;
    VertexId root = 0;
};

// Checks only the reserved-color reachability property above.
bool verify_rooted_property(const Graph& g, const RootedColoring& rc);

// A rainbow u-v path of length < c.palette() ("incomplete": it leaves at
// least one color unused), if any; the shortest one, found deterministically.
// u == v yields the trivial single-vertex path.
std::optional<std::vector<VertexId>> find_incomplete_rainbow_path(const Graph& g,
                                                                  const EdgeColoring& c,
                                                                  VertexId u, VertexId v);

// True iff every vertex has at most one partner it can reach only on
// full-palette rainbow paths. Requires c to be rainbow.
bool is_incomplete_coloring(const Graph& g, const EdgeColoring& c);

// --- coloring building blocks ------------------------------------------------

// Colors the cycle v0..v_{2k} with k+1 colors: x1..x_{k+1} followed by
// x1..x_k around the cycle. The reserved color is x_{k+1}: every vertex
// reaches v0 on a rainbow path avoiding it.
EdgeColoring color_odd_cycle(const std::vector<VertexId>& cycle);

// Splices an odd-length ear into a colored graph. A length 2s+1 ear gets
// s fresh colors y1..ys, then `reuse` (any color of base), then y1..ys again;
// a length-1 ear is just the reuse color. Adds s colors and preserves both
// rainbowness and any reserved-color property of the base.
EdgeColoring extend_over_odd_ear(const EdgeColoring& base, const std::vector<VertexId>& ear,
                                 ColorId reuse);

// Splices an even-length ear. A length 2s ear gets s fresh colors x1..xs,
// then `splice` (a color of base missing from some short rainbow path that
// ends at the ear's last vertex), then x1..x_{s-1}. The last fresh color xs
// becomes the new reserved color.
EdgeColoring extend_over_even_ear(const EdgeColoring& base, const std::vector<VertexId>& ear,
                                  ColorId splice);

// --- full constructions -------------------------------------------------------

// Rainbow coloring of a 2-connected graph of odd order with exactly
// ceil(n/2) colors and a reserved color avoidable on the way to root.
// Both properties are verified before returning.
RootedColoring rooted_rainbow_coloring(const Graph& g, VertexId root);

struct BoundedColoring {
    EdgeColoring coloring;
    int bound = 0;           // guaranteed palette bound for this strategy
    bool fallback_used = false;  // construction failed, exhaustive search used
};

// Rainbow coloring of a 2-connected graph (order >= 3) with at most
// ceil(n/2) colors, built over a nonincreasing ear decomposition.
BoundedColoring two_connected_coloring(const Graph& g);

// Rainbow coloring of a connected graph with at least two blocks, using
// exactly sum(floor(n_i/2)) = (n + r - 1)/2 colors where n_i are the block
// orders and r the number of even blocks.
BoundedColoring blockwise_coloring(const Graph& g);

// Palette bound for bridgeless graphs by order: 2k for n = 3k+1 or 3k+2,
// 2k+1 for n = 3k+3. Equals floor((2n-2)/3).
int bridgeless_bound(int n);

// --- exact oracle --------------------------------------------------------------

// Edge-count ceiling for the exhaustive oracle and fallback searches.
inline constexpr int kExactSearchEdgeLimit = 14;

// Smallest k such that some k-coloring of g is rainbow, found by exhaustive
// search over colorings canonical up to relabeling. k runs from diameter(g)
// upward; `cap` (0 = number of edges) bounds the search and exceeding it is
// an error. Exponential; refuses graphs with more than kExactSearchEdgeLimit
// edges.
int exact_rc(const Graph& g, int cap = 0);

// Same search, also returning the first rainbow coloring found.
std::pair<int, EdgeColoring> exact_rc_certificate(const Graph& g, int cap = 0);

}  // namespace rcg
