#pragma once

#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

// Immutable edge coloring of a fixed graph. Color ids are dense: every color
// in 0..palette()-1 occurs on at least one edge. The colored graph is carried
// by value so a coloring is self-contained.
class EdgeColoring {
public:
    EdgeColoring() = default;

    // `per_edge[i]` colors graph.edges()[i]. Throws InvalidInput unless the
    // used colors are exactly 0..k-1.
    EdgeColoring(Graph graph, std::vector<ColorId> per_edge);

    // Remaps arbitrary non-negative color ids to a dense range, ordered by
    // first occurrence in edge-index order. If `tracked` is non-null it is
    // rewritten from the raw id to the dense id.
    static EdgeColoring from_raw(Graph graph, const std::vector<ColorId>& raw,
                                 ColorId* tracked = nullptr);

    const Graph& graph() const { return graph_; }
    const std::vector<ColorId>& colors() const { return colors_; }
    int palette() const { return palette_; }

    ColorId color(int edge_index) const { return colors_[static_cast<size_t>(edge_index)]; }
    ColorId color(VertexId u, VertexId v) const;

private:
    Graph graph_;
    std::vector<ColorId> colors_;
    int palette_ = 0;
};

// Graphviz output with color="cN" / label=N edge attributes.
std::string to_dot(const Graph& g, const EdgeColoring& c);

}  // namespace rcg
