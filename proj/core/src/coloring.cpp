#include "rcgraph/coloring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rcgraph/errors.hpp"

namespace rcg {

EdgeColoring::EdgeColoring(Graph graph, std::vector<ColorId> per_edge)
    : graph_(std::move(graph)), colors_(std::move(per_edge)) {
    if (static_cast<int>(colors_.size()) != graph_.size())
        throw InvalidInput("coloring size does not match edge count");
    if (colors_.empty()) return;
    int max_color = -1;
    for (ColorId c : colors_) {
        if (c < 0) throw InvalidInput("negative color id");
        max_color = std::max(max_color, c);
    }
    std::vector<bool> seen(static_cast<size_t>(max_color) + 1, false);
    for (ColorId c : colors_) seen[static_cast<size_t>(c)] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw InvalidInput("color ids are not dense 0..k-1");
    palette_ = max_color + 1;
}

EdgeColoring EdgeColoring::from_raw(Graph graph, const std::vector<ColorId>& raw,
                                    ColorId* tracked) {
    std::map<ColorId, ColorId> remap;
    std::vector<ColorId> dense;
    dense.reserve(raw.size());
    for (ColorId c : raw) {
        if (c < 0) throw InvalidInput("negative color id");
        auto [it, inserted] = remap.emplace(c, static_cast<ColorId>(remap.size()));
        dense.push_back(it->second);
    }
    if (tracked) {
        auto it = remap.find(*tracked);
        if (it == remap.end()) throw InvalidInput("tracked color not present in coloring");
        *tracked = it->second;
    }
    return EdgeColoring(std::move(graph), std::move(dense));
}

ColorId EdgeColoring::color(VertexId u, VertexId v) const {
    int idx = graph_.edge_index(u, v);
    if (idx < 0)
        throw InvalidInput("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return colors_[static_cast<size_t>(idx)];
}

std::string to_dot(const Graph& g, const EdgeColoring& c) {
    if (!(c.graph() == g)) throw InvalidInput("coloring does not belong to this graph");
    std::ostringstream out;
    out << "graph G {\n";
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edge(i);
        out << "  " << e.u << " -- " << e.v << " [color=\"c" << c.color(i) << "\", label="
            << c.color(i) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace rcg
