#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "exact_detail.hpp"
#include "path_search.hpp"
#include "rcgraph/rainbow.hpp"
#include "rcgraph/structure.hpp"

namespace rcg {

namespace detail {

namespace {

// Backtracking enumeration of colorings canonical up to relabeling: a color
// id may only be introduced once all smaller ids appear on earlier edges.
// Prunes branches that cannot reach k distinct colors and bridge edges that
// repeat another bridge's color (bridges lie on a common path, so a rainbow
// coloring gives them pairwise distinct colors).
struct Enumerator {
    const Graph& g;
    int m;
    int k;
    const std::function<bool(const std::vector<ColorId>&)>& extra;
    std::vector<ColorId> colors;
    std::vector<char> bridge_edge;
    std::vector<int> bridge_uses;
    std::vector<std::pair<VertexId, VertexId>> pairs;  // farthest first

    Enumerator(const Graph& graph, int palette,
               const std::function<bool(const std::vector<ColorId>&)>& pred)
        : g(graph), m(graph.size()), k(palette), extra(pred),
          colors(static_cast<size_t>(graph.size()), -1),
          bridge_edge(static_cast<size_t>(graph.size()), 0),
          bridge_uses(static_cast<size_t>(palette), 0) {
        for (const Edge& e : bridges(g)) bridge_edge[static_cast<size_t>(g.edge_index(e.u, e.v))] = 1;
        std::vector<std::pair<int, std::pair<VertexId, VertexId>>> order;
        for (VertexId u = 0; u < g.order(); ++u) {
            std::vector<int> dist = bfs_distances(g, u);
            for (VertexId v = u + 1; v < g.order(); ++v)
                order.push_back({-dist[static_cast<size_t>(v)], {u, v}});
        }
        std::sort(order.begin(), order.end());
        pairs.reserve(order.size());
        for (const auto& entry : order) pairs.push_back(entry.second);
    }

    bool rainbow_dfs(VertexId x, VertexId target, std::uint32_t color_mask,
                     std::uint32_t vertex_mask) const {
        if (x == target) return true;
        for (const Graph::Incidence& inc : g.incident(x)) {
            std::uint32_t cb = 1u << colors[static_cast<size_t>(inc.edge)];
            std::uint32_t vb = 1u << static_cast<unsigned>(inc.to);
            if ((color_mask & cb) || (vertex_mask & vb)) continue;
            if (rainbow_dfs(inc.to, target, color_mask | cb, vertex_mask | vb)) return true;
        }
        return false;
    }

    bool verify() const {
        for (const auto& [u, v] : pairs)
            if (!rainbow_dfs(u, v, 0, 1u << static_cast<unsigned>(u))) return false;
        return true;
    }

    bool step(int e, int used) {
        if (k - used > m - e) return false;
        if (e == m) return verify() && (!extra || extra(colors));
        ColorId top = static_cast<ColorId>(std::min(used, k - 1));
        bool bridge = bridge_edge[static_cast<size_t>(e)];
        for (ColorId c = 0; c <= top; ++c) {
            if (bridge && bridge_uses[static_cast<size_t>(c)] > 0) continue;
            colors[static_cast<size_t>(e)] = c;
            if (bridge) ++bridge_uses[static_cast<size_t>(c)];
            if (step(e + 1, used + (c == used ? 1 : 0))) return true;
            if (bridge) --bridge_uses[static_cast<size_t>(c)];
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<ColorId>> find_rainbow_coloring_raw(
    const Graph& g, int k, const std::function<bool(const std::vector<ColorId>&)>& extra) {
    Enumerator en(g, k, extra);
    if (!en.step(0, 0)) return std::nullopt;
    return en.colors;
}

}  // namespace detail

namespace {

std::pair<int, std::vector<ColorId>> search_rc(const Graph& g, int cap) {
    if (!is_connected(g)) throw InvalidInput("connected graph required");
    if (cap < 0) throw InvalidInput("cap must be nonnegative");
    int m = g.size();
    if (m > kExactSearchEdgeLimit)
        throw SearchLimit("graph exceeds the exhaustive search limit of " +
                          std::to_string(kExactSearchEdgeLimit) + " edges");
    if (g.order() == 1) return {0, {}};
    if (cap == 0) cap = m;
    int lo = std::max({1, diameter(g), static_cast<int>(bridges(g).size())});
    for (int k = lo; k <= std::min(cap, m); ++k) {
        auto found = detail::find_rainbow_coloring_raw(g, k);
        if (found) return {k, std::move(*found)};
    }
    throw SearchLimit("no rainbow coloring within cap " + std::to_string(cap));
}

}  // namespace

int exact_rc(const Graph& g, int cap) { return search_rc(g, cap).first; }

std::pair<int, EdgeColoring> exact_rc_certificate(const Graph& g, int cap) {
    auto [k, colors] = search_rc(g, cap);
    return {k, EdgeColoring(g, std::move(colors))};
}

}  // namespace rcg
