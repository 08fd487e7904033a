#include <algorithm>
#include <functional>

#include "path_search.hpp"
#include "rcgraph/rainbow.hpp"

namespace rcg {

namespace detail {

namespace {

struct PathDfs {
    const Graph& g;
    const std::vector<ColorId>& colors;
    std::vector<bool> color_used;
    std::vector<bool> visited;
    VertexId target;
    ColorId forbidden;

    PathDfs(const Graph& graph, const std::vector<ColorId>& cols, int palette, VertexId t,
            ColorId forb)
        : g(graph), colors(cols), color_used(static_cast<size_t>(std::max(palette, 1)), false),
          visited(static_cast<size_t>(graph.order()), false), target(t), forbidden(forb) {}

    bool dfs(VertexId v) {
        if (v == target) return true;
        visited[static_cast<size_t>(v)] = true;
        for (const Graph::Incidence& inc : g.incident(v)) {
            ColorId c = colors[static_cast<size_t>(inc.edge)];
            if (c == kUncolored || c == forbidden) continue;
            if (visited[static_cast<size_t>(inc.to)] || color_used[static_cast<size_t>(c)])
                continue;
            color_used[static_cast<size_t>(c)] = true;
            if (dfs(inc.to)) {
                visited[static_cast<size_t>(v)] = false;
                color_used[static_cast<size_t>(c)] = false;
                return true;
            }
            color_used[static_cast<size_t>(c)] = false;
        }
        visited[static_cast<size_t>(v)] = false;
        return false;
    }
};

// Depth-limited search used by iterative deepening; records the found path.
struct BoundedPathDfs {
    const Graph& g;
    const std::vector<ColorId>& colors;
    std::vector<bool> color_used;
    std::vector<bool> visited;
    std::vector<VertexId> path;
    VertexId target;
    int limit;

    BoundedPathDfs(const Graph& graph, const std::vector<ColorId>& cols, int palette, VertexId t,
                   int max_len)
        : g(graph), colors(cols), color_used(static_cast<size_t>(std::max(palette, 1)), false),
          visited(static_cast<size_t>(graph.order()), false), target(t), limit(max_len) {}

    bool dfs(VertexId v, int depth) {
        if (v == target) return true;
        if (depth == limit) return false;
        visited[static_cast<size_t>(v)] = true;
        for (const Graph::Incidence& inc : g.incident(v)) {
            ColorId c = colors[static_cast<size_t>(inc.edge)];
            if (c == kUncolored) continue;
            if (visited[static_cast<size_t>(inc.to)] || color_used[static_cast<size_t>(c)])
                continue;
            color_used[static_cast<size_t>(c)] = true;
            path.push_back(inc.to);
            if (dfs(inc.to, depth + 1)) return true;
            path.pop_back();
            color_used[static_cast<size_t>(c)] = false;
        }
        visited[static_cast<size_t>(v)] = false;
        return false;
    }
};

}  // namespace

bool rainbow_path_exists(const Graph& g, const std::vector<ColorId>& colors, int palette,
                         VertexId u, VertexId v, ColorId forbidden) {
    if (u == v) return true;
    PathDfs search(g, colors, palette, v, forbidden);
    return search.dfs(u);
}

std::optional<std::vector<VertexId>> shortest_rainbow_path(const Graph& g,
                                                           const std::vector<ColorId>& colors,
                                                           int palette, VertexId u, VertexId v,
                                                           int max_len) {
    if (u == v) return std::vector<VertexId>{u};
    for (int limit = 1; limit <= max_len; ++limit) {
        BoundedPathDfs search(g, colors, palette, v, limit);
        search.path.push_back(u);
        if (search.dfs(u, 0)) return search.path;
    }
    return std::nullopt;
}

bool is_rainbow_raw(const Graph& g, const std::vector<ColorId>& colors, int palette) {
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!rainbow_path_exists(g, colors, palette, u, v, kUncolored)) return false;
    return true;
}

}  // namespace detail

RainbowReport verify_rainbow(const Graph& g, const EdgeColoring& c, bool collect_paths) {
    if (!(c.graph() == g)) throw InvalidInput("coloring does not belong to this graph");

    RainbowReport report;
    report.colors_used = c.palette();
    report.rainbow = true;
    for (VertexId u = 0; u < g.order() && report.rainbow; ++u) {
        for (VertexId v = u + 1; v < g.order(); ++v) {
            if (collect_paths) {
                auto path = detail::shortest_rainbow_path(g, c.colors(), c.palette(), u, v,
                                                          c.palette());
                if (path) {
                    report.witness_paths.push_back({{u, v}, *path});
                    continue;
                }
            } else if (detail::rainbow_path_exists(g, c.colors(), c.palette(), u, v,
                                                   detail::kUncolored)) {
                continue;
            }
            report.rainbow = false;
            report.failing_pair = {u, v};
            report.witness_paths.clear();
            break;
        }
    }
    return report;
}

bool verify_rooted_property(const Graph& g, const RootedColoring& rc) {
    const EdgeColoring& c = rc.coloring;
    if (!(c.graph() == g)) throw InvalidInput("coloring does not belong to this graph");
    if (rc.reserved_color < 0 || rc.reserved_color >= c.palette())
        throw InvalidInput("reserved color outside palette");
    if (rc.root < 0 || rc.root >= g.order()) throw InvalidInput("root out of range");
    for (VertexId u = 0; u < g.order(); ++u) {
        if (u == rc.root) continue;
        if (!detail::rainbow_path_exists(g, c.colors(), c.palette(), u, rc.root,
                                         rc.reserved_color))
            return false;
    }
    return true;
}

std::optional<std::vector<VertexId>> find_incomplete_rainbow_path(const Graph& g,
                                                                  const EdgeColoring& c,
                                                                  VertexId u, VertexId v) {
    if (!(c.graph() == g)) throw InvalidInput("coloring does not belong to this graph");
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw InvalidInput("vertex out of range");
    return detail::shortest_rainbow_path(g, c.colors(), c.palette(), u, v, c.palette() - 1);
}

bool is_incomplete_coloring(const Graph& g, const EdgeColoring& c) {
    RainbowReport report = verify_rainbow(g, c);
    if (!report.rainbow) throw InvalidInput("is_incomplete_coloring requires a rainbow coloring");
    for (VertexId u = 0; u < g.order(); ++u) {
        int only_complete = 0;
        for (VertexId v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            if (!find_incomplete_rainbow_path(g, c, u, v)) ++only_complete;
        }
        if (only_complete > 1) return false;
    }
    return true;
}

}  // namespace rcg
