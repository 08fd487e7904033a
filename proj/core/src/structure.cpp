#include "rcgraph/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace rcg {

std::string_view to_string(StructureClass c) {
    switch (c) {
        case StructureClass::Disconnected: return "disconnected";
        case StructureClass::ConnectedWithBridges: return "connected-with-bridges";
        case StructureClass::TwoEdgeConnectedNotTwoConnected:
            return "two-edge-connected-not-two-connected";
        case StructureClass::TwoConnected: return "two-connected";
    }
    return "unknown";
}

std::vector<int> bfs_distances(const Graph& g, VertexId src) {
    std::vector<int> dist(static_cast<size_t>(g.order()), -1);
    std::queue<VertexId> queue;
    dist[static_cast<size_t>(src)] = 0;
    queue.push(src);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (const Graph::Incidence& inc : g.incident(v)) {
            if (dist[static_cast<size_t>(inc.to)] < 0) {
                dist[static_cast<size_t>(inc.to)] = dist[static_cast<size_t>(v)] + 1;
                queue.push(inc.to);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
    int best = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) throw InvalidInput("diameter of a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

namespace {

// Lowpoint DFS collecting cut vertices and bridges in one pass.
struct LowpointScan {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<bool> is_cut;
    std::vector<Edge> bridge_list;
    int timer = 0;

    explicit LowpointScan(const Graph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.order()), -1),
          low(static_cast<size_t>(graph.order()), 0),
          is_cut(static_cast<size_t>(graph.order()), false) {}

    void run(VertexId root) {
        dfs(root, -1);
    }

    void dfs(VertexId v, int parent_edge) {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        int children = 0;
        for (const Graph::Incidence& inc : g.incident(v)) {
            if (inc.edge == parent_edge) continue;
            if (disc[static_cast<size_t>(inc.to)] < 0) {
                ++children;
                dfs(inc.to, inc.edge);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(inc.to)]);
                if (low[static_cast<size_t>(inc.to)] > disc[static_cast<size_t>(v)])
                    bridge_list.push_back(g.edge(inc.edge));
                if (parent_edge != -1 &&
                    low[static_cast<size_t>(inc.to)] >= disc[static_cast<size_t>(v)])
                    is_cut[static_cast<size_t>(v)] = true;
            } else {
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(inc.to)]);
            }
        }
        if (parent_edge == -1 && children > 1) is_cut[static_cast<size_t>(v)] = true;
    }
};

}  // namespace

std::vector<VertexId> cut_vertices(const Graph& g) {
    LowpointScan scan(g);
    for (VertexId v = 0; v < g.order(); ++v)
        if (scan.disc[static_cast<size_t>(v)] < 0) scan.run(v);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (scan.is_cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<Edge> bridges(const Graph& g) {
    LowpointScan scan(g);
    for (VertexId v = 0; v < g.order(); ++v)
        if (scan.disc[static_cast<size_t>(v)] < 0) scan.run(v);
    std::sort(scan.bridge_list.begin(), scan.bridge_list.end());
    return scan.bridge_list;
}

StructureClass structure_class(const Graph& g) {
    if (!is_connected(g)) return StructureClass::Disconnected;
    if (!bridges(g).empty()) return StructureClass::ConnectedWithBridges;
    if (g.order() >= 3 && cut_vertices(g).empty()) return StructureClass::TwoConnected;
    return StructureClass::TwoEdgeConnectedNotTwoConnected;
}

bool is_two_connected(const Graph& g) {
    return structure_class(g) == StructureClass::TwoConnected;
}

}  // namespace rcg
