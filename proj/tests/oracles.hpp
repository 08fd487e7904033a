#pragma once

// Naive reference implementations used only by tests. Everything here is
// written from the definitions, with no pruning and no code shared with the
// library, so the two sides can check each other.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rcgraph/graph.hpp"

namespace oracle {

inline std::vector<std::vector<int>> adjacency_matrix(const rcg::Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const auto& e : g.edges()) {
        a[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = 1;
        a[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] = 1;
    }
    return a;
}

// Floyd-Warshall over the full matrix.
inline std::vector<std::vector<int>> all_pairs_distances(const rcg::Graph& g) {
    const int inf = 1 << 28;
    int n = g.order();
    auto a = adjacency_matrix(g);
    std::vector<std::vector<int>> d(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), inf));
    for (int i = 0; i < n; ++i) {
        d[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
        for (int j = 0; j < n; ++j)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(j)]) d[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    std::min(d[static_cast<size_t>(i)][static_cast<size_t>(j)],
                             d[static_cast<size_t>(i)][static_cast<size_t>(k)] + d[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    return d;
}

inline bool connected(const rcg::Graph& g, const std::vector<bool>& removed_vertex,
                      int removed_edge = -1) {
    int n = g.order();
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!removed_vertex[static_cast<size_t>(v)]) { start = v; break; }
    if (start < 0) return true;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = 0; e < g.size(); ++e) {
            if (e == removed_edge) continue;
            const auto& ed = g.edge(e);
            int to = -1;
            if (ed.u == v) to = ed.v;
            else if (ed.v == v) to = ed.u;
            if (to < 0 || removed_vertex[static_cast<size_t>(to)] || seen[static_cast<size_t>(to)]) continue;
            seen[static_cast<size_t>(to)] = true;
            stack.push_back(to);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!removed_vertex[static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)]) return false;
    return true;
}

inline bool is_connected(const rcg::Graph& g) {
    return connected(g, std::vector<bool>(static_cast<size_t>(g.order()), false));
}

inline int diameter(const rcg::Graph& g) {
    auto d = all_pairs_distances(g);
    int best = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) best = std::max(best, d[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return best;
}

// Deletion-based: v is a cut vertex iff removing it disconnects the rest.
inline std::vector<rcg::VertexId> cut_vertices(const rcg::Graph& g) {
    std::vector<rcg::VertexId> out;
    if (!is_connected(g)) return out;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<bool> removed(static_cast<size_t>(g.order()), false);
        removed[static_cast<size_t>(v)] = true;
        if (!connected(g, removed)) out.push_back(v);
    }
    return out;
}

inline std::vector<rcg::Edge> bridges(const rcg::Graph& g) {
    std::vector<rcg::Edge> out;
    if (!is_connected(g)) return out;
    std::vector<bool> none(static_cast<size_t>(g.order()), false);
    for (int e = 0; e < g.size(); ++e)
        if (!connected(g, none, e)) out.push_back(g.edge(e));
    return out;
}

inline bool is_two_connected(const rcg::Graph& g) {
    return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

// All-simple-paths rainbow check: enumerates every simple path between each
// pair and accepts the pair as soon as one path has pairwise-distinct colors.
// No pruning of any kind.
struct NaiveRainbow {
    const rcg::Graph& g;
    const std::vector<rcg::ColorId>& colors;

    bool path_found = false;

    bool distinct(const std::vector<int>& edge_path) const {
        for (size_t i = 0; i < edge_path.size(); ++i)
            for (size_t j = i + 1; j < edge_path.size(); ++j)
                if (colors[static_cast<size_t>(edge_path[i])] == colors[static_cast<size_t>(edge_path[j])])
                    return false;
        return true;
    }

    void dfs(int at, int target, std::vector<bool>& visited, std::vector<int>& edge_path) {
        if (at == target) {
            if (distinct(edge_path)) path_found = true;
            return;
        }
        for (int e = 0; e < g.size(); ++e) {
            const auto& ed = g.edge(e);
            int to = -1;
            if (ed.u == at) to = ed.v;
            else if (ed.v == at) to = ed.u;
            if (to < 0 || visited[static_cast<size_t>(to)]) continue;
            visited[static_cast<size_t>(to)] = true;
            edge_path.push_back(e);
            dfs(to, target, visited, edge_path);
            edge_path.pop_back();
            visited[static_cast<size_t>(to)] = false;
        }
    }

    bool pair_ok(int u, int v) {
        path_found = false;
        std::vector<bool> visited(static_cast<size_t>(g.order()), false);
        std::vector<int> edge_path;
        visited[static_cast<size_t>(u)] = true;
        dfs(u, v, visited, edge_path);
        return path_found;
    }
};

inline bool rainbow(const rcg::Graph& g, const std::vector<rcg::ColorId>& colors) {
    NaiveRainbow nr{g, colors};
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!nr.pair_ok(u, v)) return false;
    return true;
}

// --- small graph builders -----------------------------------------------------

inline rcg::Graph path_graph(int n) {
    std::vector<rcg::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return rcg::Graph(n, std::move(e));
}

inline rcg::Graph cycle_graph(int n) {
    std::vector<rcg::Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return rcg::Graph(n, std::move(e));
}

inline rcg::Graph complete_graph(int n) {
    std::vector<rcg::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return rcg::Graph(n, std::move(e));
}

inline rcg::Graph complete_bipartite(int a, int b) {
    std::vector<rcg::Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return rcg::Graph(a + b, std::move(e));
}

// Triangle {1,2,3} plus pendant edge (0,1).
inline rcg::Graph paw() {
    return rcg::Graph(4, {rcg::Edge(0, 1), rcg::Edge(1, 2), rcg::Edge(1, 3), rcg::Edge(2, 3)});
}

// Two triangles sharing vertex 2.
inline rcg::Graph bowtie() {
    return rcg::Graph(5, {rcg::Edge(0, 1), rcg::Edge(0, 2), rcg::Edge(1, 2), rcg::Edge(2, 3),
                          rcg::Edge(2, 4), rcg::Edge(3, 4)});
}

// C5 plus one chord between two vertices at distance 2.
inline rcg::Graph house() {
    return rcg::Graph(5, {rcg::Edge(0, 1), rcg::Edge(1, 2), rcg::Edge(2, 3), rcg::Edge(3, 4),
                          rcg::Edge(4, 0), rcg::Edge(1, 4)});
}

// Hubs 0 and 1 joined by internally disjoint paths of a, b, c edges.
inline rcg::Graph theta(int a, int b, int c) {
    std::vector<rcg::Edge> e;
    int next = 2;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return rcg::Graph(next, std::move(e));
}

// C4 on {0,1,2,3} plus `ears` parallel length-2 ears between 0 and 1.
inline rcg::Graph cycle_with_parallel_ears(int ears) {
    std::vector<rcg::Edge> e{rcg::Edge(0, 1), rcg::Edge(1, 2), rcg::Edge(2, 3), rcg::Edge(3, 0)};
    for (int i = 0; i < ears; ++i) {
        e.emplace_back(0, 4 + i);
        e.emplace_back(4 + i, 1);
    }
    return rcg::Graph(4 + ears, std::move(e));
}

// K4 on {0,1,2,3} plus three length-2 ears on distinct vertex pairs.
inline rcg::Graph k4_with_three_ears() {
    auto e = complete_graph(4).edges();
    e.emplace_back(0, 4);
    e.emplace_back(4, 1);
    e.emplace_back(1, 5);
    e.emplace_back(5, 2);
    e.emplace_back(2, 6);
    e.emplace_back(6, 3);
    return rcg::Graph(7, std::move(e));
}

inline rcg::Graph star(int leaves) {
    std::vector<rcg::Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return rcg::Graph(leaves + 1, std::move(e));
}

inline std::vector<rcg::ColorId> random_colors(int m, int k, std::mt19937_64& rng) {
    std::vector<rcg::ColorId> c(static_cast<size_t>(m));
    for (auto& x : c) x = static_cast<rcg::ColorId>(rng() % static_cast<std::uint64_t>(k));
    return c;
}

}  // namespace oracle
