#include "rcgraph/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rcgraph/structure.hpp"

namespace rcg {

int BlockDecomposition::even_block_count() const {
    return static_cast<int>(
        std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_even(); }));
}

namespace {

// Hopcroft-Tarjan biconnected components via an explicit edge stack.
struct BlockScan {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<bool> is_cut;
    std::vector<int> edge_stack;
    std::vector<std::vector<Edge>> block_edges;
    int timer = 0;

    explicit BlockScan(const Graph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.order()), -1),
          low(static_cast<size_t>(graph.order()), 0),
          is_cut(static_cast<size_t>(graph.order()), false) {}

    void pop_block(int until_edge) {
        std::vector<Edge> edges;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(g.edge(e));
            if (e == until_edge) break;
        }
        block_edges.push_back(std::move(edges));
    }

    void dfs(VertexId v, int parent_edge) {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        int children = 0;
        for (const Graph::Incidence& inc : g.incident(v)) {
            if (inc.edge == parent_edge) continue;
            size_t to = static_cast<size_t>(inc.to);
            if (disc[to] < 0) {
                ++children;
                edge_stack.push_back(inc.edge);
                dfs(inc.to, inc.edge);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[to]);
                if (low[to] >= disc[static_cast<size_t>(v)]) {
                    if (parent_edge != -1 || children > 1) is_cut[static_cast<size_t>(v)] = true;
                    pop_block(inc.edge);
                }
            } else if (disc[to] < disc[static_cast<size_t>(v)]) {
                edge_stack.push_back(inc.edge);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[to]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (g.order() < 2) throw InvalidInput("block decomposition requires order >= 2");
    if (!is_connected(g)) throw InvalidInput("block decomposition requires a connected graph");

    BlockScan scan(g);
    scan.dfs(0, -1);

    BlockDecomposition d;
    for (auto& edges : scan.block_edges) {
        Block b;
        std::set<VertexId> verts;
        for (const Edge& e : edges) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        b.vertices.assign(verts.begin(), verts.end());
        std::sort(edges.begin(), edges.end());
        b.edges = std::move(edges);
        d.blocks.push_back(std::move(b));
    }
    std::sort(d.blocks.begin(), d.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    for (VertexId v = 0; v < g.order(); ++v)
        if (scan.is_cut[static_cast<size_t>(v)]) d.cut_vertices.push_back(v);
    return d;
}

BlockOrdering block_ordering(const BlockDecomposition& d) {
    const int q = d.block_count();
    if (q == 0) throw InvalidInput("empty decomposition");

    int root = 0;
    for (int i = 0; i < q; ++i) {
        if (d.blocks[static_cast<size_t>(i)].is_even()) {
            root = i;
            break;
        }
    }

    // cut vertex -> blocks containing it
    std::map<VertexId, std::vector<int>> at_cut;
    for (int i = 0; i < q; ++i)
        for (VertexId v : d.blocks[static_cast<size_t>(i)].vertices)
            if (std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v))
                at_cut[v].push_back(i);

    BlockOrdering ordering;
    std::vector<bool> placed(static_cast<size_t>(q), false);
    ordering.sequence.push_back({root, std::nullopt});
    placed[static_cast<size_t>(root)] = true;
    // Breadth-first over the block-cut tree so each block attaches to the
    // prefix in exactly one (cut) vertex.
    for (size_t head = 0; head < ordering.sequence.size(); ++head) {
        int b = ordering.sequence[head].block;
        for (VertexId v : d.blocks[static_cast<size_t>(b)].vertices) {
            auto it = at_cut.find(v);
            if (it == at_cut.end()) continue;
            for (int other : it->second) {
                if (!placed[static_cast<size_t>(other)]) {
                    placed[static_cast<size_t>(other)] = true;
                    ordering.sequence.push_back({other, v});
                }
            }
        }
    }
    if (static_cast<int>(ordering.sequence.size()) != q)
        throw InternalError("block-cut tree traversal missed a block");
    return ordering;
}

namespace {

// Exhaustive search for the longest cycle through root; ties broken by
// lexicographically least vertex sequence starting at root.
struct CycleSearch {
    const Graph& g;
    VertexId root;
    std::vector<bool> on_path;
    std::vector<VertexId> path;
    std::vector<VertexId> best;

    CycleSearch(const Graph& graph, VertexId r)
        : g(graph), root(r), on_path(static_cast<size_t>(graph.order()), false) {}

    void consider() {
        if (path.size() < 3) return;
        if (path.size() > best.size() || (path.size() == best.size() && path < best)) best = path;
    }

    void dfs(VertexId v) {
        for (const Graph::Incidence& inc : g.incident(v)) {
            if (inc.to == root && path.size() >= 3) consider();
            if (on_path[static_cast<size_t>(inc.to)]) continue;
            on_path[static_cast<size_t>(inc.to)] = true;
            path.push_back(inc.to);
            dfs(inc.to);
            path.pop_back();
            on_path[static_cast<size_t>(inc.to)] = false;
        }
    }

    std::vector<VertexId> run() {
        on_path[static_cast<size_t>(root)] = true;
        path.push_back(root);
        dfs(root);
        return best;
    }
};

// Longest open ear with endpoints in `anchored`, interior outside it, using
// only unused edges; ties by lexicographically least vertex sequence.
struct EarSearch {
    const Graph& g;
    const std::vector<bool>& anchored;   // vertex is in the built-up subgraph
    const std::vector<bool>& edge_used;
    std::vector<bool> on_path;
    std::vector<VertexId> path;
    std::vector<VertexId> best;

    EarSearch(const Graph& graph, const std::vector<bool>& anchor, const std::vector<bool>& used)
        : g(graph), anchored(anchor), edge_used(used),
          on_path(static_cast<size_t>(graph.order()), false) {}

    void consider() {
        if (path.size() > best.size() || (path.size() == best.size() && path < best)) best = path;
    }

    void dfs(VertexId v) {
        for (const Graph::Incidence& inc : g.incident(v)) {
            if (edge_used[static_cast<size_t>(inc.edge)]) continue;
            if (on_path[static_cast<size_t>(inc.to)]) continue;
            if (anchored[static_cast<size_t>(inc.to)]) {
                path.push_back(inc.to);
                consider();
                path.pop_back();
                continue;
            }
            on_path[static_cast<size_t>(inc.to)] = true;
            path.push_back(inc.to);
            dfs(inc.to);
            path.pop_back();
            on_path[static_cast<size_t>(inc.to)] = false;
        }
    }

    std::vector<VertexId> run() {
        for (VertexId a = 0; a < g.order(); ++a) {
            if (!anchored[static_cast<size_t>(a)]) continue;
            on_path[static_cast<size_t>(a)] = true;
            path.push_back(a);
            dfs(a);
            path.pop_back();
            on_path[static_cast<size_t>(a)] = false;
        }
        return best;
    }
};

}  // namespace

EarDecomposition ear_decomposition(const Graph& g, VertexId root) {
    if (root < 0 || root >= g.order()) throw InvalidInput("root out of range");
    if (!is_two_connected(g)) throw InvalidInput("ear decomposition requires a 2-connected graph");
    if (g.order() > kEarSearchOrderCap)
        throw SearchLimit("ear decomposition is exhaustive; order capped at " +
                          std::to_string(kEarSearchOrderCap));

    EarDecomposition out;
    out.initial_cycle = CycleSearch(g, root).run();
    if (out.initial_cycle.empty()) throw InternalError("2-connected graph without a cycle");

    std::vector<bool> anchored(static_cast<size_t>(g.order()), false);
    std::vector<bool> edge_used(static_cast<size_t>(g.size()), false);
    for (size_t i = 0; i < out.initial_cycle.size(); ++i) {
        VertexId a = out.initial_cycle[i];
        VertexId b = out.initial_cycle[(i + 1) % out.initial_cycle.size()];
        anchored[static_cast<size_t>(a)] = true;
        edge_used[static_cast<size_t>(g.edge_index(a, b))] = true;
    }

    int used_count = static_cast<int>(out.initial_cycle.size());
    int prev_len = g.size();  // effectively unbounded for the first ear
    while (used_count < g.size()) {
        std::vector<VertexId> ear = EarSearch(g, anchored, edge_used).run();
        if (ear.size() < 2) throw InternalError("no open ear found in a 2-connected remainder");
        int len = static_cast<int>(ear.size()) - 1;
        if (len > prev_len)
            throw InternalError("greedy ear extraction produced an increasing length");
        prev_len = len;
        for (size_t i = 0; i + 1 < ear.size(); ++i) {
            edge_used[static_cast<size_t>(g.edge_index(ear[i], ear[i + 1]))] = true;
            ++used_count;
        }
        for (VertexId v : ear) anchored[static_cast<size_t>(v)] = true;
        out.ears.push_back(std::move(ear));
    }
    return out;
}

}  // namespace rcg
