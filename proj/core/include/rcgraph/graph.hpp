#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"

namespace rcg {

using VertexId = int;
using ColorId = int;

// Undirected edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw InvalidInput("self-loop edge (" + std::to_string(a) + ")");
    }

    auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..order()-1.
// Edges are kept sorted; the position of an edge in edges() is its edge index,
// used by EdgeColoring and the search routines.
class Graph {
public:
    struct Incidence {
        VertexId to;
        int edge;  // index into edges()
    };

    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::vector<Edge> edge_list);

    static Graph from_pairs(int order, const std::vector<std::pair<VertexId, VertexId>>& pairs);

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

    // Sorted by neighbor id.
    const std::vector<Incidence>& incident(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;
    int degree(VertexId v) const;

    int edge_index(VertexId u, VertexId v) const;  // -1 if absent
    bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;

    void check_vertex(VertexId v) const;
};

// Parses an edge-list document: one "u v" pair per line, '#' starts a comment,
// blank lines are ignored. Vertex ids are arbitrary unsigned integers and are
// normalized to 0..n-1 preserving numeric order. Duplicate edges are collapsed.
// Self-loops and malformed lines raise ParseError with the line number.
Graph parse_graph(std::string_view text);

// Inverse of parse_graph up to normalization: "u v" lines, sorted.
std::string serialize_graph(const Graph& g);

// Graphviz output for the bare graph.
std::string to_dot(const Graph& g);

}  // namespace rcg
