#pragma once

#include <string_view>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

// Coarse connectivity classification. "Two-connected" requires order >= 3 and
// no cut vertex; K2 counts as connected-with-bridges.
enum class StructureClass {
    Disconnected,
    ConnectedWithBridges,
    TwoEdgeConnectedNotTwoConnected,
    TwoConnected,
};

std::string_view to_string(StructureClass c);

bool is_connected(const Graph& g);

// Distance from src to every vertex, -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, VertexId src);

// Throws InvalidInput on disconnected input. diameter(K1) == 0.
int diameter(const Graph& g);

std::vector<VertexId> cut_vertices(const Graph& g);
std::vector<Edge> bridges(const Graph& g);

StructureClass structure_class(const Graph& g);

bool is_two_connected(const Graph& g);

}  // namespace rcg
