#pragma once

#include <optional>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

// One biconnected component. A block is either a bridge (K2) or a maximal
// 2-connected subgraph; its parity is the parity of its order.
struct Block {
    std::vector<VertexId> vertices;  // sorted
    std::vector<Edge> edges;         // sorted

    int order() const { return static_cast<int>(vertices.size()); }
    bool is_even() const { return order() % 2 == 0; }
    bool is_bridge() const { return order() == 2; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;            // sorted by vertex list
    std::vector<VertexId> cut_vertices;   // sorted

    int block_count() const { return static_cast<int>(blocks.size()); }  // q
    int even_block_count() const;                                        // r
};

struct BlockOrderingEntry {
    int block = 0;                          // index into decomposition.blocks
    std::optional<VertexId> attachment;     // cut vertex shared with the prefix
};

// Order in which blocks are pasted together: every prefix union is connected
// and each later block meets the prefix in exactly its attachment vertex.
// When an even block exists, an even block comes first.
struct BlockOrdering {
    std::vector<BlockOrderingEntry> sequence;
};

// Nonincreasing open ear decomposition: initial_cycle contains the root,
// each ear is a path whose endpoints lie in the part built so far and whose
// interior vertices are new; ear lengths never increase.
struct EarDecomposition {
    std::vector<VertexId> initial_cycle;        // cyclic vertex sequence, starts at root
    std::vector<std::vector<VertexId>> ears;    // each a vertex path, length = edges

    int ear_length(int i) const { return static_cast<int>(ears[static_cast<size_t>(i)].size()) - 1; }
};

// Requires a connected graph with order >= 2.
BlockDecomposition block_decomposition(const Graph& g);

BlockOrdering block_ordering(const BlockDecomposition& d);

// Requires a 2-connected graph, order >= 3. The initial cycle is a longest
// cycle through root and ears are extracted longest-first, ties broken by
// lexicographically least vertex sequence; both searches are exhaustive, so
// the graph order is capped (see kEarSearchOrderCap).
EarDecomposition ear_decomposition(const Graph& g, VertexId root);

inline constexpr int kEarSearchOrderCap = 24;

}  // namespace rcg
