#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

// Building block for chained graphs.
struct BlockSpec {
    enum class Kind { K2, Cycle, Clique };
    Kind kind = Kind::K2;
    int order = 2;

    static BlockSpec k2() { return {Kind::K2, 2}; }
    static BlockSpec cycle(int m);   // m >= 3
    static BlockSpec clique(int m);  // m >= 3

    // Accepts "k2", "cycleM", "cliqueM".
    static BlockSpec parse(std::string_view token);
};

// Chains the given blocks left to right, consecutive blocks sharing one cut
// vertex. Within a cycle the exit vertex is antipodal to the entry; within a
// clique it is any other vertex. The block decomposition of the result
// recovers exactly the input sequence.
Graph block_chain(const std::vector<BlockSpec>& specs);

// Parameters of the tight family for the cut-vertex bound: q blocks of which
// r are even, order n. Realized as r copies of K2, then q-r-1 triangles, then
// one odd cycle of length n-2q+r+2, chained at antipodal attachment points.
// Requires q >= 2, 0 <= r <= q-1, n+r odd, n-2q+r+2 >= 3.
// The result has diameter exactly (n+r-1)/2 (asserted).
struct TightChainParams {
    int q = 2;
    int r = 0;
    int n = 4;
};

Graph tight_block_chain(const TightChainParams& p);

// Tight family for the bridgeless bound, variant in {1,2,3}, order 3k+variant:
//   1: k copies of C4                        diameter 2k
//   2: k-1 copies of C4 plus one pentagon with a chord   diameter 2k
//   3: k copies of C4 plus one triangle      diameter 2k+1
// Chained at antipodal attachment points; order and diameter are asserted.
Graph tight_bridgeless_chain(int k, int variant);

// Random 2-connected graph: a cycle plus extra_ears random ears, spending
// exactly n vertices. Deterministic per seed. Throws InvalidInput when the
// budget is infeasible (e.g. no room for another chord).
Graph random_two_connected(int n, int extra_ears, std::uint64_t seed);

}  // namespace rcg
