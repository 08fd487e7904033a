#include <algorithm>
#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "rcgraph/generators.hpp"
#include "rcgraph/structure.hpp"

namespace rcg {

namespace {

int parse_block_order(std::string_view digits, std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw InvalidInput("bad block descriptor: " + std::string(token));
    return value;
}

}  // namespace

BlockSpec BlockSpec::cycle(int m) {
    if (m < 3) throw InvalidInput("cycle block needs order >= 3");
    return {Kind::Cycle, m};
}

BlockSpec BlockSpec::clique(int m) {
    if (m < 3) throw InvalidInput("clique block needs order >= 3");
    return {Kind::Clique, m};
}

BlockSpec BlockSpec::parse(std::string_view token) {
    if (token == "k2") return k2();
    if (token.substr(0, 5) == "cycle") return cycle(parse_block_order(token.substr(5), token));
    if (token.substr(0, 6) == "clique") return clique(parse_block_order(token.substr(6), token));
    throw InvalidInput("bad block descriptor: " + std::string(token) +
                       " (expected k2, cycleM, or cliqueM)");
}

Graph block_chain(const std::vector<BlockSpec>& specs) {
    if (specs.empty()) throw InvalidInput("block chain needs at least one block");
    std::vector<Edge> edges;
    VertexId attach = 0;
    VertexId next = 1;
    for (const BlockSpec& spec : specs) {
        switch (spec.kind) {
            case BlockSpec::Kind::K2: {
                edges.emplace_back(attach, next);
                attach = next++;
                break;
            }
            case BlockSpec::Kind::Cycle: {
                VertexId prev = attach;
                VertexId exit = attach;
                for (int i = 1; i < spec.order; ++i) {
                    edges.emplace_back(prev, next);
                    if (i == spec.order / 2) exit = next;
                    prev = next++;
                }
                edges.emplace_back(prev, attach);
                attach = exit;
                break;
            }
            case BlockSpec::Kind::Clique: {
                std::vector<VertexId> members{attach};
                for (int i = 1; i < spec.order; ++i) members.push_back(next++);
                for (size_t i = 0; i < members.size(); ++i)
                    for (size_t j = i + 1; j < members.size(); ++j)
                        edges.emplace_back(members[i], members[j]);
                attach = members[1];
                break;
            }
        }
    }
    return Graph(next, std::move(edges));
}

Graph tight_block_chain(const TightChainParams& p) {
    if (p.q < 2) throw InvalidInput("q must be at least 2");
    if (p.r < 0 || p.r > p.q - 1) throw InvalidInput("r must satisfy 0 <= r <= q-1");
    if ((p.n + p.r) % 2 == 0) throw InvalidInput("n + r must be odd");
    int big = p.n - 2 * p.q + p.r + 2;
    if (big < 3) throw InvalidInput("order too small for this many blocks");

    std::vector<BlockSpec> specs;
    for (int i = 0; i < p.r; ++i) specs.push_back(BlockSpec::k2());
    for (int i = 0; i < p.q - p.r - 1; ++i) specs.push_back(BlockSpec::cycle(3));
    specs.push_back(BlockSpec::cycle(big));
    Graph g = block_chain(specs);

    if (g.order() != p.n) throw InternalError("chained order mismatch");
    if (diameter(g) != (p.n + p.r - 1) / 2) throw InternalError("chained diameter mismatch");
    return g;
}

Graph tight_bridgeless_chain(int k, int variant) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    if (variant < 1 || variant > 3) throw InvalidInput("variant must be 1, 2, or 3");

    std::vector<BlockSpec> specs;
    int cycles = (variant == 2) ? k - 1 : k;
    for (int i = 0; i < cycles; ++i) specs.push_back(BlockSpec::cycle(4));
    if (variant == 3) specs.push_back(BlockSpec::cycle(3));

    Graph g = variant == 2 && k == 1 ? Graph(1) : block_chain(specs);
    if (variant == 2) {
        // pentagon with a chord, attached at the vertex two steps from both
        // ends of the chord; keeps the diameter contribution at 2. The C4
        // chain exits at id 3(k-1)-1: each cycle adds ids 3j+1..3j+3 and
        // exits antipodally at 3j+2.
        VertexId a = k == 1 ? 0 : 3 * (k - 1) - 1;
        std::vector<Edge> edges = g.edges();
        VertexId b = g.order(), c = b + 1, d = b + 2, e = b + 3;
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        edges.emplace_back(c, d);
        edges.emplace_back(d, e);
        edges.emplace_back(e, a);
        edges.emplace_back(b, e);
        g = Graph(g.order() + 4, std::move(edges));
    }

    if (g.order() != 3 * k + variant) throw InternalError("chained order mismatch");
    int want = (variant == 3) ? 2 * k + 1 : 2 * k;
    if (diameter(g) != want) throw InternalError("chained diameter mismatch");
    return g;
}

Graph random_two_connected(int n, int extra_ears, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("order must be at least 3");
    if (extra_ears < 0) throw InvalidInput("extra_ears must be nonnegative");

    // mt19937_64 with modulo draws: a slight bias is fine for corpus work
    std::mt19937_64 rng(seed);
    auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    int cycle_len = extra_ears == 0 ? n : 3 + draw(n - 2);
    std::vector<Edge> edges;
    for (int i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
    VertexId next = cycle_len;

    int leftover = n - cycle_len;
    for (int ear = 0; ear < extra_ears; ++ear) {
        int interior = ear + 1 == extra_ears ? leftover : draw(leftover + 1);
        leftover -= interior;

        Graph current(next, edges);
        VertexId a = -1, b = -1;
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            a = draw(next);
            b = draw(next);
            if (a == b) continue;
            if (interior == 0 && current.has_edge(a, b)) continue;
            found = true;
        }
        if (!found) throw InvalidInput("budget infeasible: no room for another ear");

        VertexId prev = a;
        for (int i = 0; i < interior; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, b);
    }

    Graph g(next, std::move(edges));
    if (g.order() != n) throw InternalError("generator spent the wrong number of vertices");
    if (!is_two_connected(g)) throw InternalError("generator lost 2-connectivity");
    return g;
}

}  // namespace rcg
