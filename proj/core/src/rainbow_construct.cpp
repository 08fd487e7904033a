#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "exact_detail.hpp"
#include "path_search.hpp"
#include "rcgraph/decompose.hpp"
#include "rcgraph/rainbow.hpp"
#include "rcgraph/structure.hpp"

namespace rcg {

namespace {

using detail::kUncolored;

// Thrown when a construction step cannot proceed as planned; the entry
// points catch it and recover through merging or exhaustive search.
struct PipelineMiss {};

// x1..x_{k+1} then x1..x_k around a cycle of length 2k+1; ids 0-based, so
// the reserved color x_{k+1} is id k.
std::vector<ColorId> odd_cycle_pattern(int len) {
    int k = (len - 1) / 2;
    std::vector<ColorId> pat;
    pat.reserve(static_cast<size_t>(len));
    for (ColorId i = 0; i <= k; ++i) pat.push_back(i);
    for (ColorId i = 0; i < k; ++i) pat.push_back(i);
    return pat;
}

// Antipodal coloring of a cycle of length 2k: edges i and i+k share color i.
std::vector<ColorId> even_cycle_pattern(int len) {
    int k = len / 2;
    std::vector<ColorId> pat;
    pat.reserve(static_cast<size_t>(len));
    for (int rep = 0; rep < 2; ++rep)
        for (ColorId i = 0; i < k; ++i) pat.push_back(i);
    return pat;
}

// Ear color at position i (0-based) for an ear of length len starting at
// fresh id `next`: s fresh colors, the handed-in old color, then the same
// fresh colors again (one fewer for even ears).
ColorId ear_color(int i, int len, int next, ColorId old_color) {
    int s = len / 2;
    if (i < s) return next + i;
    if (i == s) return old_color;
    return next + (i - s - 1);
}

int densify(std::vector<ColorId>& colors) {
    std::map<ColorId, ColorId> remap;
    for (ColorId& c : colors) {
        if (c < 0) throw InternalError("edge left uncolored");
        auto it = remap.try_emplace(c, static_cast<ColorId>(remap.size())).first;
        c = it->second;
    }
    return static_cast<int>(remap.size());
}

// Recolors edges of duplicated colors with fresh ones until `target` colors
// are in use. Keeps rainbowness and reserved-color validity: the touched
// edge gets a color no other edge has.
int pad_raw(std::vector<ColorId>& colors, int palette, int target) {
    while (palette < target) {
        std::vector<int> count(static_cast<size_t>(palette), 0);
        for (ColorId c : colors) ++count[static_cast<size_t>(c)];
        bool padded = false;
        for (ColorId& c : colors) {
            if (count[static_cast<size_t>(c)] >= 2) {
                c = palette++;
                padded = true;
                break;
            }
        }
        if (!padded) throw InternalError("cannot pad: every color is already unique");
    }
    return palette;
}

struct PipelineOutcome {
    std::vector<ColorId> colors;
    int palette = 0;
    ColorId reserved = kUncolored;
    bool fallback = false;
};

// Colors the graph along its ear decomposition. Length-2 ears are batched
// onto two shared colors once their number reaches `batch_threshold`.
PipelineOutcome attempt_ears(const Graph& g, const EarDecomposition& ed, int batch_threshold) {
    PipelineOutcome out;
    out.colors.assign(static_cast<size_t>(g.size()), kUncolored);
    int next = 0;

    auto set_color = [&](VertexId u, VertexId v, ColorId c) {
        out.colors[static_cast<size_t>(g.edge_index(u, v))] = c;
    };

    const std::vector<VertexId>& cycle = ed.initial_cycle;
    int clen = static_cast<int>(cycle.size());
    VertexId root = cycle.front();
    std::vector<ColorId> pat = (clen % 2) ? odd_cycle_pattern(clen) : even_cycle_pattern(clen);
    for (int i = 0; i < clen; ++i)
        set_color(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>((i + 1) % clen)],
                  pat[static_cast<size_t>(i)]);
    next = (clen + 1) / 2;
    if (clen % 2) out.reserved = (clen - 1) / 2;

    std::vector<char> present(static_cast<size_t>(g.order()), 0);
    for (VertexId v : cycle) present[static_cast<size_t>(v)] = 1;

    int two_count = 0;
    for (size_t i = 0; i < ed.ears.size(); ++i)
        if (ed.ear_length(static_cast<int>(i)) == 2) ++two_count;
    bool batch = two_count >= batch_threshold;
    ColorId batch_first = kUncolored, batch_second = kUncolored;
    std::vector<char> pre_batch;

    for (const std::vector<VertexId>& ear : ed.ears) {
        int len = static_cast<int>(ear.size()) - 1;
        if (batch && len == 2) {
            if (batch_first == kUncolored) {
                batch_first = next++;
                batch_second = next++;
                out.reserved = batch_second;
                pre_batch = present;
            }
            // the shared-pair pattern routes through the graph built before
            // any length-2 ear, so both endpoints must already be part of it
            if (!pre_batch[static_cast<size_t>(ear.front())] ||
                !pre_batch[static_cast<size_t>(ear.back())])
                throw PipelineMiss{};
            set_color(ear[0], ear[1], batch_first);
            set_color(ear[1], ear[2], batch_second);
        } else if (len % 2 == 1) {
            for (int i = 0; i < len; ++i)
                set_color(ear[static_cast<size_t>(i)], ear[static_cast<size_t>(i + 1)],
                          ear_color(i, len, next, 0));
            next += len / 2;
        } else {
            // splice color: one missing from a short rainbow path that ends
            // where the ear's recolored half begins
            std::vector<VertexId> oriented = ear;
            auto path = detail::shortest_rainbow_path(g, out.colors, next, root, oriented.back(),
                                                      next - 1);
            if (!path) {
                std::reverse(oriented.begin(), oriented.end());
                path = detail::shortest_rainbow_path(g, out.colors, next, root, oriented.back(),
                                                     next - 1);
            }
            if (!path) throw PipelineMiss{};
            std::vector<char> on_path(static_cast<size_t>(next), 0);
            for (size_t i = 0; i + 1 < path->size(); ++i) {
                int e = g.edge_index((*path)[i], (*path)[i + 1]);
                on_path[static_cast<size_t>(out.colors[static_cast<size_t>(e)])] = 1;
            }
            ColorId splice = 0;
            while (on_path[static_cast<size_t>(splice)]) ++splice;
            for (int i = 0; i < len; ++i)
                set_color(oriented[static_cast<size_t>(i)], oriented[static_cast<size_t>(i + 1)],
                          ear_color(i, len, next, splice));
            out.reserved = next + len / 2 - 1;
            next += len / 2;
        }
        for (size_t i = 1; i + 1 < ear.size(); ++i) present[static_cast<size_t>(ear[i])] = 1;
    }
    out.palette = next;
    return out;
}

// Repeatedly merges two color classes while the coloring stays rainbow.
bool merge_down(const Graph& g, PipelineOutcome& out, int bound) {
    while (out.palette > bound) {
        bool merged = false;
        for (ColorId a = 0; a < out.palette && !merged; ++a) {
            for (ColorId b = a + 1; b < out.palette && !merged; ++b) {
                std::vector<ColorId> trial = out.colors;
                for (ColorId& c : trial) {
                    if (c == b)
                        c = a;
                    else if (c > b)
                        --c;
                }
                if (detail::is_rainbow_raw(g, trial, out.palette - 1)) {
                    out.colors = std::move(trial);
                    --out.palette;
                    out.reserved = kUncolored;
                    merged = true;
                }
            }
        }
        if (!merged) return false;
    }
    return true;
}

// Exhaustive rescue: a rainbow coloring with exactly `bound` colors.
PipelineOutcome exhaustive_rescue(const Graph& g, int bound) {
    if (g.size() > kExactSearchEdgeLimit)
        throw SearchLimit("construction failed and the graph has too many edges for search");
    auto found = detail::find_rainbow_coloring_raw(g, bound);
    if (!found) throw InternalError("no rainbow coloring within the guaranteed bound");
    PipelineOutcome out;
    out.colors = *found;
    out.palette = bound;
    out.fallback = true;
    return out;
}

// Full ear pipeline with a guaranteed bound: construct, then repair any
// miss by merging color classes or exhaustive search.
PipelineOutcome run_pipeline(const Graph& g, VertexId root, int batch_threshold, int bound) {
    try {
        EarDecomposition ed = ear_decomposition(g, root);
        PipelineOutcome out = attempt_ears(g, ed, batch_threshold);
        if (out.palette > bound) {
            out.fallback = true;
            if (!merge_down(g, out, bound)) return exhaustive_rescue(g, bound);
        }
        if (!detail::is_rainbow_raw(g, out.colors, out.palette)) return exhaustive_rescue(g, bound);
        return out;
    } catch (const PipelineMiss&) {
        return exhaustive_rescue(g, bound);
    } catch (const SearchLimit&) {
        return exhaustive_rescue(g, bound);
    }
}

std::optional<ColorId> find_reserved_color(const Graph& g, const std::vector<ColorId>& colors,
                                           int palette, VertexId root) {
    for (ColorId x = 0; x < palette; ++x) {
        bool ok = true;
        for (VertexId u = 0; u < g.order() && ok; ++u) {
            if (u == root) continue;
            ok = detail::rainbow_path_exists(g, colors, palette, u, root, x);
        }
        if (ok) return x;
    }
    return std::nullopt;
}

// Graph extended by a new ear, with the base colors carried over.
struct EarExtension {
    Graph graph;
    std::vector<ColorId> colors;
};

EarExtension extend_graph(const EdgeColoring& base, const std::vector<VertexId>& ear) {
    const Graph& bg = base.graph();
    int len = static_cast<int>(ear.size()) - 1;
    if (len < 1) throw InvalidInput("ear needs at least one edge");
    if (ear.front() == ear.back()) throw InvalidInput("ear endpoints must differ");
    for (size_t i = 0; i < ear.size(); ++i) {
        bool endpoint = i == 0 || i + 1 == ear.size();
        if (endpoint && (ear[i] < 0 || ear[i] >= bg.order()))
            throw InvalidInput("ear endpoint is not a base vertex");
        if (!endpoint && ear[i] < bg.order())
            throw InvalidInput("ear interior vertex already exists in base");
        for (size_t j = i + 1; j < ear.size(); ++j)
            if (ear[i] == ear[j]) throw InvalidInput("ear revisits a vertex");
    }

    VertexId order = bg.order();
    for (VertexId v : ear) order = std::max(order, v + 1);
    std::vector<Edge> edges = bg.edges();
    for (int i = 0; i < len; ++i)
        edges.emplace_back(ear[static_cast<size_t>(i)], ear[static_cast<size_t>(i + 1)]);
    Graph g(order, std::move(edges));
    if (g.size() != bg.size() + len) throw InvalidInput("ear reuses an existing edge");

    std::vector<ColorId> colors(static_cast<size_t>(g.size()), kUncolored);
    for (int e = 0; e < bg.size(); ++e)
        colors[static_cast<size_t>(g.edge_index(bg.edge(e).u, bg.edge(e).v))] = base.color(e);
    return {std::move(g), std::move(colors)};
}

// Local view of one block: vertices renumbered 0..order-1 in sorted order.
struct LocalBlock {
    Graph sub;
    std::vector<int> edge_to_global;
    std::map<VertexId, VertexId> to_local;
};

LocalBlock make_local(const Graph& g, const Block& b) {
    std::map<VertexId, VertexId> to_local;
    for (size_t i = 0; i < b.vertices.size(); ++i)
        to_local.emplace(b.vertices[i], static_cast<VertexId>(i));
    std::vector<Edge> ledges;
    ledges.reserve(b.edges.size());
    for (const Edge& e : b.edges) ledges.emplace_back(to_local.at(e.u), to_local.at(e.v));
    Graph sub(static_cast<int>(b.vertices.size()), std::move(ledges));
    std::vector<int> e2g;
    e2g.reserve(static_cast<size_t>(sub.size()));
    for (int i = 0; i < sub.size(); ++i) {
        Edge le = sub.edge(i);
        e2g.push_back(g.edge_index(b.vertices[static_cast<size_t>(le.u)],
                                   b.vertices[static_cast<size_t>(le.v)]));
    }
    return {std::move(sub), std::move(e2g), std::move(to_local)};
}

}  // namespace

EdgeColoring color_odd_cycle(const std::vector<VertexId>& cycle) {
    int len = static_cast<int>(cycle.size());
    if (len < 3 || len % 2 == 0) throw InvalidInput("cycle must have odd length >= 3");
    VertexId order = 0;
    for (size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] < 0) throw InvalidInput("negative vertex id");
        order = std::max(order, cycle[i] + 1);
        for (size_t j = i + 1; j < cycle.size(); ++j)
            if (cycle[i] == cycle[j]) throw InvalidInput("cycle revisits a vertex");
    }
    std::vector<Edge> edges;
    edges.reserve(cycle.size());
    for (int i = 0; i < len; ++i)
        edges.emplace_back(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>((i + 1) % len)]);
    Graph g(order, std::move(edges));
    std::vector<ColorId> pat = odd_cycle_pattern(len);
    std::vector<ColorId> colors(static_cast<size_t>(len), kUncolored);
    for (int i = 0; i < len; ++i) {
        int e = g.edge_index(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>((i + 1) % len)]);
        colors[static_cast<size_t>(e)] = pat[static_cast<size_t>(i)];
    }
    return EdgeColoring(std::move(g), std::move(colors));
}

EdgeColoring extend_over_odd_ear(const EdgeColoring& base, const std::vector<VertexId>& ear,
                                 ColorId reuse) {
    int len = static_cast<int>(ear.size()) - 1;
    if (len % 2 == 0) throw InvalidInput("even ear: use extend_over_even_ear");
    if (reuse < 0 || reuse >= base.palette()) throw InvalidInput("reuse color not present in base");
    EarExtension ext = extend_graph(base, ear);
    int next = base.palette();
    for (int i = 0; i < len; ++i) {
        int e = ext.graph.edge_index(ear[static_cast<size_t>(i)], ear[static_cast<size_t>(i + 1)]);
        ext.colors[static_cast<size_t>(e)] = ear_color(i, len, next, reuse);
    }
    return EdgeColoring(std::move(ext.graph), std::move(ext.colors));
}

EdgeColoring extend_over_even_ear(const EdgeColoring& base, const std::vector<VertexId>& ear,
                                  ColorId splice) {
    int len = static_cast<int>(ear.size()) - 1;
    if (len < 2 || len % 2 == 1) throw InvalidInput("odd ear: use extend_over_odd_ear");
    if (splice < 0 || splice >= base.palette())
        throw InvalidInput("splice color not present in base");
    EarExtension ext = extend_graph(base, ear);
    int next = base.palette();
    for (int i = 0; i < len; ++i) {
        int e = ext.graph.edge_index(ear[static_cast<size_t>(i)], ear[static_cast<size_t>(i + 1)]);
        ext.colors[static_cast<size_t>(e)] = ear_color(i, len, next, splice);
    }
    return EdgeColoring(std::move(ext.graph), std::move(ext.colors));
}

RootedColoring rooted_rainbow_coloring(const Graph& g, VertexId root) {
    if (root < 0 || root >= g.order()) throw InvalidInput("root out of range");
    if (g.order() % 2 == 0) throw InvalidInput("odd order required");
    if (!is_two_connected(g)) throw InvalidInput("2-connected graph required");

    int target = (g.order() + 1) / 2;
    PipelineOutcome out = run_pipeline(g, root, 3, target);
    out.palette = pad_raw(out.colors, out.palette, target);

    std::optional<ColorId> reserved;
    if (out.reserved != kUncolored) {
        bool ok = true;
        for (VertexId u = 0; u < g.order() && ok; ++u) {
            if (u == root) continue;
            ok = detail::rainbow_path_exists(g, out.colors, out.palette, u, root, out.reserved);
        }
        if (ok) reserved = out.reserved;
    }
    if (!reserved) reserved = find_reserved_color(g, out.colors, out.palette, root);
    if (!reserved) {
        if (g.size() > kExactSearchEdgeLimit)
            throw InternalError("no reserved color and the graph is too large for search");
        auto found = detail::find_rainbow_coloring_raw(
            g, target, [&](const std::vector<ColorId>& cand) {
                return find_reserved_color(g, cand, target, root).has_value();
            });
        if (!found) throw InternalError("no rooted rainbow coloring at the guaranteed palette");
        out.colors = *found;
        reserved = find_reserved_color(g, out.colors, target, root);
    }

    RootedColoring result{EdgeColoring(g, out.colors), *reserved, root};
    if (!verify_rainbow(g, result.coloring).rainbow)
        throw InternalError("rooted coloring failed rainbow verification");
    if (!verify_rooted_property(g, result))
        throw InternalError("rooted coloring failed reserved-color verification");
    return result;
}

BoundedColoring two_connected_coloring(const Graph& g) {
    if (!is_two_connected(g)) throw InvalidInput("2-connected graph required");
    int bound = (g.order() + 1) / 2;
    PipelineOutcome out = run_pipeline(g, 0, 2, bound);
    return {EdgeColoring(g, std::move(out.colors)), bound, out.fallback};
}

BoundedColoring blockwise_coloring(const Graph& g) {
    BlockDecomposition dec = block_decomposition(g);
    if (dec.block_count() < 2)
        throw InvalidInput("graph has a single block: use two_connected_coloring");
    BlockOrdering ord = block_ordering(dec);
    int r = dec.even_block_count();
    int bound = (g.order() + r - 1) / 2;

    std::vector<ColorId> colors(static_cast<size_t>(g.size()), kUncolored);
    int next = 0;
    bool fallback = false;

    auto apply_local = [&](const LocalBlock& lb, const std::vector<ColorId>& lc, int offset) {
        for (int i = 0; i < lb.sub.size(); ++i)
            colors[static_cast<size_t>(lb.edge_to_global[static_cast<size_t>(i)])] =
                offset + lc[static_cast<size_t>(i)];
    };
    auto smallest_present = [&]() {
        ColorId best = -1;
        for (ColorId c : colors)
            if (c != kUncolored && (best == -1 || c < best)) best = c;
        return best;
    };
    auto replace_in_block = [&](const LocalBlock& lb, ColorId from, ColorId to) {
        for (int i = 0; i < lb.sub.size(); ++i) {
            int e = lb.edge_to_global[static_cast<size_t>(i)];
            if (colors[static_cast<size_t>(e)] == from) colors[static_cast<size_t>(e)] = to;
        }
    };
    auto color_even_block = [&](const Block& b) {
        if (b.is_bridge()) {
            colors[static_cast<size_t>(g.edge_index(b.edges[0].u, b.edges[0].v))] = next++;
            return;
        }
        LocalBlock lb = make_local(g, b);
        BoundedColoring bc = two_connected_coloring(lb.sub);
        fallback = fallback || bc.fallback_used;
        std::vector<ColorId> lc = bc.coloring.colors();
        pad_raw(lc, bc.coloring.palette(), b.order() / 2);
        apply_local(lb, lc, next);
        next += b.order() / 2;
    };
    auto color_odd_block = [&](const Block& b, VertexId attachment) {
        LocalBlock lb = make_local(g, b);
        RootedColoring rooted = rooted_rainbow_coloring(lb.sub, lb.to_local.at(attachment));
        ColorId replacement = smallest_present();
        apply_local(lb, rooted.coloring.colors(), next);
        replace_in_block(lb, next + rooted.reserved_color, replacement);
        next += rooted.coloring.palette();
    };

    size_t start = 0;
    if (r >= 1) {
        color_even_block(dec.blocks[static_cast<size_t>(ord.sequence[0].block)]);
        start = 1;
    } else {
        // all blocks odd: the first two share a cut vertex and trade their
        // reserved colors for a non-reserved color of the other
        const Block& b1 = dec.blocks[static_cast<size_t>(ord.sequence[0].block)];
        const Block& b2 = dec.blocks[static_cast<size_t>(ord.sequence[1].block)];
        VertexId shared = *ord.sequence[1].attachment;
        LocalBlock l1 = make_local(g, b1);
        LocalBlock l2 = make_local(g, b2);
        RootedColoring r1 = rooted_rainbow_coloring(l1.sub, l1.to_local.at(shared));
        RootedColoring r2 = rooted_rainbow_coloring(l2.sub, l2.to_local.at(shared));
        int off1 = next;
        apply_local(l1, r1.coloring.colors(), off1);
        next += r1.coloring.palette();
        int off2 = next;
        apply_local(l2, r2.coloring.colors(), off2);
        next += r2.coloring.palette();
        ColorId keep1 = off1 + (r1.reserved_color == 0 ? 1 : 0);
        ColorId keep2 = off2 + (r2.reserved_color == 0 ? 1 : 0);
        replace_in_block(l1, off1 + r1.reserved_color, keep2);
        replace_in_block(l2, off2 + r2.reserved_color, keep1);
        start = 2;
    }
    for (size_t i = start; i < ord.sequence.size(); ++i) {
        const Block& b = dec.blocks[static_cast<size_t>(ord.sequence[i].block)];
        if (b.is_even())
            color_even_block(b);
        else
            color_odd_block(b, *ord.sequence[i].attachment);
    }

    int palette = densify(colors);
    if (palette != bound) throw InternalError("blockwise palette does not match its bound");
    EdgeColoring result(g, std::move(colors));
    if (!verify_rainbow(g, result).rainbow)
        throw InternalError("blockwise coloring failed rainbow verification");
    return {std::move(result), bound, fallback};
}

int bridgeless_bound(int n) {
    if (n < 3) throw InvalidInput("order must be at least 3");
    switch (n % 3) {
        case 1: return 2 * ((n - 1) / 3);
        case 2: return 2 * ((n - 2) / 3);
        default: return 2 * (n / 3 - 1) + 1;
    }
}

}  // namespace rcg
