#include <json.hpp>

#include "rcgraph/json_io.hpp"

namespace rcg {

using nlohmann::json;

std::string coloring_to_json(const EdgeColoring& c, const std::optional<BoundInfo>& info,
                             bool verified, int indent) {
    json doc;
    doc["k"] = c.palette();
    json edges = json::array();
    const Graph& g = c.graph();
    for (int e = 0; e < g.size(); ++e) {
        json entry;
        entry["u"] = g.edge(e).u;
        entry["v"] = g.edge(e).v;
        entry["color"] = c.color(e);
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    if (info) {
        doc["bound"] = info->bound;
        doc["bound_kind"] = info->bound_kind;
        doc["r"] = info->even_blocks;
    }
    doc["verified"] = verified;
    return doc.dump(indent) + "\n";
}

EdgeColoring coloring_from_json(const Graph& g, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("bad coloring JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("coloring JSON needs an \"edges\" array");

    std::vector<ColorId> colors(static_cast<size_t>(g.size()), -1);
    for (const json& entry : doc["edges"]) {
        if (!entry.is_object() || !entry.contains("u") || !entry.contains("v") ||
            !entry.contains("color") || !entry["u"].is_number_integer() ||
            !entry["v"].is_number_integer() || !entry["color"].is_number_integer())
            throw ParseError("coloring JSON edge needs integer u, v, color");
        VertexId u = entry["u"].get<VertexId>();
        VertexId v = entry["v"].get<VertexId>();
        ColorId col = entry["color"].get<ColorId>();
        if (col < 0) throw InvalidInput("negative color id");
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
            throw InvalidInput("coloring mentions a vertex the graph does not have");
        int e = g.edge_index(u, v);
        if (e < 0) throw InvalidInput("coloring mentions an edge the graph does not have");
        if (colors[static_cast<size_t>(e)] != -1)
            throw InvalidInput("coloring assigns an edge twice");
        colors[static_cast<size_t>(e)] = col;
    }
    for (int e = 0; e < g.size(); ++e)
        if (colors[static_cast<size_t>(e)] == -1)
            throw InvalidInput("coloring leaves a graph edge uncolored");

    EdgeColoring result(g, std::move(colors));
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer() || doc["k"].get<int>() != result.palette())
            throw InvalidInput("\"k\" does not match the number of distinct colors");
    }
    return result;
}

std::string decomposition_to_json(const BlockDecomposition& d, const BlockOrdering& o,
                                  const std::optional<EarDecomposition>& ears, int indent) {
    json doc;
    json blocks = json::array();
    for (const Block& b : d.blocks) {
        json block;
        block["vertices"] = b.vertices;
        json bedges = json::array();
        for (const Edge& e : b.edges) bedges.push_back(json::array({e.u, e.v}));
        block["edges"] = std::move(bedges);
        block["even"] = b.is_even();
        blocks.push_back(std::move(block));
    }
    doc["blocks"] = std::move(blocks);
    doc["cut_vertices"] = d.cut_vertices;
    doc["q"] = d.block_count();
    doc["r"] = d.even_block_count();
    json ordering = json::array();
    for (const BlockOrderingEntry& entry : o.sequence) {
        json item;
        item["block"] = entry.block;
        if (entry.attachment)
            item["attachment"] = *entry.attachment;
        else
            item["attachment"] = nullptr;
        ordering.push_back(std::move(item));
    }
    doc["ordering"] = std::move(ordering);
    if (ears) {
        json ed;
        ed["initial_cycle"] = ears->initial_cycle;
        ed["ears"] = ears->ears;
        doc["ears"] = std::move(ed);
    } else {
        doc["ears"] = nullptr;
    }
    return doc.dump(indent) + "\n";
}

}  // namespace rcg
