#pragma once

#include <optional>
#include <string>

#include "rcgraph/coloring.hpp"
#include "rcgraph/decompose.hpp"
#include "rcgraph/rainbow.hpp"

namespace rcg {

// Bound metadata attached to a serialized coloring.
struct BoundInfo {
    int bound = 0;
    std::string bound_kind;  // "two_connected" | "theorem1" | "theorem2"
    int even_blocks = 0;     // r
};

// {"k":., "edges":[{"u":.,"v":.,"color":.},...], "bound":., "bound_kind":.,
//  "r":., "verified":.} with deterministic key order. Bound fields appear
// only when `info` is present.
std::string coloring_to_json(const EdgeColoring& c, const std::optional<BoundInfo>& info,
                             bool verified, int indent = 2);

// Parses the same document and binds it to g. Throws InvalidInput when the
// edge sets differ, ParseError on malformed JSON.
EdgeColoring coloring_from_json(const Graph& g, const std::string& text);

std::string decomposition_to_json(const BlockDecomposition& d, const BlockOrdering& o,
                                  const std::optional<EarDecomposition>& ears, int indent = 2);

}  // namespace rcg
