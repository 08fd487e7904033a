#include "rcgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace rcg {

Graph::Graph(int order) : order_(order), adj_(static_cast<size_t>(std::max(order, 0))) {
    if (order < 1) throw InvalidInput("graph order must be at least 1");
}

Graph::Graph(int order, std::vector<Edge> edge_list) : Graph(order) {
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    for (const Edge& e : edge_list) {
        check_vertex(e.u);
        check_vertex(e.v);
    }
    edges_ = std::move(edge_list);
    for (int i = 0; i < size(); ++i) {
        const Edge& e = edges_[static_cast<size_t>(i)];
        adj_[static_cast<size_t>(e.u)].push_back({e.v, i});
        adj_[static_cast<size_t>(e.v)].push_back({e.u, i});
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end(),
                  [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    }
}

Graph Graph::from_pairs(int order, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
    return Graph(order, std::move(edges));
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= order_)
        throw InvalidInput("vertex id " + std::to_string(v) + " out of range [0, " +
                           std::to_string(order_) + ")");
}

const std::vector<Graph::Incidence>& Graph::incident(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const Incidence& inc : incident(v)) out.push_back(inc.to);
    return out;
}

int Graph::degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

int Graph::edge_index(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) return -1;
    Edge probe(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it == edges_.end() || !(*it == probe)) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

bool parse_vertex_token(std::string_view token, unsigned long long& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<unsigned long long, unsigned long long>> raw_edges;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError("expected two vertex ids, got " + std::to_string(tokens.size()) +
                                 " tokens",
                             line_no);
        unsigned long long a = 0, b = 0;
        if (!parse_vertex_token(tokens[0], a) || !parse_vertex_token(tokens[1], b))
            throw ParseError("vertex ids must be unsigned integers", line_no);
        if (a == b)
            throw ParseError("self-loop on vertex " + std::to_string(a), line_no);
        raw_edges.emplace_back(a, b);
    }
    if (raw_edges.empty()) throw ParseError("no edges in document");

    std::map<unsigned long long, VertexId> rank;
    for (const auto& [a, b] : raw_edges) {
        rank.emplace(a, 0);
        rank.emplace(b, 0);
    }
    VertexId next = 0;
    for (auto& [id, r] : rank) r = next++;

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) edges.emplace_back(rank.at(a), rank.at(b));
    return Graph(next, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rcg
