#include "gapbrack/graph_file.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gapbrack/errors.hpp"

namespace gapbrack {

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct RawEdge {
    VertexId tail = 0;
    VertexId head = 0;
    std::optional<double> weight;
    std::optional<double> alpha;
    std::optional<std::vector<int>> index;
    std::size_t line = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw validation_error("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

template <typename T>
T parse_number(const std::string& token, std::size_t line, const char* what) {
    std::istringstream in(token);
    T value;
    in >> value;
    if (in.fail() || !in.eof()) fail(line, std::string("cannot parse ") + what + " '" + token + "'");
    return value;
}

} // namespace

GraphDescription parse_graph_file(const std::string& text) {
    enum class Section { None, Meta, Vertices, Edges };
    Section section = Section::None;

    std::optional<std::string> scheme_name;
    std::optional<std::size_t> rank;
    std::optional<std::size_t> vertex_count;
    std::map<VertexId, double> vertex_weights;
    std::vector<RawEdge> raw_edges;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "[meta]" || tokens[0] == "[vertices]" || tokens[0] == "[edges]") {
            if (tokens.size() != 1) fail(lineno, "unexpected text after section header");
            section = tokens[0] == "[meta]"       ? Section::Meta
                      : tokens[0] == "[vertices]" ? Section::Vertices
                                                  : Section::Edges;
            continue;
        }

        switch (section) {
            case Section::None:
                fail(lineno, "content before the first section header");
            case Section::Meta:
                if (tokens[0] == "scheme" && tokens.size() == 2) {
                    if (scheme_name) fail(lineno, "duplicate scheme");
                    scheme_name = tokens[1];
                } else if (tokens[0] == "rank" && tokens.size() == 2) {
                    if (rank) fail(lineno, "duplicate rank");
                    rank = parse_number<std::size_t>(tokens[1], lineno, "rank");
                } else {
                    fail(lineno, "unknown meta entry '" + tokens[0] + "'");
                }
                break;
            case Section::Vertices:
                if (tokens[0] == "count" && tokens.size() == 2) {
                    if (vertex_count) fail(lineno, "duplicate vertex count");
                    vertex_count = parse_number<std::size_t>(tokens[1], lineno, "vertex count");
                } else if (tokens[0] == "weight" && tokens.size() == 3) {
                    VertexId v = parse_number<VertexId>(tokens[1], lineno, "vertex id");
                    if (vertex_weights.count(v)) fail(lineno, "duplicate vertex weight");
                    vertex_weights[v] = parse_number<double>(tokens[2], lineno, "vertex weight");
                } else {
                    fail(lineno, "unknown vertices entry '" + tokens[0] + "'");
                }
                break;
            case Section::Edges: {
                if (tokens[0] != "edge" || tokens.size() < 3)
                    fail(lineno, "expected 'edge <tail> <head> [fields]'");
                RawEdge e;
                e.line = lineno;
                e.tail = parse_number<VertexId>(tokens[1], lineno, "tail vertex");
                e.head = parse_number<VertexId>(tokens[2], lineno, "head vertex");
                std::size_t i = 3;
                while (i < tokens.size()) {
                    const std::string& key = tokens[i];
                    if (key == "weight") {
                        if (e.weight || i + 1 >= tokens.size()) fail(lineno, "bad weight field");
                        e.weight = parse_number<double>(tokens[i + 1], lineno, "edge weight");
                        i += 2;
                    } else if (key == "alpha") {
                        if (e.alpha || i + 1 >= tokens.size()) fail(lineno, "bad alpha field");
                        e.alpha = parse_number<double>(tokens[i + 1], lineno, "alpha");
                        i += 2;
                    } else if (key == "index") {
                        if (e.index) fail(lineno, "duplicate index field");
                        if (!rank) fail(lineno, "index field requires rank in [meta]");
                        if (i + *rank >= tokens.size())
                            fail(lineno, "index needs " + std::to_string(*rank) + " integers");
                        std::vector<int> ind;
                        for (std::size_t d = 0; d < *rank; ++d)
                            ind.push_back(
                                parse_number<int>(tokens[i + 1 + d], lineno, "index entry"));
                        e.index = std::move(ind);
                        i += 1 + *rank;
                    } else {
                        fail(lineno, "unknown edge field '" + key + "'");
                    }
                }
                raw_edges.push_back(std::move(e));
                break;
            }
        }
    }

    if (!vertex_count) throw validation_error("missing 'count' in [vertices]");
    std::string scheme = scheme_name.value_or("standard");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(raw_edges.size());
    for (const RawEdge& e : raw_edges) pairs.emplace_back(e.tail, e.head);
    Graph graph = Graph::from_pairs(*vertex_count, pairs);

    const bool takes_edge_weights =
        scheme == "normalised" || scheme == "electric" || scheme == "explicit";
    std::map<EdgeId, double> edge_weights;
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        if (raw_edges[i].weight) {
            if (!takes_edge_weights)
                fail(raw_edges[i].line,
                     "edge weights are determined by the " + scheme + " scheme");
            edge_weights[static_cast<EdgeId>(i)] = *raw_edges[i].weight;
        }
    }
    if (!vertex_weights.empty() && scheme != "explicit")
        throw validation_error("vertex weights are determined by the " + scheme + " scheme");
    for (const auto& [v, mw] : vertex_weights) {
        (void)mw;
        if (!graph.has_vertex(v))
            throw validation_error("vertex weight for unknown vertex " + std::to_string(v));
    }

    WeightScheme ws = WeightScheme::standard();
    if (scheme == "standard")
        ws = WeightScheme::standard();
    else if (scheme == "combinatorial")
        ws = WeightScheme::combinatorial();
    else if (scheme == "normalised")
        ws = WeightScheme::normalised(edge_weights);
    else if (scheme == "electric")
        ws = WeightScheme::electric(edge_weights);
    else if (scheme == "explicit")
        ws = WeightScheme::explicit_weights(vertex_weights, edge_weights);
    else
        throw validation_error("unknown weight scheme '" + scheme + "'");

    GraphDescription d;
    d.weighted = apply_weight_scheme(graph, ws);
    for (std::size_t i = 0; i < raw_edges.size(); ++i)
        if (raw_edges[i].alpha) d.alpha.set(static_cast<EdgeId>(i), *raw_edges[i].alpha);

    if (rank) {
        PeriodicQuotient q;
        q.base = d.weighted;
        q.rank = *rank;
        for (std::size_t i = 0; i < raw_edges.size(); ++i)
            if (raw_edges[i].index) q.index[static_cast<EdgeId>(i)] = *raw_edges[i].index;
        d.quotient = validate_quotient(std::move(q));
    } else {
        for (const RawEdge& e : raw_edges)
            if (e.index) fail(e.line, "index field requires rank in [meta]");
    }
    return d;
}

GraphDescription load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_file(buffer.str());
}

std::string print_graph_file(const GraphDescription& d) {
    const WeightedGraph& w = d.weighted;
    const Graph& g = w.graph();
    std::ostringstream out;
    out << "[meta]\n";
    out << "scheme " << to_string(w.scheme()) << "\n";
    if (d.quotient) out << "rank " << d.quotient->rank << "\n";
    out << "\n[vertices]\n";
    out << "count " << g.vertex_count() << "\n";
    if (w.scheme() == WeightKind::Explicit)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << "weight " << v << " " << format_number(w.vertex_weight(v)) << "\n";
    out << "\n[edges]\n";
    const bool with_weights = w.scheme() == WeightKind::Normalised ||
                              w.scheme() == WeightKind::Electric ||
                              w.scheme() == WeightKind::Explicit;
    for (const Edge& e : g.edges()) {
        out << "edge " << e.tail << " " << e.head;
        if (with_weights) out << " weight " << format_number(w.edge_weight(e.id));
        if (double a = d.alpha.angle(e.id); a != 0.0) out << " alpha " << format_number(a);
        if (d.quotient) {
            std::vector<int> ind = d.quotient->edge_index(e.id);
            bool nonzero = std::any_of(ind.begin(), ind.end(), [](int c) { return c != 0; });
            if (nonzero) {
                out << " index";
                for (int c : ind) out << " " << c;
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace gapbrack
