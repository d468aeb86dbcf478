#include "gapbrack/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "gapbrack/errors.hpp"

namespace gapbrack {

VertexId opposite_endpoint(const Edge& e, VertexId v) {
    if (v == e.tail) return e.head;
    if (v == e.head) return e.tail;
    throw validation_error("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                           std::to_string(e.id));
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    incident_.assign(vertex_count_, {});
    EdgeId prev = 0;
    bool first = true;
    for (const Edge& e : edges_) {
        if (!first && e.id == prev)
            throw validation_error("duplicate edge id " + std::to_string(e.id));
        prev = e.id;
        first = false;
        if (e.tail >= vertex_count_ || e.head >= vertex_count_)
            throw validation_error("edge " + std::to_string(e.id) + " = (" +
                                   std::to_string(e.tail) + ", " + std::to_string(e.head) +
                                   ") has an endpoint outside the vertex range 0.." +
                                   std::to_string(vertex_count_ == 0 ? 0 : vertex_count_ - 1));
        incident_[e.tail].push_back(e.id);
        if (!e.is_loop()) incident_[e.head].push_back(e.id);
    }
    for (auto& list : incident_) std::sort(list.begin(), list.end());
}

Graph Graph::from_pairs(std::size_t vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    EdgeId next = 0;
    for (const auto& [tail, head] : pairs) edges.push_back(Edge{next++, tail, head});
    return Graph(vertex_count, std::move(edges));
}

bool Graph::has_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    return it != edges_.end() && it->id == id;
}

const Edge& Graph::edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    if (it == edges_.end() || it->id != id)
        throw validation_error("unknown edge id " + std::to_string(id));
    return *it;
}

std::size_t Graph::degree(VertexId v) const {
    if (!has_vertex(v)) throw validation_error("unknown vertex id " + std::to_string(v));
    std::size_t d = 0;
    for (EdgeId id : incident_[v]) d += edge(id).is_loop() ? 2 : 1;
    return d;
}

const std::vector<EdgeId>& Graph::incident(VertexId v) const {
    if (!has_vertex(v)) throw validation_error("unknown vertex id " + std::to_string(v));
    return incident_[v];
}

namespace {

// Vertices reachable from vertex 0 (empty graph counts as connected).
std::vector<bool> reachable_from_zero(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    if (g.vertex_count() == 0) return seen;
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId id : g.incident(v)) {
            VertexId w = opposite_endpoint(g.edge(id), v);
            if (!seen[w]) {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    return seen;
}

} // namespace

bool is_connected(const Graph& g) {
    auto seen = reachable_from_zero(g);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::size_t betti_number(const Graph& g) {
    if (g.vertex_count() == 0) throw validation_error("Betti number needs a nonempty graph");
    if (!is_connected(g))
        throw validation_error("Betti number |E|-|V|+1 assumes a connected graph");
    return g.edge_count() - g.vertex_count() + 1;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() > 0 && is_connected(g) &&
           g.edge_count() + 1 == g.vertex_count();
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    if (g.edge_count() != g.vertex_count()) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (EdgeId id : g.incident(v)) {
                const Edge& e = g.edge(id);
                if (e.is_loop()) return std::nullopt;
                VertexId w = opposite_endpoint(e, v);
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        (colour[v] == 0 ? parts.part_a : parts.part_b).insert(v);
    return parts;
}

std::vector<EdgeId> spanning_tree(const Graph& g) {
    if (g.vertex_count() == 0) throw validation_error("spanning tree needs a nonempty graph");
    if (!is_connected(g)) throw validation_error("spanning tree needs a connected graph");
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<EdgeId> tree;
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId id : g.incident(v)) {
            VertexId w = opposite_endpoint(g.edge(id), v);
            if (!seen[w]) {
                seen[w] = true;
                tree.push_back(id);
                queue.push(w);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::set<EdgeId> connecting_edges(const Graph& g, const std::set<VertexId>& v0) {
    for (VertexId v : v0)
        if (!g.has_vertex(v)) throw validation_error("unknown vertex id " + std::to_string(v));
    std::set<EdgeId> result;
    for (const Edge& e : g.edges()) {
        bool tail_in = v0.count(e.tail) > 0;
        bool head_in = v0.count(e.head) > 0;
        if (tail_in != head_in) result.insert(e.id);
    }
    return result;
}

bool is_in_neighbourhood(const Graph& g, const std::set<EdgeId>& e0,
                         const std::set<VertexId>& v0) {
    for (VertexId v : v0)
        if (!g.has_vertex(v)) throw validation_error("unknown vertex id " + std::to_string(v));
    for (EdgeId id : e0) {
        const Edge& e = g.edge(id);
        if (v0.count(e.tail) == 0 && v0.count(e.head) == 0) return false;
    }
    return true;
}

Graph remove_edges(const Graph& g, const std::set<EdgeId>& e0) {
    for (EdgeId id : e0) g.edge(id);  // validates
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - e0.size());
    for (const Edge& e : g.edges())
        if (e0.count(e.id) == 0) kept.push_back(e);
    return Graph(g.vertex_count(), std::move(kept));
}

} // namespace gapbrack
