#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace gapbrack {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Directed edge: tail is the initial vertex, head the terminal one.
/// Loops (tail == head) are allowed and count twice towards the degree.
struct Edge {
    EdgeId id;
    VertexId tail;
    VertexId head;

    bool is_loop() const { return tail == head; }
};

/// Returns the endpoint of `e` opposite to `v`; for a loop this is `v` itself.
VertexId opposite_endpoint(const Edge& e, VertexId v);

/// Finite directed multigraph with loops. Edge ids are stable: removing
/// edges never renumbers the survivors, so data keyed by edge id (weights,
/// vector potentials, periodicity indices) stays valid across subgraph
/// operations.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    /// Build from (tail, head) pairs; ids are assigned 0..|E|-1 in input order.
    static Graph from_pairs(std::size_t vertex_count,
                            const std::vector<std::pair<VertexId, VertexId>>& pairs);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return v < vertex_count_; }
    bool has_edge(EdgeId id) const;
    const Edge& edge(EdgeId id) const;

    /// |E_v^+| + |E_v^-|; a loop contributes 2.
    std::size_t degree(VertexId v) const;

    /// Incident edge ids in ascending order; a loop is listed once.
    const std::vector<EdgeId>& incident(VertexId v) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;                    // ascending by id
    std::vector<std::vector<EdgeId>> incident_;  // per vertex
};

bool is_connected(const Graph& g);

/// |E| - |V| + 1. Requires a connected graph.
std::size_t betti_number(const Graph& g);

/// Connected and acyclic; any loop or multi-edge disqualifies.
bool is_tree(const Graph& g);

/// Connected with every vertex of degree exactly 2 (covers the one-vertex
/// loop and the two-vertex double edge).
bool is_cycle_graph(const Graph& g);

struct Bipartition {
    std::set<VertexId> part_a;
    std::set<VertexId> part_b;
};

/// A proper 2-colouring with every edge crossing, or nullopt if none exists.
/// Any loop makes the graph non-bipartite.
std::optional<Bipartition> bipartition(const Graph& g);

/// Deterministic spanning tree: breadth-first search from vertex 0, incident
/// edges scanned in ascending id order. Requires a connected graph.
std::vector<EdgeId> spanning_tree(const Graph& g);

/// E(V0, V \ V0): edges with exactly one endpoint in V0. Loops never qualify.
std::set<EdgeId> connecting_edges(const Graph& g, const std::set<VertexId>& v0);

/// True iff every edge of e0 has at least one endpoint in v0.
bool is_in_neighbourhood(const Graph& g, const std::set<EdgeId>& e0,
                         const std::set<VertexId>& v0);

/// Subgraph with the given edges removed; vertex set and edge ids unchanged.
Graph remove_edges(const Graph& g, const std::set<EdgeId>& e0);

} // namespace gapbrack
