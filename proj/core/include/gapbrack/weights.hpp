#pragma once

#include <map>
#include <string>
#include <vector>

#include "gapbrack/graph.hpp"

namespace gapbrack {

enum class WeightKind { Standard, Combinatorial, Normalised, Electric, Explicit };

std::string to_string(WeightKind kind);

/// One of the canonical weightings:
///   standard       m_e = 1,     m(v) = deg v
///   combinatorial  m_e = 1,     m(v) = 1
///   normalised     m_e given,   m(v) = m(E_v)
///   electric       m_e given,   m(v) = 1
///   explicit       both given
class WeightScheme {
public:
    static WeightScheme standard();
    static WeightScheme combinatorial();
    static WeightScheme normalised(std::map<EdgeId, double> edge_weights);
    static WeightScheme electric(std::map<EdgeId, double> edge_weights);
    static WeightScheme explicit_weights(std::map<VertexId, double> vertex_weights,
                                         std::map<EdgeId, double> edge_weights);

    WeightKind kind() const { return kind_; }
    const std::map<VertexId, double>& vertex_weights() const { return vertex_weights_; }
    const std::map<EdgeId, double>& edge_weights() const { return edge_weights_; }

private:
    explicit WeightScheme(WeightKind kind) : kind_(kind) {}

    WeightKind kind_;
    std::map<VertexId, double> vertex_weights_;  // explicit only; missing = 1
    std::map<EdgeId, double> edge_weights_;      // missing = 1
};

/// Graph together with strictly positive vertex and edge weights.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(Graph graph, std::vector<double> vertex_weights,
                  std::map<EdgeId, double> edge_weights, WeightKind scheme);

    const Graph& graph() const { return graph_; }
    WeightKind scheme() const { return scheme_; }

    double vertex_weight(VertexId v) const;
    double edge_weight(EdgeId id) const;
    const std::map<EdgeId, double>& edge_weights() const { return edge_weights_; }

    /// m(E_v) = m(E_v^+) + m(E_v^-); a loop counts twice.
    double incident_weight(VertexId v) const;

    /// rho(v) = m(E_v) / m(v); zero at isolated vertices.
    double relative_weight(VertexId v) const;

    /// rho_infinity = max_v rho(v), taken over all vertices.
    double rho_infinity() const;

private:
    Graph graph_;
    std::vector<double> vertex_weights_;
    std::map<EdgeId, double> edge_weights_;
    std::vector<double> incident_weights_;
    WeightKind scheme_ = WeightKind::Standard;
};

/// Instantiate the scheme on a graph. Scheme-supplied weights must be
/// strictly positive; edge weights default to 1 where the scheme takes them.
WeightedGraph apply_weight_scheme(const Graph& g, const WeightScheme& scheme);

} // namespace gapbrack
