#include "gapbrack/weights.hpp"

#include <algorithm>
#include <utility>

#include "gapbrack/errors.hpp"

namespace gapbrack {

std::string to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::Standard: return "standard";
        case WeightKind::Combinatorial: return "combinatorial";
        case WeightKind::Normalised: return "normalised";
        case WeightKind::Electric: return "electric";
        case WeightKind::Explicit: return "explicit";
    }
    return "?";
}

WeightScheme WeightScheme::standard() { return WeightScheme(WeightKind::Standard); }

WeightScheme WeightScheme::combinatorial() { return WeightScheme(WeightKind::Combinatorial); }

WeightScheme WeightScheme::normalised(std::map<EdgeId, double> edge_weights) {
    WeightScheme s(WeightKind::Normalised);
    s.edge_weights_ = std::move(edge_weights);
    return s;
}

WeightScheme WeightScheme::electric(std::map<EdgeId, double> edge_weights) {
    WeightScheme s(WeightKind::Electric);
    s.edge_weights_ = std::move(edge_weights);
    return s;
}

WeightScheme WeightScheme::explicit_weights(std::map<VertexId, double> vertex_weights,
                                            std::map<EdgeId, double> edge_weights) {
    WeightScheme s(WeightKind::Explicit);
    s.vertex_weights_ = std::move(vertex_weights);
    s.edge_weights_ = std::move(edge_weights);
    return s;
}

WeightedGraph::WeightedGraph(Graph graph, std::vector<double> vertex_weights,
                             std::map<EdgeId, double> edge_weights, WeightKind scheme)
    : graph_(std::move(graph)),
      vertex_weights_(std::move(vertex_weights)),
      edge_weights_(std::move(edge_weights)),
      scheme_(scheme) {
    if (vertex_weights_.size() != graph_.vertex_count())
        throw validation_error("vertex weight list does not match the vertex count");
    for (VertexId v = 0; v < graph_.vertex_count(); ++v)
        if (!(vertex_weights_[v] > 0.0))
            throw validation_error("vertex " + std::to_string(v) +
                                   " has a nonpositive weight");
    for (const Edge& e : graph_.edges()) {
        auto it = edge_weights_.find(e.id);
        if (it == edge_weights_.end())
            throw validation_error("edge " + std::to_string(e.id) + " has no weight");
        if (!(it->second > 0.0))
            throw validation_error("edge " + std::to_string(e.id) +
                                   " has a nonpositive weight");
    }
    if (edge_weights_.size() != graph_.edge_count())
        throw validation_error("edge weight keyed on an edge not in the graph");
    incident_weights_.assign(graph_.vertex_count(), 0.0);
    for (const Edge& e : graph_.edges()) {
        double m = edge_weights_.at(e.id);
        incident_weights_[e.tail] += m;
        incident_weights_[e.head] += m;  // a loop lands here twice in total
    }
}

double WeightedGraph::vertex_weight(VertexId v) const {
    if (!graph_.has_vertex(v)) throw validation_error("unknown vertex id " + std::to_string(v));
    return vertex_weights_[v];
}

double WeightedGraph::edge_weight(EdgeId id) const {
    auto it = edge_weights_.find(id);
    if (it == edge_weights_.end())
        throw validation_error("unknown edge id " + std::to_string(id));
    return it->second;
}

double WeightedGraph::incident_weight(VertexId v) const {
    if (!graph_.has_vertex(v)) throw validation_error("unknown vertex id " + std::to_string(v));
    return incident_weights_[v];
}

double WeightedGraph::relative_weight(VertexId v) const {
    return incident_weight(v) / vertex_weight(v);
}

double WeightedGraph::rho_infinity() const {
    double r = 0.0;
    for (VertexId v = 0; v < graph_.vertex_count(); ++v)
        r = std::max(r, relative_weight(v));
    return r;
}

WeightedGraph apply_weight_scheme(const Graph& g, const WeightScheme& scheme) {
    std::map<EdgeId, double> edge_weights;
    for (const Edge& e : g.edges()) {
        double m = 1.0;
        if (scheme.kind() == WeightKind::Normalised || scheme.kind() == WeightKind::Electric ||
            scheme.kind() == WeightKind::Explicit) {
            auto it = scheme.edge_weights().find(e.id);
            if (it != scheme.edge_weights().end()) m = it->second;
        }
        if (!(m > 0.0))
            throw validation_error("scheme supplies a nonpositive weight for edge " +
                                   std::to_string(e.id));
        edge_weights[e.id] = m;
    }
    for (const auto& [id, m] : scheme.edge_weights())
        if (!g.has_edge(id))
            throw validation_error("scheme weights unknown edge id " + std::to_string(id));

    std::vector<double> vertex_weights(g.vertex_count(), 1.0);
    switch (scheme.kind()) {
        case WeightKind::Standard:
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                std::size_t d = g.degree(v);
                if (d == 0)
                    throw validation_error(
                        "standard weights need every vertex to have positive degree; vertex " +
                        std::to_string(v) + " is isolated");
                vertex_weights[v] = static_cast<double>(d);
            }
            break;
        case WeightKind::Combinatorial:
        case WeightKind::Electric:
            break;  // all ones
        case WeightKind::Normalised:
            for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_weights[v] = 0.0;
            for (const Edge& e : g.edges()) {
                vertex_weights[e.tail] += edge_weights[e.id];
                vertex_weights[e.head] += edge_weights[e.id];
            }
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (!(vertex_weights[v] > 0.0))
                    throw validation_error(
                        "normalised weights need every vertex to have positive degree; vertex " +
                        std::to_string(v) + " is isolated");
            break;
        case WeightKind::Explicit:
            for (const auto& [v, m] : scheme.vertex_weights()) {
                if (!g.has_vertex(v))
                    throw validation_error("scheme weights unknown vertex id " +
                                           std::to_string(v));
                if (!(m > 0.0))
                    throw validation_error("scheme supplies a nonpositive weight for vertex " +
                                           std::to_string(v));
                vertex_weights[v] = m;
            }
            break;
    }
    return WeightedGraph(g, std::move(vertex_weights), std::move(edge_weights), scheme.kind());
}

} // namespace gapbrack
