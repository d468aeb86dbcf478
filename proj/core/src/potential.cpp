#include "gapbrack/potential.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "gapbrack/errors.hpp"

namespace gapbrack {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double angle_tol = 1e-12;
} // namespace

double normalise_angle(double a) {
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    if (r < angle_tol || two_pi - r < angle_tol) r = 0.0;
    return r;
}

double circular_distance(double a, double b) {
    double d = std::fabs(normalise_angle(a) - normalise_angle(b));
    return std::min(d, two_pi - d);
}

double VectorPotential::angle(EdgeId id) const {
    auto it = values_.find(id);
    return it == values_.end() ? 0.0 : it->second;
}

VectorPotential& VectorPotential::set(EdgeId id, double angle) {
    double a = normalise_angle(angle);
    if (a == 0.0)
        values_.erase(id);
    else
        values_[id] = a;
    return *this;
}

void VectorPotential::validate_against(const Graph& g) const {
    for (const auto& [id, a] : values_) {
        (void)a;
        if (!g.has_edge(id))
            throw validation_error("vector potential keyed on unknown edge " +
                                   std::to_string(id));
    }
}

double GaugeFunction::angle(VertexId v) const {
    auto it = values_.find(v);
    return it == values_.end() ? 0.0 : it->second;
}

GaugeFunction& GaugeFunction::set(VertexId v, double angle) {
    double a = normalise_angle(angle);
    if (a == 0.0)
        values_.erase(v);
    else
        values_[v] = a;
    return *this;
}

VectorPotential gauge_transform(const Graph& g, const VectorPotential& alpha,
                                const GaugeFunction& phi) {
    alpha.validate_against(g);
    VectorPotential out;
    for (const Edge& e : g.edges())
        out.set(e.id, alpha.angle(e.id) + phi.angle(e.head) - phi.angle(e.tail));
    return out;
}

std::pair<VectorPotential, GaugeFunction> reduce_support(const Graph& g,
                                                         const VectorPotential& alpha) {
    alpha.validate_against(g);
    std::vector<EdgeId> tree = spanning_tree(g);  // errors on disconnected input
    std::set<EdgeId> tree_set(tree.begin(), tree.end());

    // Solve phi along the tree from vertex 0 so each tree edge cancels:
    // alpha_e + phi(head) - phi(tail) = 0.
    GaugeFunction phi;
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId id : g.incident(v)) {
            if (tree_set.count(id) == 0) continue;
            const Edge& e = g.edge(id);
            VertexId w = opposite_endpoint(e, v);
            if (seen[w]) continue;
            seen[w] = true;
            if (w == e.head)
                phi.set(w, phi.angle(v) - alpha.angle(id));
            else
                phi.set(w, phi.angle(v) + alpha.angle(id));
            queue.push(w);
        }
    }

    VectorPotential reduced;
    for (const Edge& e : g.edges()) {
        if (tree_set.count(e.id) > 0) continue;  // exactly zero by construction
        reduced.set(e.id, alpha.angle(e.id) + phi.angle(e.head) - phi.angle(e.tail));
    }
    return {reduced, phi};
}

} // namespace gapbrack
