#pragma once

#include <map>
#include <utility>

#include "gapbrack/graph.hpp"

namespace gapbrack {

/// Angles are kept in [0, 2*pi); anything within 1e-12 of a full turn
/// collapses to zero so that exact supports stay exact.
double normalise_angle(double a);

/// Distance on the circle R / 2*pi*Z.
double circular_distance(double a, double b);

/// Edge -> angle map; missing edges carry angle 0. Value type, cheap to copy.
class VectorPotential {
public:
    VectorPotential() = default;

    static VectorPotential zero() { return {}; }

    double angle(EdgeId id) const;
    VectorPotential& set(EdgeId id, double angle);

    const std::map<EdgeId, double>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    /// Every keyed edge must exist in g.
    void validate_against(const Graph& g) const;

private:
    std::map<EdgeId, double> values_;
};

/// Vertex -> angle map; missing vertices carry angle 0.
class GaugeFunction {
public:
    GaugeFunction() = default;

    double angle(VertexId v) const;
    GaugeFunction& set(VertexId v, double angle);
    const std::map<VertexId, double>& values() const { return values_; }

private:
    std::map<VertexId, double> values_;
};

/// alpha'_e = alpha_e + phi(head) - phi(tail), reduced mod 2*pi.
/// Cohomologous potentials give unitarily equivalent Laplacians.
VectorPotential gauge_transform(const Graph& g, const VectorPotential& alpha,
                                const GaugeFunction& phi);

/// Gauge away the potential on a deterministic spanning tree, leaving support
/// on at most betti_number(g) edges. Returns the reduced potential and the
/// witnessing gauge function. Requires a connected graph.
std::pair<VectorPotential, GaugeFunction> reduce_support(const Graph& g,
                                                         const VectorPotential& alpha);

} // namespace gapbrack
