#include "gapbrack/dml.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "gapbrack/errors.hpp"

namespace gapbrack {

HermitianMatrix assemble_dml(const WeightedGraph& w, const VectorPotential& alpha) {
    const Graph& g = w.graph();
    alpha.validate_against(g);
    const std::size_t n = g.vertex_count();
    HermitianMatrix h(n);
    for (std::size_t j = 0; j < n; ++j)
        h.at(j, j) = w.relative_weight(static_cast<VertexId>(j));
    for (const Edge& e : g.edges()) {
        const double m = w.edge_weight(e.id);
        const double a = alpha.angle(e.id);
        if (e.is_loop()) {
            h.at(e.tail, e.tail) -= 2.0 * std::cos(a) * m / w.vertex_weight(e.tail);
        } else {
            const double scale =
                1.0 / std::sqrt(w.vertex_weight(e.tail) * w.vertex_weight(e.head));
            const std::complex<double> phase(std::cos(a), std::sin(a));
            h.at(e.tail, e.head) -= phase * m * scale;
            h.at(e.head, e.tail) -= std::conj(phase) * m * scale;
        }
    }
    return h;
}

WeightedGraph virtualise_edges(const WeightedGraph& w, const std::set<EdgeId>& e0) {
    Graph sub = remove_edges(w.graph(), e0);  // validates the ids
    std::map<EdgeId, double> edge_weights;
    for (const Edge& e : sub.edges()) edge_weights[e.id] = w.edge_weight(e.id);
    std::vector<double> vertex_weights(w.graph().vertex_count());
    for (VertexId v = 0; v < w.graph().vertex_count(); ++v)
        vertex_weights[v] = w.vertex_weight(v);
    WeightKind kind = w.scheme() == WeightKind::Combinatorial ? WeightKind::Combinatorial
                                                              : WeightKind::Explicit;
    if (e0.empty()) kind = w.scheme();
    return WeightedGraph(std::move(sub), std::move(vertex_weights), std::move(edge_weights),
                         kind);
}

std::vector<VertexId> VertexVirtualisedGraph::retained() const {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < base.graph().vertex_count(); ++v)
        if (virtual_vertices.count(v) == 0) keep.push_back(v);
    return keep;
}

VertexVirtualisedGraph virtualise_vertices(const WeightedGraph& w,
                                           const std::set<VertexId>& v0) {
    for (VertexId v : v0)
        if (!w.graph().has_vertex(v))
            throw validation_error("unknown vertex id " + std::to_string(v));
    if (v0.size() >= w.graph().vertex_count())
        throw validation_error("virtualising every vertex leaves an empty operator");
    return VertexVirtualisedGraph{w, v0};
}

HermitianMatrix assemble_compressed_dml(const VertexVirtualisedGraph& vv,
                                        const VectorPotential& alpha) {
    HermitianMatrix full = assemble_dml(vv.base, alpha);
    std::vector<std::size_t> keep;
    for (VertexId v : vv.retained()) keep.push_back(v);
    return full.principal_submatrix(keep);
}

namespace {

Spectrum finish_spectrum(Spectrum s, double rho_inf, double norm, double tol) {
    // The sweep criterion bounds the eigenvalue error by tol * ||H||_F.
    const double slack = tol * std::max(1.0, norm);
    for (double& v : s.eigenvalues) {
        if (v < -slack)
            throw solver_error("eigenvalue " + std::to_string(v) +
                               " violates positivity beyond solver tolerance");
        if (v > 2.0 * rho_inf + slack)
            throw solver_error("eigenvalue " + std::to_string(v) +
                               " exceeds the 2*rho_inf bound beyond solver tolerance");
        if (v < 0.0) v = 0.0;
    }
    return s;
}

} // namespace

Spectrum spectrum(const WeightedGraph& w, const VectorPotential& alpha, double tol) {
    HermitianMatrix h = assemble_dml(w, alpha);
    return finish_spectrum(hermitian_eigenvalues(h, tol), w.rho_infinity(),
                           h.frobenius_norm(), tol);
}

Spectrum compressed_spectrum(const VertexVirtualisedGraph& vv, const VectorPotential& alpha,
                             double tol) {
    HermitianMatrix h = assemble_compressed_dml(vv, alpha);
    return finish_spectrum(hermitian_eigenvalues(h, tol), vv.base.rho_infinity(),
                           h.frobenius_norm(), tol);
}

} // namespace gapbrack
