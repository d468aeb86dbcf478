#include "gapbrack/bracketing.hpp"

#include <algorithm>
#include <string>

#include "gapbrack/errors.hpp"

namespace gapbrack {

bool spectrally_smaller(const Spectrum& lower, const Spectrum& upper, double tol) {
    if (lower.dimension() < upper.dimension()) return false;
    for (std::size_t k = 0; k < upper.dimension(); ++k)
        if (lower[k] > upper[k] + tol) return false;
    return true;
}

BracketingReport bracketing_report(const WeightedGraph& w, const std::set<EdgeId>& e0,
                                   const std::set<VertexId>& v0, double tol) {
    const Graph& g = w.graph();
    if (!is_in_neighbourhood(g, e0, v0))
        throw validation_error(
            "the virtual vertex set does not touch every virtual edge, so the "
            "bracket would depend on the vector potential");

    BracketingReport report;
    report.tol = tol;
    report.rho_infinity = w.rho_infinity();
    const double top = 2.0 * report.rho_infinity;

    WeightedGraph minus = virtualise_edges(w, e0);
    HermitianMatrix h_minus = assemble_dml(minus, VectorPotential::zero());
    report.lower = spectrum(minus, VectorPotential::zero(), tol);

    // Virtualising every vertex leaves the zero-dimensional operator: no
    // upper eigenvalues, every bracket capped by 2 rho_inf.
    HermitianMatrix h_plus(0);
    if (v0.size() < g.vertex_count()) {
        VertexVirtualisedGraph plus = virtualise_vertices(w, v0);
        h_plus = assemble_compressed_dml(plus, VectorPotential::zero());
        report.upper = compressed_spectrum(plus, VectorPotential::zero(), tol);
    }

    const std::size_t n_minus = report.lower.dimension();
    const std::size_t n_plus = report.upper.dimension();
    report.padded_upper = report.upper.eigenvalues;
    report.padded_upper.resize(n_minus, top);

    report.intervals.reserve(n_minus);
    for (std::size_t k = 0; k < n_minus; ++k) {
        if (report.lower[k] > report.padded_upper[k] + tol)
            throw solver_error("bracket ordering violated at index " + std::to_string(k));
        report.intervals.push_back(
            {report.lower[k], std::max(report.lower[k], report.padded_upper[k])});
    }

    // Endpoints widened by tol (tol/2 per side) so the certified complement
    // survives worst-case eigensolver error; clipped back to the ambient box.
    std::vector<Interval> widened;
    widened.reserve(n_minus);
    for (const Interval& j : report.intervals)
        widened.push_back({std::max(0.0, j.lo - tol / 2.0), std::min(top, j.hi + tol / 2.0)});
    report.localising_set = IntervalSet::from_intervals(std::move(widened), top);
    report.complement_gaps =
        interval_complement(report.localising_set, top, 2.0 * tol);

    report.trace_bound = h_plus.trace_real() +
                         top * static_cast<double>(n_minus - n_plus) -
                         h_minus.trace_real();
    return report;
}

double trace_gap_bound(const BracketingReport& report) { return report.trace_bound; }

bool certifies_gap(const BracketingReport& report) {
    return report.trace_bound < 2.0 * report.rho_infinity;
}

} // namespace gapbrack
