#include "gapbrack/gap_certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapbrack/errors.hpp"

namespace gapbrack {

namespace {

bool is_valid_centre_pair(const Graph& g, VertexId v0, const std::set<EdgeId>& a) {
    if (!g.has_vertex(v0)) return false;
    const auto& inc = g.incident(v0);
    for (EdgeId id : a)
        if (std::find(inc.begin(), inc.end(), id) == inc.end()) return false;
    if (a.size() != betti_number(g)) return false;
    return is_connected(remove_edges(g, a));
}

std::optional<VertexId> first_degree_one_vertex(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) return v;
    return std::nullopt;
}

void check_scheme_weights(const WeightedGraph& w, WeightKind kind) {
    const Graph& g = w.graph();
    const double eps = 1e-12;
    auto close = [eps](double a, double b) { return std::fabs(a - b) <= eps; };
    bool ok = true;
    switch (kind) {
        case WeightKind::Standard:
            for (const Edge& e : g.edges()) ok = ok && close(w.edge_weight(e.id), 1.0);
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                ok = ok && close(w.vertex_weight(v), static_cast<double>(g.degree(v)));
            break;
        case WeightKind::Combinatorial:
            for (const Edge& e : g.edges()) ok = ok && close(w.edge_weight(e.id), 1.0);
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                ok = ok && close(w.vertex_weight(v), 1.0);
            break;
        case WeightKind::Normalised:
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                ok = ok && close(w.vertex_weight(v), w.incident_weight(v));
            break;
        case WeightKind::Electric:
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                ok = ok && close(w.vertex_weight(v), 1.0);
            break;
        case WeightKind::Explicit:
            break;
    }
    if (!ok)
        throw validation_error("the graph weights do not match the " + to_string(kind) +
                               " scheme");
}

} // namespace

std::vector<std::pair<VertexId, std::set<EdgeId>>> find_centre_vertices(const Graph& g) {
    const std::size_t b = betti_number(g);  // errors on disconnected input
    std::vector<std::pair<VertexId, std::set<EdgeId>>> out;
    if (b == 0) return out;  // a tree has no centre vertex
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        if (inc.size() < b) continue;
        std::vector<std::size_t> pick(b);
        for (std::size_t i = 0; i < b; ++i) pick[i] = i;
        while (true) {
            std::set<EdgeId> a;
            for (std::size_t i : pick) a.insert(inc[i]);
            if (is_connected(remove_edges(g, a))) out.emplace_back(v, a);
            std::size_t i = b;
            while (i > 0 && pick[i - 1] == inc.size() - b + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < b; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

double delta_value(const WeightedGraph& w, VertexId v0, const std::set<EdgeId>& a) {
    if (!is_valid_centre_pair(w.graph(), v0, a))
        throw validation_error("(" + std::to_string(v0) +
                               ", A) is not a centre vertex with cycle edges");
    double delta = w.relative_weight(v0);
    double weight_a = 0.0;
    for (EdgeId id : a) {
        const Edge& e = w.graph().edge(id);
        VertexId opposite = e.is_loop() ? v0 : opposite_endpoint(e, v0);
        delta -= w.edge_weight(id) / w.vertex_weight(opposite);
        weight_a += w.edge_weight(id);
    }
    delta -= weight_a / w.vertex_weight(v0);
    return delta;
}

double delta_by_scheme(const WeightedGraph& w, VertexId v0, const std::set<EdgeId>& a,
                       WeightKind kind) {
    if (!is_valid_centre_pair(w.graph(), v0, a))
        throw validation_error("(" + std::to_string(v0) +
                               ", A) is not a centre vertex with cycle edges");
    check_scheme_weights(w, kind);
    const Graph& g = w.graph();
    switch (kind) {
        case WeightKind::Standard: {
            double d = 1.0 - static_cast<double>(a.size()) / static_cast<double>(g.degree(v0));
            for (EdgeId id : a) {
                const Edge& e = g.edge(id);
                VertexId opposite = e.is_loop() ? v0 : opposite_endpoint(e, v0);
                d -= 1.0 / static_cast<double>(g.degree(opposite));
            }
            return d;
        }
        case WeightKind::Combinatorial:
            return static_cast<double>(g.degree(v0)) - 2.0 * static_cast<double>(a.size());
        case WeightKind::Electric: {
            double weight_a = 0.0;
            for (EdgeId id : a) weight_a += w.edge_weight(id);
            return w.incident_weight(v0) - 2.0 * weight_a;
        }
        case WeightKind::Normalised: {
            double d = 1.0;
            double weight_a = 0.0;
            for (EdgeId id : a) {
                const Edge& e = g.edge(id);
                VertexId opposite = e.is_loop() ? v0 : opposite_endpoint(e, v0);
                d -= w.edge_weight(id) / w.incident_weight(opposite);
                weight_a += w.edge_weight(id);
            }
            return d - weight_a / w.incident_weight(v0);
        }
        case WeightKind::Explicit:
            return delta_value(w, v0, a);
    }
    throw validation_error("unknown weight scheme");
}

GapCertificate certify_magnetic_gap(const WeightedGraph& w, double tol) {
    const Graph& g = w.graph();
    if (!is_connected(g))
        throw validation_error("gap certification needs a connected graph");

    GapCertificate cert;
    if (betti_number(g) == 0) {
        cert.note = GapNote::TreeAllPotentialsEquivalent;
        return cert;
    }

    auto pairs = find_centre_vertices(g);
    bool have_best = false;
    double best_delta = 0.0;
    std::pair<VertexId, std::set<EdgeId>> best_pair;
    for (const auto& p : pairs) {
        double d = delta_value(w, p.first, p.second);
        if (!have_best || d > best_delta) {  // scan order breaks ties
            have_best = true;
            best_delta = d;
            best_pair = p;
        }
    }
    if (have_best && best_delta > 0.0) {
        cert.kind = GapCertificateKind::CentreVertexDelta;
        cert.centre = CentreVertexCertificate{best_pair.first, best_pair.second, best_delta,
                                              w.scheme()};
        cert.guaranteed_gap_measure = best_delta;
        return cert;
    }

    const bool plain_weights =
        w.scheme() == WeightKind::Standard || w.scheme() == WeightKind::Combinatorial;

    // The delta bound is only sufficient. When a pendant vertex exists the
    // bracket complement itself can certify a gap: with A(v0) removed the
    // lower graph is a tree, so the localising set covers every potential.
    std::optional<VertexId> pendant = first_degree_one_vertex(g);
    if (plain_weights && pendant.has_value() && !pairs.empty()) {
        double best_measure = 0.0;
        std::optional<CentreVertexCertificate> best_centre;
        for (const auto& p : pairs) {
            BracketingReport report = bracketing_report(w, p.second, {p.first}, tol);
            double m = report.complement_gaps.measure();
            if (m > best_measure) {
                best_measure = m;
                best_centre = CentreVertexCertificate{
                    p.first, p.second, delta_value(w, p.first, p.second), w.scheme()};
            }
        }
        if (best_measure > 0.0) {
            cert.kind = GapCertificateKind::Betti1Degree1;
            cert.degree_one_vertex = pendant;
            cert.centre = best_centre;
            cert.guaranteed_gap_measure = best_measure;
            return cert;
        }
    }

    if (plain_weights && is_cycle_graph(g)) cert.note = GapNote::CycleFullCover;
    return cert;
}

Betti1Class betti1_classification(const Graph& g) {
    if (betti_number(g) != 1)
        throw validation_error("the cycle / degree-1 classification needs Betti number 1");
    bool cycle = is_cycle_graph(g);
    bool pendant = first_degree_one_vertex(g).has_value();
    if (cycle == pendant)
        throw solver_error("Betti-1 trichotomy violated; this is a bug");
    return cycle ? Betti1Class::CycleNoGap : Betti1Class::Degree1Gap;
}

FspClassification fsp_z_tree_classify(const PeriodicQuotient& q) {
    if (q.rank != 1)
        throw validation_error("the full-spectrum classification needs a Z-periodic graph");
    if (betti_number(q.base.graph()) != 1)
        throw validation_error(
            "the full-spectrum classification needs Betti number 1 (a tree cover)");
    if (q.base.scheme() != WeightKind::Standard &&
        q.base.scheme() != WeightKind::Combinatorial)
        throw validation_error(
            "the full-spectrum classification holds for standard or combinatorial weights");

    bool cycle = is_cycle_graph(q.base.graph());
    FspClassification r;
    r.quotient_is_cycle = cycle;
    r.quotient_has_no_degree_one = !first_degree_one_vertex(q.base.graph()).has_value();
    r.full_spectrum_property = cycle;
    r.cover_spectral_gaps_empty = cycle;
    r.cover_is_z_lattice = cycle;
    r.quotient_magnetic_gaps_empty = cycle;

    // Cross-check the magnetic-gap condition against the certificate scan
    // and a band sweep; a mismatch would mean an internal inconsistency.
    GapCertificate cert = certify_magnetic_gap(q.base);
    if (cycle != (cert.kind == GapCertificateKind::None))
        throw solver_error("full-spectrum verdict disagrees with the gap certificate");
    IntervalSet bands = z_two_point_eligible(q)
                            ? z_exact_bands(q).band_union()
                            : floquet_spectrum_sample(q, {64});
    double complement = 2.0 * q.base.rho_infinity() - bands.measure();
    if (!cycle && complement <= 0.0)
        throw solver_error("full-spectrum verdict disagrees with the band sweep");
    if (cycle && z_two_point_eligible(q) && complement > 1e-8)
        throw solver_error("full-spectrum verdict disagrees with the exact bands");
    return r;
}

} // namespace gapbrack
