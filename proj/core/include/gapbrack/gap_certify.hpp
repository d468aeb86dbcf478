#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gapbrack/periodic.hpp"

namespace gapbrack {

/// A centre vertex v0 with cycle edges A: a subset of the edges at v0 whose
/// removal turns the graph into a tree. |A| then equals the Betti number.
struct CentreVertexCertificate {
    VertexId v0 = 0;
    std::set<EdgeId> cycle_edges;
    double delta = 0.0;
    WeightKind scheme = WeightKind::Standard;
};

enum class GapCertificateKind { CentreVertexDelta, Betti1Degree1, None };

enum class GapNote {
    None,
    /// Betti 0: every potential is gauge-trivial, so the magnetic gap set
    /// coincides with the plain spectral gap set.
    TreeAllPotentialsEquivalent,
    /// Cycle with standard/combinatorial weights: the flux sweep provably
    /// covers all of [0, 2 rho_inf]; there is no magnetic gap.
    CycleFullCover,
};

struct GapCertificate {
    GapCertificateKind kind = GapCertificateKind::None;
    std::optional<CentreVertexCertificate> centre;
    std::optional<VertexId> degree_one_vertex;
    double guaranteed_gap_measure = 0.0;
    GapNote note = GapNote::None;
};

/// Every pair (v, A) with A a size-Betti subset of the edges at v and g - A
/// a tree. Exhaustive; ordered by vertex id, then lexicographic edge-id
/// subsets. Trees have no centre vertex by convention.
std::vector<std::pair<VertexId, std::set<EdgeId>>> find_centre_vertices(const Graph& g);

/// delta = rho(v0) - sum_{e in A} m_e / m((v0)_e) - m(A) / m(v0),
/// with (v0)_e = v0 for a loop. Positive delta certifies magnetic gaps of at
/// least that total measure.
double delta_value(const WeightedGraph& w, VertexId v0, const std::set<EdgeId>& a);

/// Closed form of delta for the canonical schemes; the weights of w must
/// actually match the named scheme. Agrees with delta_value to 1e-12.
double delta_by_scheme(const WeightedGraph& w, VertexId v0, const std::set<EdgeId>& a,
                       WeightKind kind);

/// Scan all centre pairs for the best delta; if none is positive, fall back
/// (for standard/combinatorial weights with a degree-1 vertex present) to the
/// measured gap of the certified bracketing complement, which covers every
/// potential because the edge-virtualised graph is a tree. kind == None means
/// the criterion is inconclusive, not that gaps are absent.
GapCertificate certify_magnetic_gap(const WeightedGraph& w, double tol = 1e-10);

enum class Betti1Class { CycleNoGap, Degree1Gap };

/// For connected Betti-1 graphs exactly one of the two holds: the graph is a
/// cycle (no magnetic gap under standard/combinatorial weights) or it has a
/// vertex of degree 1 (magnetic gaps exist).
Betti1Class betti1_classification(const Graph& g);

/// The six equivalent conditions for a Z-periodic tree cover with standard or
/// combinatorial weights; all booleans coincide.
struct FspClassification {
    bool full_spectrum_property = false;       // sigma(cover) = [0, 2 rho_inf]
    bool cover_spectral_gaps_empty = false;
    bool cover_is_z_lattice = false;
    bool quotient_magnetic_gaps_empty = false;
    bool quotient_is_cycle = false;
    bool quotient_has_no_degree_one = false;
};

/// Requires rank 1, Betti(quotient) = 1 (so the cover is a Z-periodic tree)
/// and standard or combinatorial weights.
FspClassification fsp_z_tree_classify(const PeriodicQuotient& q);

} // namespace gapbrack
