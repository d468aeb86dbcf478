#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gapbrack/bracketing.hpp"
#include "gapbrack/dml.hpp"

namespace gapbrack {

/// Finite quotient of a Z^r-periodic weighted graph: the quotient graph plus
/// the integer displacement (index) each edge picks up when lifted across
/// fundamental domains. Edges without an entry carry the zero vector. The
/// indices are taken as ground truth for the chosen fundamental domain.
struct PeriodicQuotient {
    WeightedGraph base;
    std::size_t rank = 0;
    std::map<EdgeId, std::vector<int>> index;

    std::vector<int> edge_index(EdgeId id) const;

    /// Edges with a nonzero index: the images of the connecting edges.
    std::set<EdgeId> connecting_edges() const;
};

/// Checks rank >= 1, index lengths, base connectivity, and that the cover is
/// connected: the spanning-tree-reduced indices (cycle holonomies) must
/// generate all of Z^r. Returns the quotient with zero indices filled in.
PeriodicQuotient validate_quotient(PeriodicQuotient q);

/// Potential realising the character theta in [0, 2 pi)^r:
/// alpha_e = <theta, ind(e)> mod 2 pi, supported on the connecting edges.
VectorPotential lift_character(const PeriodicQuotient& q, const std::vector<double>& theta);

/// True iff the covering group has rank equal to the Betti number of the
/// quotient (the maximal Abelian cover).
bool is_maximal_abelian(const PeriodicQuotient& q);

enum class BandMethod { Exact2Point, GridSampled };

struct BandStructure {
    std::vector<Interval> bands;  // one per eigenvalue branch, by index k
    std::vector<std::size_t> sample_grid;
    BandMethod method = BandMethod::GridSampled;
    double rho_infinity = 0.0;
    double tol = 1e-10;

    /// Union of the bands as a canonical interval set in [0, 2 rho_inf].
    /// Band ends are widened by tol/2 before merging so that branches meeting
    /// at a multiple eigenvalue coalesce instead of leaving hairline gaps.
    IntervalSet band_union() const;
};

struct FloquetSample {
    std::vector<double> theta;
    Spectrum spectrum;
};

/// Spectra over the uniform grid theta_d = 2 pi j / grid[d]. Grid points are
/// independent; the sweep runs on `threads` workers (0 = decide from the
/// GAPBRACK_THREADS environment variable, falling back to the hardware
/// count). Sample order is deterministic regardless of thread count.
std::vector<FloquetSample> sweep_characters(const PeriodicQuotient& q,
                                            const std::vector<std::size_t>& grid,
                                            double tol = 1e-10, std::size_t threads = 0);

/// Per-branch [min, max] over the sampled grid. An inner approximation of the
/// true band structure for r >= 2; exact harmonics are only guaranteed by
/// z_exact_bands or the certified outer set from periodic_bracketing.
BandStructure grid_band_structure(const PeriodicQuotient& q,
                                  const std::vector<std::size_t>& grid, double tol = 1e-10,
                                  std::size_t threads = 0);

/// Union of the sampled bands: an inner approximation of the full spectrum.
IntervalSet floquet_spectrum_sample(const PeriodicQuotient& q,
                                    const std::vector<std::size_t>& grid,
                                    double tol = 1e-10, std::size_t threads = 0);

/// True iff the two-point band formula applies: rank 1 with exactly one
/// connecting edge, of index +-1.
bool z_two_point_eligible(const PeriodicQuotient& q);

/// For a Z-periodic quotient whose fundamental domains are linked by a single
/// connecting edge of index +-1, each band is exactly the interval between
/// the eigenvalues at theta = 0 and theta = pi.
BandStructure z_exact_bands(const PeriodicQuotient& q, double tol = 1e-10);

/// Certified outer enclosure of the full periodic spectrum, independent of
/// the character: bracketing with E0 = connecting edges and V0 either given
/// or chosen as the lexicographically first minimum vertex cover of E0.
BracketingReport periodic_bracketing(const PeriodicQuotient& q,
                                     std::optional<std::set<VertexId>> v0 = std::nullopt,
                                     double tol = 1e-10);

/// The default V0 used by periodic_bracketing.
std::set<VertexId> minimum_neighbourhood(const Graph& g, const std::set<EdgeId>& e0);

} // namespace gapbrack
