#include "gapbrack/periodic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>
#include <thread>

#include "gapbrack/errors.hpp"

namespace gapbrack {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
} // namespace

std::vector<int> PeriodicQuotient::edge_index(EdgeId id) const {
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    return std::vector<int>(rank, 0);
}

std::set<EdgeId> PeriodicQuotient::connecting_edges() const {
    std::set<EdgeId> out;
    for (const auto& [id, vec] : index)
        if (std::any_of(vec.begin(), vec.end(), [](int c) { return c != 0; })) out.insert(id);
    return out;
}

namespace {

// Hermite-style reduction over Z: true iff the rows generate all of Z^r.
// 64-bit arithmetic keeps the euclidean elimination safe for large indices.
bool generates_full_lattice(std::vector<std::vector<long long>> rows, std::size_t rank) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < rank; ++col) {
        // Euclidean elimination in this column below pivot_row.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = pivot_row; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    std::abs(rows[i][col]) < std::abs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool reduced = true;
            for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                long long quot = rows[i][col] / rows[pivot_row][col];
                for (std::size_t c = 0; c < rank; ++c)
                    rows[i][c] -= quot * rows[pivot_row][c];
                if (rows[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (pivot_row >= rows.size() || rows[pivot_row][col] == 0) return false;
        if (std::abs(rows[pivot_row][col]) != 1) return false;
        ++pivot_row;
    }
    return true;
}

} // namespace

PeriodicQuotient validate_quotient(PeriodicQuotient q) {
    if (q.rank == 0) throw validation_error("a periodic quotient needs rank >= 1");
    const Graph& g = q.base.graph();
    if (!is_connected(g))
        throw validation_error("the quotient graph must be connected");
    for (const auto& [id, vec] : q.index) {
        if (!g.has_edge(id))
            throw validation_error("edge index keyed on unknown edge " + std::to_string(id));
        if (vec.size() != q.rank)
            throw validation_error("edge " + std::to_string(id) + " has an index of length " +
                                   std::to_string(vec.size()) + ", expected rank " +
                                   std::to_string(q.rank));
    }
    for (const Edge& e : g.edges())
        if (q.index.find(e.id) == q.index.end())
            q.index[e.id] = std::vector<int>(q.rank, 0);

    // The cover is connected iff the cycle holonomies generate Z^r. Reduce
    // the index map along a spanning tree first: a gauge shift of the
    // fundamental domain zeroes the tree edges and leaves the holonomies.
    std::vector<EdgeId> tree = spanning_tree(g);
    std::set<EdgeId> tree_set(tree.begin(), tree.end());
    std::vector<std::vector<long long>> offset(g.vertex_count(),
                                               std::vector<long long>(q.rank, 0));
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
            const std::vector<int>& ind = q.index.at(id);
            for (std::size_t d = 0; d < q.rank; ++d)
                offset[w][d] = (w == e.head) ? offset[v][d] - ind[d] : offset[v][d] + ind[d];
            queue.push(w);
        }
    }
    std::vector<std::vector<long long>> holonomies;
    for (const Edge& e : g.edges()) {
        if (tree_set.count(e.id) > 0) continue;
        const std::vector<int>& ind = q.index.at(e.id);
        std::vector<long long> h(q.rank);
        for (std::size_t d = 0; d < q.rank; ++d)
            h[d] = static_cast<long long>(ind[d]) + offset[e.head][d] - offset[e.tail][d];
        holonomies.push_back(std::move(h));
    }
    if (!generates_full_lattice(std::move(holonomies), q.rank))
        throw validation_error(
            "the edge indices generate a proper subgroup of Z^" + std::to_string(q.rank) +
            "; the periodic cover would be disconnected");
    return q;
}

VectorPotential lift_character(const PeriodicQuotient& q, const std::vector<double>& theta) {
    if (theta.size() != q.rank)
        throw validation_error("character has " + std::to_string(theta.size()) +
                               " angles, expected rank " + std::to_string(q.rank));
    VectorPotential alpha;
    for (const auto& [id, ind] : q.index) {
        double a = 0.0;
        for (std::size_t d = 0; d < q.rank; ++d) a += theta[d] * static_cast<double>(ind[d]);
        alpha.set(id, a);
    }
    return alpha;
}

bool is_maximal_abelian(const PeriodicQuotient& q) {
    return q.rank == betti_number(q.base.graph());
}

IntervalSet BandStructure::band_union() const {
    std::vector<Interval> widened;
    widened.reserve(bands.size());
    for (const Interval& b : bands)
        widened.push_back({std::max(0.0, b.lo - tol / 2.0),
                           std::min(2.0 * rho_infinity, b.hi + tol / 2.0)});
    return IntervalSet::from_intervals(std::move(widened), 2.0 * rho_infinity);
}

namespace {

std::size_t resolve_threads(std::size_t requested, std::size_t jobs) {
    std::size_t t = requested;
    if (t == 0) {
        if (const char* env = std::getenv("GAPBRACK_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) t = static_cast<std::size_t>(v);
        }
    }
    if (t == 0) t = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    return std::min(t, std::max<std::size_t>(1, jobs));
}

} // namespace

std::vector<FloquetSample> sweep_characters(const PeriodicQuotient& q,
                                            const std::vector<std::size_t>& grid,
                                            double tol, std::size_t threads) {
    if (grid.size() != q.rank)
        throw validation_error("grid has " + std::to_string(grid.size()) +
                               " resolutions, expected rank " + std::to_string(q.rank));
    std::size_t total = 1;
    for (std::size_t r : grid) {
        if (r == 0) throw validation_error("grid resolution must be positive");
        total *= r;
    }

    std::vector<FloquetSample> samples(total);
    const std::size_t workers = resolve_threads(threads, total);
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (std::size_t flat = next.fetch_add(1); flat < total; flat = next.fetch_add(1)) {
            std::vector<double> theta(q.rank);
            std::size_t rem = flat;
            for (std::size_t d = 0; d < q.rank; ++d) {
                theta[d] = two_pi * static_cast<double>(rem % grid[d]) /
                           static_cast<double>(grid[d]);
                rem /= grid[d];
            }
            samples[flat].theta = theta;
            samples[flat].spectrum = spectrum(q.base, lift_character(q, theta), tol);
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return samples;
}

BandStructure grid_band_structure(const PeriodicQuotient& q,
                                  const std::vector<std::size_t>& grid, double tol,
                                  std::size_t threads) {
    std::vector<FloquetSample> samples = sweep_characters(q, grid, tol, threads);
    const std::size_t n = q.base.graph().vertex_count();
    BandStructure bs;
    bs.sample_grid = grid;
    bs.method = BandMethod::GridSampled;
    bs.rho_infinity = q.base.rho_infinity();
    bs.tol = tol;
    bs.bands.assign(n, Interval{2.0 * bs.rho_infinity, 0.0});
    for (const FloquetSample& s : samples) {
        for (std::size_t k = 0; k < n; ++k) {
            bs.bands[k].lo = std::min(bs.bands[k].lo, s.spectrum[k]);
            bs.bands[k].hi = std::max(bs.bands[k].hi, s.spectrum[k]);
        }
    }
    return bs;
}

IntervalSet floquet_spectrum_sample(const PeriodicQuotient& q,
                                    const std::vector<std::size_t>& grid, double tol,
                                    std::size_t threads) {
    return grid_band_structure(q, grid, tol, threads).band_union();
}

bool z_two_point_eligible(const PeriodicQuotient& q) {
    std::set<EdgeId> conn = q.connecting_edges();
    if (q.rank != 1 || conn.size() != 1) return false;
    return std::abs(q.edge_index(*conn.begin())[0]) == 1;
}

BandStructure z_exact_bands(const PeriodicQuotient& q, double tol) {
    if (!z_two_point_eligible(q))
        throw validation_error(
            "the two-point band formula needs rank 1 and a single connecting edge of "
            "index +-1; use the grid character sweep instead");

    Spectrum at_zero = spectrum(q.base, lift_character(q, {0.0}), tol);
    Spectrum at_pi = spectrum(q.base, lift_character(q, {std::numbers::pi}), tol);
    BandStructure bs;
    bs.sample_grid = {2};
    bs.method = BandMethod::Exact2Point;
    bs.rho_infinity = q.base.rho_infinity();
    bs.tol = tol;
    for (std::size_t k = 0; k < at_zero.dimension(); ++k)
        bs.bands.push_back({std::min(at_zero[k], at_pi[k]), std::max(at_zero[k], at_pi[k])});
    return bs;
}

std::set<VertexId> minimum_neighbourhood(const Graph& g, const std::set<EdgeId>& e0) {
    std::vector<VertexId> candidates;
    for (EdgeId id : e0) {
        const Edge& e = g.edge(id);
        candidates.push_back(e.tail);
        candidates.push_back(e.head);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Exhaustive search by size, lexicographic within a size. Connecting-edge
    // sets are tiny, so 2^|candidates| is nothing.
    const std::size_t m = candidates.size();
    if (e0.empty()) return {};
    for (std::size_t size = 1; size <= m; ++size) {
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::set<VertexId> v0;
            for (std::size_t i : pick) v0.insert(candidates[i]);
            if (is_in_neighbourhood(g, e0, v0)) return v0;
            // next combination
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw validation_error("no vertex cover of the connecting edges exists");
}

BracketingReport periodic_bracketing(const PeriodicQuotient& q,
                                     std::optional<std::set<VertexId>> v0, double tol) {
    std::set<EdgeId> e0 = q.connecting_edges();
    std::set<VertexId> cover =
        v0.has_value() ? *v0 : minimum_neighbourhood(q.base.graph(), e0);
    return bracketing_report(q.base, e0, cover, tol);
}

} // namespace gapbrack
