#include <doctest.h>

#include <cmath>
#include <random>

#include "gapbrack/dml.hpp"
#include "gapbrack/errors.hpp"
#include "gapbrack/bracketing.hpp"
#include "oracles.hpp"

using namespace gapbrack;
using oracle::pi;

namespace {

WeightedGraph std_c6() {
    return apply_weight_scheme(
        Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}),
        WeightScheme::standard());
}

WeightedGraph std_c6_pendant() {
    return apply_weight_scheme(
        Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {5, 6}}),
        WeightScheme::standard());
}

} // namespace

TEST_CASE("single loop with standard weights gives the 1x1 zero matrix") {
    WeightedGraph w =
        apply_weight_scheme(Graph::from_pairs(1, {{0, 0}}), WeightScheme::standard());
    HermitianMatrix h = assemble_dml(w, {});
    CHECK(h.dimension() == 1);
    CHECK(h.at(0, 0).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(spectrum(w, {})[0] <= 1e-14);
}

TEST_CASE("K2 with standard weights") {
    WeightedGraph w =
        apply_weight_scheme(Graph::from_pairs(2, {{0, 1}}), WeightScheme::standard());
    HermitianMatrix h = assemble_dml(w, {});
    CHECK(h.at(0, 0).real() == doctest::Approx(1.0));
    CHECK(h.at(0, 1).real() == doctest::Approx(-1.0));
    CHECK(h.at(1, 0).real() == doctest::Approx(-1.0));
    Spectrum s = spectrum(w, {});
    CHECK(s[0] == doctest::Approx(0.0));
    CHECK(s[1] == doctest::Approx(2.0));
}

TEST_CASE("c6 with flux on one edge matches the circulant formula") {
    WeightedGraph w = std_c6();
    const double t = 1.1;
    VectorPotential a;
    a.set(0, t);
    HermitianMatrix h = assemble_dml(w, a);
    CHECK(h.at(0, 1) == std::complex<double>(-std::cos(t) / 2.0, -std::sin(t) / 2.0));
    CHECK(h.at(1, 2).real() == doctest::Approx(-0.5));

    Spectrum got = spectrum(w, a);
    auto expected = oracle::circulant_flux_spectrum(6, t);
    for (int k = 0; k < 6; ++k)
        CHECK(got[k] == doctest::Approx(expected[k]).epsilon(1e-10));
}

TEST_CASE("c6 spectrum at zero potential") {
    Spectrum s = spectrum(std_c6(), {});
    std::vector<double> expected{0.0, 0.5, 0.5, 1.5, 1.5, 2.0};
    for (int k = 0; k < 6; ++k)
        CHECK(s[k] == doctest::Approx(expected[k]).epsilon(1e-10));
    CHECK(s[0] >= 0.0);  // negatives are clamped
}

TEST_CASE("assembly rejects potentials on unknown edges") {
    VectorPotential bad;
    bad.set(77, 0.3);
    CHECK_THROWS_AS(assemble_dml(std_c6(), bad), validation_error);
}

TEST_CASE("virtualising no edges is the identity") {
    WeightedGraph w = std_c6();
    WeightedGraph same = virtualise_edges(w, {});
    CHECK(same.graph().edge_count() == 6);
    CHECK(same.scheme() == WeightKind::Standard);
}

TEST_CASE("edge virtualisation keeps vertex weights") {
    WeightedGraph w = std_c6();
    WeightedGraph minus = virtualise_edges(w, {0});
    CHECK(minus.graph().edge_count() == 5);
    for (VertexId v = 0; v < 6; ++v) CHECK(minus.vertex_weight(v) == 2.0);
    CHECK(minus.relative_weight(0) == doctest::Approx(0.5));
    CHECK(minus.scheme() == WeightKind::Explicit);  // no longer standard
    CHECK_THROWS_AS(virtualise_edges(w, {9}), validation_error);
}

TEST_CASE("combinatorial weights survive edge virtualisation") {
    WeightedGraph w = apply_weight_scheme(std_c6().graph(), WeightScheme::combinatorial());
    WeightedGraph minus = virtualise_edges(w, {1, 3});
    CHECK(minus.scheme() == WeightKind::Combinatorial);
    for (VertexId v = 0; v < 6; ++v) CHECK(minus.vertex_weight(v) == 1.0);
}

TEST_CASE("vertex virtualisation") {
    WeightedGraph w = std_c6_pendant();
    VertexVirtualisedGraph vv = virtualise_vertices(w, {0});
    CHECK(vv.retained() == std::vector<VertexId>{1, 2, 3, 4, 5, 6});

    CHECK_THROWS_AS(virtualise_vertices(w, {0, 1, 2, 3, 4, 5, 6}), validation_error);
    CHECK_THROWS_AS(virtualise_vertices(w, {11}), validation_error);

    // empty set: compressed operator equals the full one
    VertexVirtualisedGraph id = virtualise_vertices(w, {});
    HermitianMatrix full = assemble_dml(w, {});
    HermitianMatrix comp = assemble_compressed_dml(id, {});
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) CHECK(comp.at(i, j) == full.at(i, j));
}

TEST_CASE("compressed spectrum of c6+pendant minus vertex 0") {
    WeightedGraph w = std_c6_pendant();
    Spectrum upper = compressed_spectrum(virtualise_vertices(w, {0}), {});
    // frozen from the bracketing fixture; the padded list appends 2
    std::vector<double> expected{0.121073, 0.3581, 0.744166, 1.255834, 1.6419, 1.878927};
    REQUIRE(upper.dimension() == 6);
    for (int k = 0; k < 6; ++k)
        CHECK(upper[k] == doctest::Approx(expected[k]).epsilon(5e-6));
    // trace of the compression never exceeds the full trace
    HermitianMatrix full = assemble_dml(w, {});
    HermitianMatrix comp = assemble_compressed_dml(virtualise_vertices(w, {0}), {});
    CHECK(comp.trace_real() <= full.trace_real() + 1e-14);
}

TEST_CASE("compressing an edgeless graph zeroes the diagonal") {
    WeightedGraph w = apply_weight_scheme(Graph::from_pairs(3, {}),
                                          WeightScheme::combinatorial());
    HermitianMatrix h = assemble_compressed_dml(virtualise_vertices(w, {2}), {});
    CHECK(h.dimension() == 2);
    CHECK(h.at(0, 0) == std::complex<double>(0.0, 0.0));
    CHECK(h.at(1, 1) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("assembled matrices are Hermitian with tight bounds") {
    std::mt19937 rng(51);
    for (int i = 0; i < 60; ++i) {
        Graph g = oracle::random_connected_graph(rng);
        WeightedGraph w = oracle::random_weighted_graph(rng, g);
        VectorPotential a = oracle::random_potential(rng, g);
        HermitianMatrix h = assemble_dml(w, a);
        CHECK(h.hermiticity_defect() <= 1e-12);

        Spectrum s = spectrum(w, a);
        CHECK(s[0] >= 0.0);
        CHECK(s[s.dimension() - 1] <= 2.0 * w.rho_infinity() + 1e-8);
    }
}

TEST_CASE("zero potential on a connected graph has a simple kernel") {
    std::mt19937 rng(53);
    for (int i = 0; i < 40; ++i) {
        Graph g = oracle::random_connected_graph(rng);
        WeightedGraph w = oracle::random_weighted_graph(rng, g);
        Spectrum s = spectrum(w, {});
        CHECK(s[0] >= 0.0);
        CHECK(s[0] <= 1e-12);
        if (s.dimension() > 1) CHECK(s[1] > 1e-8);
    }
}

TEST_CASE("trace formula") {
    std::mt19937 rng(59);
    for (int i = 0; i < 40; ++i) {
        Graph g = oracle::random_connected_graph(rng);
        WeightedGraph w = oracle::random_weighted_graph(rng, g);
        VectorPotential a = oracle::random_potential(rng, g);
        HermitianMatrix h = assemble_dml(w, a);

        double expected = 0.0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            expected += w.relative_weight(v);
        for (const Edge& e : g.edges())
            if (e.is_loop())
                expected -=
                    2.0 * std::cos(a.angle(e.id)) * w.edge_weight(e.id) / w.vertex_weight(e.tail);
        CHECK(h.trace_real() == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("gauge invariance of the spectrum") {
    std::mt19937 rng(61);
    for (int i = 0; i < 50; ++i) {
        Graph g = oracle::random_connected_graph(rng);
        WeightedGraph w = oracle::random_weighted_graph(rng, g);
        VectorPotential a = oracle::random_potential(rng, g);
        GaugeFunction phi = oracle::random_gauge(rng, g.vertex_count());
        Spectrum s1 = spectrum(w, a);
        Spectrum s2 = spectrum(w, gauge_transform(g, a, phi));
        for (std::size_t k = 0; k < s1.dimension(); ++k)
            CHECK(s1[k] == doctest::Approx(s2[k]).epsilon(1e-9));
    }
}

TEST_CASE("edge virtualisation is spectrally smaller, vertex interlacing holds") {
    std::mt19937 rng(67);
    for (int i = 0; i < 50; ++i) {
        Graph g = oracle::random_connected_graph(rng);
        WeightedGraph w = oracle::random_weighted_graph(rng, g);
        VectorPotential a = oracle::random_potential(rng, g);
        Spectrum full = spectrum(w, a);

        // random edge subset
        std::set<EdgeId> e0;
        for (const Edge& e : g.edges())
            if (rng() % 3 == 0) e0.insert(e.id);
        VectorPotential restricted;
        for (const Edge& e : g.edges())
            if (!e0.count(e.id) && a.angle(e.id) != 0.0)
                restricted.set(e.id, a.angle(e.id));
        Spectrum lower = spectrum(virtualise_edges(w, e0), restricted);
        for (std::size_t k = 0; k < full.dimension(); ++k)
            CHECK(lower[k] <= full[k] + 1e-9);

        // single-vertex interlacing
        if (g.vertex_count() >= 2) {
            VertexId v0 = static_cast<VertexId>(rng() % g.vertex_count());
            Spectrum upper = compressed_spectrum(virtualise_vertices(w, {v0}), a);
            for (std::size_t k = 0; k + 1 < full.dimension(); ++k) {
                CHECK(full[k] <= upper[k] + 1e-9);
                CHECK(upper[k] <= full[k + 1] + 1e-9);
            }
        }
    }
}

TEST_CASE("bipartite graphs with relative weight 1 have kappa-symmetric spectra") {
    Graph graphs[] = {
        Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}),
        Graph::from_pairs(4, {{1, 0}, {0, 1}, {0, 1}, {0, 2}, {1, 3}}),
        Graph::from_pairs(9, {{0, 1}, {1, 0}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6},
                              {2, 7}, {2, 8}}),
    };
    for (const Graph& g : graphs) {
        REQUIRE(bipartition(g).has_value());
        Spectrum s = spectrum(apply_weight_scheme(g, WeightScheme::standard()), {});
        const std::size_t n = s.dimension();
        for (std::size_t k = 0; k < n; ++k)
            CHECK(s[k] == doctest::Approx(2.0 - s[n - 1 - k]).epsilon(1e-9));
    }
}

TEST_CASE("restandardised weights break the spectral order; inherited weights keep it") {
    WeightedGraph c6 = std_c6();
    VectorPotential quarter;
    quarter.set(0, pi / 2.0);
    Spectrum flux = spectrum(c6, quarter);
    CHECK(flux[3] == doctest::Approx(1.25882).epsilon(5e-5));

    // rebuild the cut graph with fresh standard weights
    Graph cut = remove_edges(c6.graph(), {0});
    Spectrum restd = spectrum(apply_weight_scheme(cut, WeightScheme::standard()), {});
    CHECK(restd[3] == doctest::Approx(1.30902).epsilon(5e-5));
    CHECK_FALSE(spectrally_smaller(restd, flux, 1e-9));

    // inherited weights stay below for every flux value
    WeightedGraph inherited = virtualise_edges(c6, {0});
    Spectrum lower = spectrum(inherited, {});
    for (int j = 0; j < 64; ++j) {
        VectorPotential a;
        a.set(0, 2.0 * pi * j / 64.0);
        CHECK(spectrally_smaller(lower, spectrum(c6, a), 1e-9));
    }
}
