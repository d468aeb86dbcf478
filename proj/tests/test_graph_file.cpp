#include <doctest.h>

#include <random>

#include "gapbrack/errors.hpp"
#include "gapbrack/graph_file.hpp"
#include "oracles.hpp"

using namespace gapbrack;

#ifndef GAPBRACK_FIXTURE_DIR
#define GAPBRACK_FIXTURE_DIR "fixtures"
#endif

namespace {
std::string fixture(const std::string& name) {
    return std::string(GAPBRACK_FIXTURE_DIR) + "/" + name;
}
} // namespace

TEST_CASE("minimal two-vertex file") {
    GraphDescription d = parse_graph_file(
        "[vertices]\ncount 2\n[edges]\nedge 0 1\n");
    CHECK(d.weighted.graph().vertex_count() == 2);
    CHECK(d.weighted.scheme() == WeightKind::Standard);
    CHECK(d.alpha.is_zero());
    CHECK_FALSE(d.quotient.has_value());
    CHECK(d.weighted.vertex_weight(0) == 1.0);  // degree 1
}

TEST_CASE("bundled fixtures parse to the expected shapes") {
    GraphDescription pendant = load_graph_file(fixture("c6_pendant.graph"));
    CHECK(pendant.weighted.graph().vertex_count() == 7);
    CHECK(pendant.weighted.graph().edge_count() == 7);
    CHECK(betti_number(pendant.weighted.graph()) == 1);
    CHECK(pendant.weighted.graph().degree(5) == 3);

    GraphDescription pa = load_graph_file(fixture("polyacetylene.graph"));
    CHECK(pa.weighted.graph().vertex_count() == 4);
    CHECK(pa.weighted.graph().edge_count() == 5);
    REQUIRE(pa.quotient.has_value());
    CHECK(pa.quotient->rank == 1);
    CHECK(pa.quotient->edge_index(0) == std::vector<int>{1});
    CHECK(pa.quotient->connecting_edges() == std::set<EdgeId>{0});

    GraphDescription ga = load_graph_file(fixture("graphane.graph"));
    REQUIRE(ga.quotient.has_value());
    CHECK(ga.quotient->rank == 2);
    CHECK(ga.quotient->edge_index(0) == std::vector<int>{1, 0});
    CHECK(ga.quotient->edge_index(1) == std::vector<int>{0, 1});

    GraphDescription norm = load_graph_file(fixture("c6_normalised.graph"));
    CHECK(norm.weighted.scheme() == WeightKind::Normalised);
    CHECK(norm.weighted.vertex_weight(0) == doctest::Approx(3.0));
    CHECK(norm.weighted.edge_weight(0) == doctest::Approx(2.0));
}

TEST_CASE("comments, blank lines and alpha fields") {
    GraphDescription d = parse_graph_file(
        "# a comment\n[meta]\nscheme combinatorial\n\n[vertices]\ncount 2\n"
        "[edges]\nedge 0 1 alpha 1.25  # trailing comment\n");
    CHECK(d.weighted.scheme() == WeightKind::Combinatorial);
    CHECK(d.alpha.angle(0) == doctest::Approx(1.25));
}

TEST_CASE("parse errors carry line numbers and reasons") {
    CHECK_THROWS_WITH_AS(parse_graph_file("[meta]\nscheme standard\nbogus 1\n"),
                         doctest::Contains("line 3"), validation_error);
    CHECK_THROWS_AS(parse_graph_file("[vertices]\ncount 2\n[edges]\nedge 0 5\n"),
                    validation_error);
    CHECK_THROWS_AS(parse_graph_file("[vertices]\ncount 1\n[edges]\nedge 0 0 index 1\n"),
                    validation_error);  // index without rank
    CHECK_THROWS_AS(
        parse_graph_file("[vertices]\ncount 2\n[edges]\nedge 0 1 weight 2\n"),
        validation_error);  // standard scheme owns the weights
    CHECK_THROWS_AS(
        parse_graph_file("[meta]\nscheme nonsense\n[vertices]\ncount 1\n[edges]\n"),
        validation_error);
    CHECK_THROWS_AS(parse_graph_file("count 2\n"), validation_error);  // before sections
    CHECK_THROWS_AS(parse_graph_file("[vertices]\n[edges]\nedge 0 1\n"),
                    validation_error);  // missing count
    CHECK_THROWS_AS(
        parse_graph_file("[meta]\nrank 1\n[vertices]\ncount 2\n[edges]\nedge 0 1 index 1\n"),
        validation_error);  // cover disconnected
}

TEST_CASE("round trip: parse(print(parse(text))) is the identity") {
    const char* files[] = {"k2.graph",        "c6_pendant.graph",  "c6_electric.graph",
                           "c6_normalised.graph", "polyacetylene.graph", "graphane.graph",
                           "polypropylene.graph"};
    for (const char* f : files) {
        GraphDescription d1 = load_graph_file(fixture(f));
        GraphDescription d2 = parse_graph_file(print_graph_file(d1));

        CHECK(d1.weighted.graph().vertex_count() == d2.weighted.graph().vertex_count());
        REQUIRE(d1.weighted.graph().edge_count() == d2.weighted.graph().edge_count());
        for (const Edge& e : d1.weighted.graph().edges()) {
            CHECK(d2.weighted.graph().edge(e.id).tail == e.tail);
            CHECK(d2.weighted.graph().edge(e.id).head == e.head);
            CHECK(d2.weighted.edge_weight(e.id) == d1.weighted.edge_weight(e.id));
            CHECK(d2.alpha.angle(e.id) == d1.alpha.angle(e.id));
        }
        for (VertexId v = 0; v < d1.weighted.graph().vertex_count(); ++v)
            CHECK(d2.weighted.vertex_weight(v) == d1.weighted.vertex_weight(v));
        CHECK(d1.weighted.scheme() == d2.weighted.scheme());
        CHECK(d1.quotient.has_value() == d2.quotient.has_value());
        if (d1.quotient) {
            CHECK(d1.quotient->rank == d2.quotient->rank);
            for (const Edge& e : d1.weighted.graph().edges())
                CHECK(d1.quotient->edge_index(e.id) == d2.quotient->edge_index(e.id));
        }
        // printing the reparse is byte-identical
        CHECK(print_graph_file(d1) == print_graph_file(d2));
    }
}

TEST_CASE("explicit scheme round trip with random weights") {
    std::mt19937 rng(113);
    Graph g = oracle::random_connected_graph(rng);
    WeightedGraph w = oracle::random_weighted_graph(rng, g);
    GraphDescription d;
    d.weighted = w;
    d.alpha = oracle::random_potential(rng, g);
    GraphDescription back = parse_graph_file(print_graph_file(d));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(back.weighted.vertex_weight(v) ==
              doctest::Approx(w.vertex_weight(v)).epsilon(1e-10));
    for (const Edge& e : g.edges())
        CHECK(back.alpha.angle(e.id) == doctest::Approx(d.alpha.angle(e.id)).epsilon(1e-10));
}
