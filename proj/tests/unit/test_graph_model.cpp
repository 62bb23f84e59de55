#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zfc/bipartite.hpp"
#include "zfc/controllability.hpp"
#include "zfc/error.hpp"
#include "zfc/pattern.hpp"

using namespace zfc;

TEST_CASE("graph construction validates endpoints and duplicates") {
    CHECK_THROWS_AS(DirectedGraph(2, {{1, 3}}), InputError);
    CHECK_THROWS_AS(DirectedGraph(2, {{0, 1}}), InputError);
    CHECK_THROWS_AS(DirectedGraph(2, {{1, 2}, {1, 2}}), InputError);
    CHECK_THROWS_AS(DirectedGraph(-1, {}), InputError);

    const DirectedGraph empty(0, {});
    CHECK(empty.size() == 0);
    CHECK(empty.loop_vertices().empty());
    CHECK(empty.is_self_damped());

    const auto g = fixtures::loop_example();
    CHECK(g.loop_vertices() == VertexSet{1});
    CHECK(g.out_neighbors(1) == std::vector<Vertex>{1, 2, 3});
    CHECK(g.in_neighbors(3) == std::vector<Vertex>{1, 2});
    CHECK_FALSE(g.is_self_damped());
}

TEST_CASE("simple kind rejects loops") {
    CHECK_THROWS_AS(require_kind(fixtures::loop_example(), GraphKind::SimpleDirected), InputError);
    CHECK_NOTHROW(require_kind(fixtures::simple_example(), GraphKind::SimpleDirected));
    CHECK_NOTHROW(require_kind(fixtures::loop_example(), GraphKind::LoopDirected));
}

TEST_CASE("to_pattern") {
    CHECK(to_pattern(fixtures::loop_example()).to_text() == "**0\n*00\n**0\n");
    CHECK(to_pattern(DirectedGraph(1, {})).to_text() == "0\n");
    CHECK(to_pattern(fixtures::undamped_example()).to_text() == "0*0\n*00\n**0\n");
    CHECK_FALSE(to_pattern(fixtures::loop_example()).has_free());
}

TEST_CASE("to_simple_pattern frees the diagonal and ignores loops") {
    CHECK(to_simple_pattern(fixtures::simple_example()).to_text() == "?*0\n*?0\n**?\n");
    CHECK(to_simple_pattern(DirectedGraph(1, {})).to_text() == "?\n");
    CHECK(to_simple_pattern(fixtures::loop_example()) == to_simple_pattern(fixtures::simple_example()));
}

TEST_CASE("strip_loops and add_all_loops") {
    const auto g = fixtures::loop_example();
    CHECK(strip_loops(g) == fixtures::simple_example());

    const auto crossed = add_all_loops(fixtures::undamped_example());
    CHECK(crossed == DirectedGraph(3, {{2, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 1}, {2, 2}, {3, 3}}));
    CHECK(add_all_loops(crossed) == crossed);
}

TEST_CASE("star_diagonal and delete_rows") {
    const Pattern a = to_pattern(fixtures::undamped_example());
    CHECK(star_diagonal(a).to_text() == "**0\n**0\n***\n");
    CHECK(delete_rows(a, {1}).to_text() == "*00\n**0\n");
    CHECK(delete_rows(a, {}) == a);
    CHECK(delete_rows(a, {1, 2, 3}).rows() == 0);
    CHECK(delete_rows(a, {1, 2, 3}).cols() == 3);
    CHECK_THROWS_AS(delete_rows(a, {4}), InputError);
    CHECK_THROWS_AS(star_diagonal(Pattern(2, 3)), InputError);
}

TEST_CASE("to_bipartite") {
    const Pattern crossed = star_diagonal(to_pattern(fixtures::undamped_example()));
    CHECK(to_bipartite(crossed).edges() ==
          std::vector<BiEdge>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}});
    CHECK(to_bipartite(Pattern(2, 2)).edges().empty());
    CHECK(to_bipartite(to_pattern(fixtures::loop_example())).edges() ==
          std::vector<BiEdge>{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}});
    CHECK_THROWS_AS(to_bipartite(to_simple_pattern(fixtures::simple_example())), InputError);
}

TEST_CASE("is_realization") {
    const Pattern simple = to_simple_pattern(fixtures::simple_example());
    const Pattern loop = to_pattern(fixtures::loop_example());
    CHECK(is_realization(fixtures::a1(), simple));
    CHECK(is_realization(fixtures::a1(), loop));
    CHECK(is_realization(fixtures::a2(), simple));
    CHECK_FALSE(is_realization(fixtures::a2(), loop));
    CHECK(is_realization(RationalMatrix(2, 2), Pattern(2, 2, Entry::Free)));
    CHECK_THROWS_AS(is_realization(RationalMatrix(2, 3), Pattern(2, 2)), InputError);
}

TEST_CASE("pattern text parsing") {
    const Pattern p = parse_pattern("**0\n*0 0\n\n**?\n");
    CHECK(p.rows() == 3);
    CHECK(p.at(3, 3) == Entry::Free);
    CHECK(parse_pattern(p.to_text()) == p);
    CHECK_THROWS_AS(parse_pattern("*x\n"), InputError);
    CHECK_THROWS_AS(parse_pattern("**\n*\n"), InputError);
}

TEST_CASE("matrix text parsing and rank") {
    const RationalMatrix m = parse_matrix("-3 1 0\n9 0 0\n1/2 -4/8 0\n");
    CHECK(m(2, 1) == Rational(-1, 2));
    CHECK(parse_matrix(m.to_text()) == m);
    CHECK(rank(m) == 2);
    CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), InputError);
    CHECK_THROWS_AS(parse_matrix("1 x\n"), InputError);
    CHECK_THROWS_AS(parse_matrix("1/0\n"), InputError);
}

TEST_CASE("property: pattern <-> graph round trip and bipartite agreement") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_loop_digraph(rng, 7);
        CHECK(graph_of_pattern(to_pattern(g)) == g);

        // B_G: row i joined to column j iff j -> i.
        const auto b = to_bipartite(to_pattern(g));
        CHECK(b == bipartite_of_graph(g));
        for (int i = 1; i <= g.size(); ++i) {
            for (int j = 1; j <= g.size(); ++j) CHECK(b.has_edge(i, j) == g.has_edge(j, i));
        }

        CHECK(strip_loops(strip_loops(g)) == strip_loops(g));
        CHECK(add_all_loops(add_all_loops(g)) == add_all_loops(g));
        CHECK(strip_loops(add_all_loops(g)) == strip_loops(g));

        VertexSet rows;
        for (int v = 1; v <= g.size(); ++v) {
            if (rng() % 2) rows.insert(v);
        }
        const Pattern cut = delete_rows(to_pattern(g), rows);
        CHECK(cut.cols() == g.size());
        CHECK(cut.rows() == g.size() - static_cast<int>(rows.size()));

        // Realizations of A(G) are realizations of A_s(G_s).
        const auto a = sample_realization(to_pattern(g), rng());
        CHECK(is_realization(a, to_pattern(g)));
        CHECK(is_realization(a, to_simple_pattern(strip_loops(g))));
    }
}
