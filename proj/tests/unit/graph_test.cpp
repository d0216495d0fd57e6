#include <doctest.h>

#include <algorithm>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "leafage/error.hpp"
#include "leafage/generators.hpp"
#include "leafage/graph.hpp"

using namespace leafage;

TEST_CASE("graph construction rejects loops and bad ids") {
    std::vector<std::pair<int, int>> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
    std::vector<std::pair<int, int>> far{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(3, far), Error);
    auto g = fixtures::make(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("chordality of small named graphs") {
    auto c4 = recognize_chordal(fixtures::cycle(4));
    REQUIRE_FALSE(c4.chordal());
    auto cyc = c4.witness_cycle;
    std::sort(cyc.begin(), cyc.end());
    CHECK(cyc == VertexSet{0, 1, 2, 3});

    auto k3 = recognize_chordal(fixtures::complete(3));
    REQUIRE(k3.chordal());
    CHECK(is_peo(fixtures::complete(3), *k3.peo));

    CHECK(is_chordal(fixtures::fig1()));
    CHECK(is_chordal(fixtures::sun3()));
}

TEST_CASE("chordless cycle witness is an induced cycle") {
    for (int n = 4; n <= 8; ++n) {
        auto g = fixtures::cycle(n);
        auto v = recognize_chordal(g);
        REQUIRE_FALSE(v.chordal());
        REQUIRE(static_cast<int>(v.witness_cycle.size()) == n);
        auto h = induced_subgraph(g, v.witness_cycle).graph;
        for (int x = 0; x < h.size(); ++x) CHECK(h.degree(x) == 2);
    }
}

TEST_CASE("recognition agrees with induced-cycle search") {
    Rng rng(11);
    std::bernoulli_distribution coin(0.45);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + trial % 5;
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        auto g = Graph::from_edges(n, e);
        auto verdict = recognize_chordal(g);
        REQUIRE(verdict.chordal() == brute::chordal(g));
        if (verdict.chordal()) {
            CHECK(is_peo(g, *verdict.peo));
        } else {
            auto h = induced_subgraph(g, verdict.witness_cycle).graph;
            CHECK(h.size() >= 4);
            for (int x = 0; x < h.size(); ++x) CHECK(h.degree(x) == 2);
        }
    }
}

TEST_CASE("simplicial vertices and derived graph") {
    CHECK(simplicial_vertices(fixtures::path(3)) == VertexSet{0, 2});
    CHECK(simplicial_vertices(fixtures::complete(4)) == VertexSet{0, 1, 2, 3});
    CHECK(simplicial_vertices(fixtures::fig1()) == VertexSet{5, 6, 7, 8, 9, 10});
    CHECK(simplicial_vertices(Graph(2)) == VertexSet{0, 1});

    auto p4 = derived_graph(fixtures::path(4));
    CHECK(p4.graph.size() == 2);
    CHECK(p4.to_parent == std::vector<int>{1, 2});
    CHECK(derived_graph(fixtures::star(4)).to_parent == std::vector<int>{0});
    auto core = derived_graph(fixtures::fig1());
    CHECK(core.graph.size() == 5);
    CHECK(core.graph.edge_count() == 6);
}

TEST_CASE("reduction merges equal closed neighborhoods") {
    auto r = reduce(fixtures::k4_minus_e());
    CHECK(r.reduced_graph.size() == 3);
    CHECK(r.reduced_graph.edge_count() == 2);
    CHECK(r.representative[1] == 0);
    CHECK(reduce(fixtures::complete(5)).reduced_graph.size() == 1);
    auto p = reduce(fixtures::path(5));
    CHECK(p.reduced_graph == fixtures::path(5));
}

TEST_CASE("reduction properties on random chordal graphs") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_chordal(3 + trial % 10, rng, 0.7);
        auto r = reduce(g);
        for (int u = 0; u < g.size(); ++u)
            for (int v = 0; v < g.size(); ++v) {
                bool same = closed_neighborhood(g, u) == closed_neighborhood(g, v);
                CHECK(same == (r.representative[u] == r.representative[v]));
                if (r.reduced_id[u] != r.reduced_id[v])
                    CHECK(g.adjacent(u, v) == r.reduced_graph.adjacent(r.reduced_id[u], r.reduced_id[v]));
            }
        CHECK(is_reduced(r.reduced_graph));
        CHECK(reduce(r.reduced_graph).reduced_graph == r.reduced_graph);
    }
}

TEST_CASE("claw detection") {
    auto claw = is_claw_free(fixtures::star(3));
    CHECK_FALSE(claw.claw_free);
    CHECK(claw.witness[0] == 0);
    CHECK(is_claw_free(fixtures::sun3()).claw_free);
    CHECK_FALSE(is_claw_free(fixtures::p5_join_k1()).claw_free);
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_chordal(4 + trial % 7, rng);
        CHECK(is_claw_free(g).claw_free == !brute::has_claw(g));
    }
}

TEST_CASE("minimal cutsets") {
    CHECK(minimal_separators_for(fixtures::path(3), 0) == std::vector<VertexSet>{{1}});
    CHECK(minimal_cutsets(fixtures::complete(5)).empty());
    auto core = derived_graph(fixtures::fig1()).graph;
    CHECK(minimal_cutsets(core) == std::vector<VertexSet>{{0}});
    CHECK(minimal_cutsets(core) == brute::minimal_cutsets(core));
    CHECK_THROWS_AS(minimal_separators_for(Graph(2), 0), Error);
}

TEST_CASE("minimal cutsets match subset enumeration and are cliques") {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_chordal(3 + trial % 9, rng);
        auto cuts = minimal_cutsets(g);
        CHECK(cuts == brute::minimal_cutsets(g));
        for (auto& s : cuts) {
            CHECK(is_clique(g, s));
            // Every component of G - S has a vertex adjacent to all of S.
            for (auto& comp : components_after_delete(g, s)) {
                bool found = std::any_of(comp.begin(), comp.end(), [&](int v) {
                    return std::all_of(s.begin(), s.end(), [&](int x) { return g.adjacent(v, x); });
                });
                CHECK(found);
            }
        }
        for (int x = 0; x < g.size(); ++x)
            for (auto& s : minimal_separators_for(g, x))
                for (int y : s) CHECK(g.adjacent(x, y));
    }
}

TEST_CASE("non-clique chordal graphs have two nonadjacent simplicial vertices") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_chordal(2 + trial % 12, rng);
        REQUIRE(is_peo(g, *recognize_chordal(g).peo));
        if (is_complete(g)) continue;
        auto s = simplicial_vertices(g);
        bool found = false;
        for (int a : s)
            for (int b : s) found |= a != b && !g.adjacent(a, b);
        CHECK(found);
    }
}

TEST_CASE("blocks, trees, block graphs and k-trees") {
    auto g = fixtures::hung_triangles();
    CHECK(blocks(g).size() == 4);
    CHECK(cut_vertices(g) == VertexSet{0, 1, 2});
    CHECK(is_block_graph(g));
    CHECK_FALSE(is_block_graph(fixtures::k4_minus_e()));
    CHECK(is_tree(fixtures::spider(3)));
    CHECK_FALSE(is_tree(fixtures::cycle(4)));

    CHECK(ktree_width(fixtures::sun3()) == 2);
    CHECK(ktree_width(fixtures::p5_join_k1()) == 2);
    CHECK(ktree_width(fixtures::path(5)) == 1);
    CHECK_FALSE(ktree_width(fixtures::fig1()).has_value());
    CHECK_FALSE(ktree_width(fixtures::complete(4)).has_value());
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + trial % 4;
        auto t = random_ktree(k + 2 + trial % 7, k, rng);
        CHECK(ktree_width(t) == k);
        CHECK(is_block_graph(random_block_graph(2 + trial % 12, 4, rng)));
        CHECK(is_tree(random_tree(1 + trial % 12, rng)));
    }
}

TEST_CASE("kite shape") {
    auto g = kite(4);
    CHECK(g.size() == 13);
    CHECK(g.edge_count() == 20);
    CHECK(is_chordal(g));
}
