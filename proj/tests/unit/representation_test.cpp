#include <doctest.h>

#include "../support/fixtures.hpp"
#include "leafage/cliques.hpp"
#include "leafage/error.hpp"
#include "leafage/generators.hpp"
#include "leafage/representation.hpp"

using namespace leafage;

namespace {

SubtreeRepresentation rep_of(int nodes, std::vector<std::pair<int, int>> edges, std::vector<VertexSet> assign) {
    return {{nodes, std::move(edges)}, std::move(assign)};
}

}

TEST_CASE("verify accepts and rejects") {
    auto k3 = fixtures::complete(3);
    CHECK(verify(rep_of(1, {}, {{0}, {0}, {0}}), k3));
    auto p3 = fixtures::path(3);
    auto good = rep_of(3, {{0, 1}, {1, 2}}, {{0}, {0, 1, 2}, {2}});
    CHECK(verify(good, p3));
    auto broken = rep_of(3, {{0, 1}, {1, 2}}, {{0}, {0, 2}, {2}});
    auto v = verify(broken, p3);
    CHECK_FALSE(v);
    CHECK(v.violation.find("disconnected subtree") != std::string::npos);
    auto extra = rep_of(3, {{0, 1}, {1, 2}}, {{0, 1}, {0, 1, 2}, {1, 2}});
    CHECK_FALSE(verify(extra, p3));
    CHECK_FALSE(verify(rep_of(3, {{0, 1}}, {{0}, {0, 1}, {1}}), p3));
}

TEST_CASE("leaf counts") {
    CHECK(leaf_count(HostTree{3, {{0, 1}, {1, 2}}}) == 2);
    CHECK(leaf_count(HostTree{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}}) == 4);
    CHECK(leaf_count(HostTree{1, {}}) == 1);
}

TEST_CASE("proper and minimal") {
    CHECK(is_proper(rep_of(1, {}, {{0}, {0}})));
    auto nested = rep_of(2, {{0, 1}}, {{0}, {0, 1}});
    auto v = is_proper(nested);
    CHECK_FALSE(v);
    CHECK(v.violation.find("0") != std::string::npos);

    auto p3 = fixtures::path(3);
    CHECK(is_minimal(rep_of(2, {{0, 1}}, {{0}, {0, 1}, {1}}), p3));
    // Subdividing the host edge and stretching both subtrees breaks minimality.
    auto stretched = rep_of(3, {{0, 2}, {2, 1}}, {{0}, {0, 1, 2}, {1}});
    CHECK(verify(stretched, p3));
    CHECK_FALSE(is_minimal(stretched, p3));
    CHECK(is_minimal(rep_of(1, {}, {{0}, {0}, {0}}), fixtures::complete(3)));
}

TEST_CASE("asteroidal collections") {
    HostTree star{4, {{0, 1}, {0, 2}, {0, 3}}};
    CHECK(is_asteroidal_collection(star, {{1}, {2}, {3}}));
    HostTree path{3, {{0, 1}, {1, 2}}};
    CHECK_FALSE(is_asteroidal_collection(path, {{0}, {1}, {2}}));
    CHECK_THROWS_AS(is_asteroidal_collection(path, {{0, 1}, {1}}), Error);
    CHECK_THROWS_AS(is_asteroidal_collection(path, {{0, 2}}), Error);
}

TEST_CASE("minimize contracts nested edges without adding leaves") {
    auto p3 = fixtures::path(3);
    auto stretched = rep_of(3, {{0, 2}, {2, 1}}, {{0}, {0, 1, 2}, {1}});
    auto m = minimize(stretched);
    CHECK(m.host.node_count == 2);
    CHECK(verify(m, p3));
    CHECK(is_minimal(m, p3));

    Rng rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_chordal(2 + trial % 10, rng);
        auto base = dominator_tree_representation(build_clique_structure(g), g);
        // Hang an empty pendant node and a subdivided edge, then normalize.
        auto grown = base;
        int extra = grown.host.node_count++;
        grown.host.edges.emplace_back(0, extra);
        auto shrunk = minimize(grown);
        CHECK(verify(shrunk, g));
        CHECK(is_minimal(shrunk, g));
        CHECK(leaf_count(shrunk) <= leaf_count(grown));
    }
}

TEST_CASE("certificate json and dot round trip") {
    auto g = fixtures::path(3);
    auto rep = rep_of(2, {{1, 0}}, {{0}, {0, 1}, {1}});
    auto doc = to_json(rep, "interval", true);
    CHECK(doc["host_edges"][0][0] == 0);
    CHECK(doc["meta"]["leaves"] == 2);
    auto back = representation_from_json(doc);
    CHECK(verify(back, g));
    CHECK(back.assign == canonical(rep).assign);
    CHECK_THROWS_AS(representation_from_json(nlohmann::json::parse(R"({"n": 2})")), Error);
    auto dot = to_dot(rep);
    CHECK(dot == "graph host {\n  q0 [label=\"0 1\"];\n  q1 [label=\"1 2\"];\n  q0 -- q1;\n}\n");
    CHECK(to_dot(rep_of(1, {}, {{0}, {0}})) == "graph host {\n  q0 [label=\"0 1\"];\n}\n");
}
