#include "leafage/generators.hpp"

#include <algorithm>
#include <string>

#include "leafage/error.hpp"

namespace leafage {

namespace {

int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Error(ErrorKind::BadParams, what);
    }
}

}

Graph random_tree(int n, Rng& rng) {
    require(n >= 1, "tree needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(uniform(rng, 0, v - 1), v);
    }
    return Graph::from_edges(n, edges);
}

Graph random_ktree(int n, int k, Rng& rng) {
    require(k >= 1 && n >= k + 1, "k-tree needs k >= 1 and n >= k + 1");
    std::vector<std::pair<int, int>> edges;
    // Every (k+1)-clique created so far; a random k-subset of one is a k-clique.
    std::vector<VertexSet> cliques;
    VertexSet base;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j < i; ++j) {
            edges.emplace_back(j, i);
        }
        base.push_back(i);
    }
    cliques.push_back(base);
    for (int v = k + 1; v < n; ++v) {
        VertexSet host = cliques[uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
        host.erase(host.begin() + uniform(rng, 0, k));
        for (int w : host) {
            edges.emplace_back(w, v);
        }
        host.push_back(v);
        cliques.push_back(host);
    }
    return Graph::from_edges(n, edges);
}

Graph random_block_graph(int n, int max_block, Rng& rng) {
    require(n >= 1 && max_block >= 2, "block graph needs n >= 1 and max_block >= 2");
    std::vector<std::pair<int, int>> edges;
    int count = 1;
    while (count < n) {
        int size = std::min(uniform(rng, 2, max_block), n - count + 1);
        VertexSet block{uniform(rng, 0, count - 1)};
        for (int i = 1; i < size; ++i) {
            block.push_back(count++);
        }
        for (size_t i = 0; i < block.size(); ++i) {
            for (size_t j = i + 1; j < block.size(); ++j) {
                edges.emplace_back(block[i], block[j]);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph random_chordal(int n, Rng& rng, double keep) {
    require(n >= 1, "random chordal needs n >= 1");
    std::bernoulli_distribution coin(keep);
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> cliques{{0}};
    for (int v = 1; v < n; ++v) {
        int pick = uniform(rng, 0, static_cast<int>(cliques.size()) - 1);
        const VertexSet& q = cliques[pick];
        VertexSet joined;
        for (int w : q) {
            if (coin(rng)) {
                joined.push_back(w);
            }
        }
        if (joined.empty()) {
            joined.push_back(q[uniform(rng, 0, static_cast<int>(q.size()) - 1)]);
        }
        for (int w : joined) {
            edges.emplace_back(w, v);
        }
        bool grows = joined.size() == q.size();
        joined.push_back(v);
        if (grows) {
            cliques[pick] = joined;
        } else {
            cliques.push_back(joined);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph random_claw_free_chordal(int n, Rng& rng) {
    require(n >= 3, "claw-free sample needs n >= 3");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        // Denser joins make claws rarer.
        Graph g = random_chordal(n, rng, 0.8);
        if (!is_complete(g) && is_claw_free(g).claw_free) {
            return g;
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "no claw-free sample found");
}

Graph random_two_clique_derived(int n, Rng& rng) {
    require(n >= 5, "two-clique sample needs n >= 5");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g = random_chordal(n, rng, 0.6);
        if (is_complete(g)) {
            continue;
        }
        Graph core = derived_graph(g).graph;
        if (core.size() < 3 || is_complete(core) || !is_connected(core)) {
            continue;
        }
        // Exactly two maximal cliques Q1, Q2 iff the universal vertices (Q1 n Q2)
        // are nonempty and the rest splits into two cliques with no edges between.
        VertexSet universal;
        for (int v = 0; v < core.size(); ++v) {
            if (core.degree(v) == core.size() - 1) {
                universal.push_back(v);
            }
        }
        auto rest = delete_vertices(core, universal).graph;
        auto parts = components(rest);
        if (!universal.empty() && parts.size() == 2 && is_clique(rest, parts[0]) &&
            is_clique(rest, parts[1])) {
            return g;
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "no two-clique-derived sample found");
}

Graph kite(int n) {
    require(n >= 1, "kite needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i - 1, i);
        edges.emplace_back(i - 1, n + i);
        edges.emplace_back(i, n + i);
        edges.emplace_back(i - 1, 2 * n + i);
        edges.emplace_back(i, 2 * n + i);
    }
    return Graph::from_edges(3 * n + 1, edges);
}

}
