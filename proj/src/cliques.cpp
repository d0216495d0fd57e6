#include "leafage/cliques.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "leafage/error.hpp"

namespace leafage {

CliqueStructure build_clique_structure(const Graph& g, const Peo& peo) {
    if (!is_peo(g, peo)) {
        throw Error(ErrorKind::InvalidPeo, "ordering is not a perfect elimination ordering");
    }
    require_connected(g, "build_clique_structure");
    int n = g.size();
    CliqueStructure cs;
    cs.peo_used = peo;
    std::vector<char> added(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = peo.order[i];
        VertexSet earlier;
        for (int w : g.neighbors(v)) {
            if (added[w]) {
                earlier.push_back(w);
            }
        }
        added[v] = 1;
        if (cs.cliques.empty()) {
            cs.cliques.push_back({v});
            cs.dominator.push_back(-1);
            continue;
        }
        if (earlier.empty()) {
            throw Error(ErrorKind::Disconnected, "build_clique_structure: input graph is disconnected");
        }
        auto same = std::find(cs.cliques.begin(), cs.cliques.end(), earlier);
        if (same != cs.cliques.end()) {
            same->insert(std::lower_bound(same->begin(), same->end(), v), v);
            continue;
        }
        int dom = -1;
        for (int j = 0; j < static_cast<int>(cs.cliques.size()) && dom < 0; ++j) {
            if (std::includes(cs.cliques[j].begin(), cs.cliques[j].end(), earlier.begin(), earlier.end())) {
                dom = j;
            }
        }
        VertexSet created = earlier;
        created.insert(std::lower_bound(created.begin(), created.end(), v), v);
        cs.cliques.push_back(std::move(created));
        cs.dominator.push_back(dom);
    }
    return cs;
}

CliqueStructure build_clique_structure(const Graph& g) {
    auto verdict = recognize_chordal(g);
    if (!verdict.chordal()) {
        throw Error(ErrorKind::NotChordal, "build_clique_structure: input graph is not chordal");
    }
    return build_clique_structure(g, *verdict.peo);
}

SubtreeRepresentation clique_tree_representation(const Graph& g, const std::vector<VertexSet>& cliques,
                                                 const std::vector<std::pair<int, int>>& tree_edges) {
    SubtreeRepresentation rep;
    rep.host.node_count = static_cast<int>(cliques.size());
    rep.host.edges = tree_edges;
    rep.assign.assign(g.size(), {});
    for (int t = 0; t < static_cast<int>(cliques.size()); ++t) {
        for (int v : cliques[t]) {
            rep.assign[v].push_back(t);
        }
    }
    return canonical(rep);
}

SubtreeRepresentation dominator_tree_representation(const CliqueStructure& cs, const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < static_cast<int>(cs.cliques.size()); ++i) {
        edges.emplace_back(cs.dominator[i], i);
    }
    auto rep = clique_tree_representation(g, cs.cliques, edges);
    // Every leaf clique owns a vertex that lies in no other maximal clique.
    if (cs.cliques.size() >= 2) {
        std::vector<int> degree(cs.cliques.size(), 0);
        for (auto [a, b] : edges) {
            ++degree[a];
            ++degree[b];
        }
        for (size_t t = 0; t < cs.cliques.size(); ++t) {
            if (degree[t] != 1) {
                continue;
            }
            bool owns = std::any_of(cs.cliques[t].begin(), cs.cliques[t].end(),
                                    [&](int v) { return rep.assign[v].size() == 1; });
            if (!owns) {
                throw Error(ErrorKind::ConstructionFailed, "leaf clique without a private vertex");
            }
        }
    }
    return rep;
}

WeightedCliqueGraph weighted_clique_graph(const CliqueStructure& cs) {
    WeightedCliqueGraph wcg;
    wcg.node_count = static_cast<int>(cs.cliques.size());
    for (int i = 0; i < wcg.node_count; ++i) {
        for (int j = i + 1; j < wcg.node_count; ++j) {
            VertexSet common;
            std::set_intersection(cs.cliques[i].begin(), cs.cliques[i].end(), cs.cliques[j].begin(),
                                  cs.cliques[j].end(), std::back_inserter(common));
            if (!common.empty()) {
                wcg.edges.push_back({i, j, static_cast<int>(common.size())});
            }
        }
    }
    return wcg;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }
};

// Edges of one weight class, between components formed by heavier edges.
struct Level {
    std::vector<std::pair<int, int>> original;  // clique-index endpoints
    std::vector<std::pair<int, int>> contracted;  // component endpoints
    int component_count = 0;
    int rank = 0;  // edges every maximum tree takes from this level
};

std::vector<Level> weight_levels(const WeightedCliqueGraph& wcg) {
    std::map<int, std::vector<WeightedEdge>, std::greater<>> by_weight;
    for (auto& e : wcg.edges) {
        by_weight[e.weight].push_back(e);
    }
    std::vector<Level> levels;
    UnionFind uf(wcg.node_count);
    for (auto& [w, edges] : by_weight) {
        Level level;
        std::map<int, int> compact;
        for (auto& e : edges) {
            int a = uf.find(e.a);
            int b = uf.find(e.b);
            if (a == b) {
                continue;
            }
            for (int r : {a, b}) {
                compact.emplace(r, static_cast<int>(compact.size()));
            }
            level.original.emplace_back(e.a, e.b);
            level.contracted.emplace_back(compact[a], compact[b]);
        }
        level.component_count = static_cast<int>(compact.size());
        for (auto& e : edges) {
            level.rank += uf.unite(e.a, e.b);
        }
        if (!level.original.empty()) {
            levels.push_back(std::move(level));
        }
    }
    return levels;
}

// Determinant of an integer matrix by fraction-free elimination.
__int128 bareiss_determinant(std::vector<std::vector<__int128>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) {
        return 1;
    }
    __int128 sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) {
                return 0;
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}

long long count_max_weight_trees(const WeightedCliqueGraph& wcg, long long limit) {
    __int128 total = 1;
    for (auto& level : weight_levels(wcg)) {
        // Spanning trees of each connected piece of the contracted multigraph.
        UnionFind pieces(level.component_count);
        for (auto [a, b] : level.contracted) {
            pieces.unite(a, b);
        }
        std::map<int, std::vector<int>> members;
        for (int c = 0; c < level.component_count; ++c) {
            members[pieces.find(c)].push_back(c);
        }
        for (auto& [root, nodes] : members) {
            int size = static_cast<int>(nodes.size());
            std::map<int, int> local;
            for (int i = 0; i < size; ++i) {
                local[nodes[i]] = i;
            }
            std::vector<std::vector<__int128>> lap(size, std::vector<__int128>(size, 0));
            for (auto [a, b] : level.contracted) {
                if (pieces.find(a) != root) {
                    continue;
                }
                int x = local[a];
                int y = local[b];
                lap[x][x] += 1;
                lap[y][y] += 1;
                lap[x][y] -= 1;
                lap[y][x] -= 1;
            }
            lap.pop_back();
            for (auto& row : lap) {
                row.pop_back();
            }
            total *= bareiss_determinant(lap);
            if (total > limit) {
                return limit;
            }
        }
    }
    return static_cast<long long>(total);
}

namespace {

struct TreeWalker {
    const std::vector<Level>& levels;
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit;
    std::vector<std::pair<int, int>> chosen;

    // Returns false once the visitor asks to stop.
    bool level(size_t index) {
        if (index == levels.size()) {
            return visit(chosen);
        }
        UnionFind uf(levels[index].component_count);
        return edge(index, 0, 0, uf);
    }

    bool edge(size_t index, size_t e, int taken, UnionFind uf) {
        const Level& lv = levels[index];
        if (taken == lv.rank) {
            return level(index + 1);
        }
        if (e == lv.contracted.size()) {
            return true;
        }
        auto [a, b] = lv.contracted[e];
        if (uf.find(a) != uf.find(b)) {
            UnionFind with = uf;
            with.unite(a, b);
            chosen.push_back(lv.original[e]);
            bool go_on = edge(index, e + 1, taken + 1, with);
            chosen.pop_back();
            if (!go_on) {
                return false;
            }
        }
        // Skipping e is only useful if the remaining edges still reach the rank.
        UnionFind rest = uf;
        int reach = taken;
        for (size_t f = e + 1; f < lv.contracted.size(); ++f) {
            reach += rest.unite(lv.contracted[f].first, lv.contracted[f].second);
        }
        if (reach < lv.rank) {
            return true;
        }
        return edge(index, e + 1, taken, uf);
    }
};

int tree_leaves(int nodes, const std::vector<std::pair<int, int>>& edges) {
    HostTree host{nodes, edges};
    return leaf_count(host);
}

}

void for_each_max_weight_tree(const WeightedCliqueGraph& wcg,
                              const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit) {
    auto levels = weight_levels(wcg);
    TreeWalker walker{levels, visit, {}};
    walker.level(0);
}

LeafageReport oracle_leafage(const Graph& g, int max_cliques, long long tree_limit) {
    require_connected(g, "oracle_leafage");
    auto cs = build_clique_structure(g);
    int m = static_cast<int>(cs.cliques.size());
    if (m > max_cliques) {
        throw Error(ErrorKind::CapExceeded, "oracle: " + std::to_string(m) + " maximal cliques exceed cap " +
                                                std::to_string(max_cliques));
    }
    LeafageReport report;
    report.method = "oracle";
    report.exact = true;
    if (m == 1) {
        report.lower = report.upper = 1;
        report.certificate = clique_tree_representation(g, cs.cliques, {});
        return report;
    }
    auto wcg = weighted_clique_graph(cs);
    long long trees = count_max_weight_trees(wcg, tree_limit + 1);
    if (trees > tree_limit) {
        throw Error(ErrorKind::CapExceeded, "oracle: more than " + std::to_string(tree_limit) + " clique trees");
    }
    int best = m + 1;
    std::vector<std::pair<int, int>> best_tree;
    for_each_max_weight_tree(wcg, [&](const std::vector<std::pair<int, int>>& edges) {
        int leaves = tree_leaves(m, edges);
        if (leaves < best) {
            best = leaves;
            best_tree = edges;
        }
        return best > 2;
    });
    report.lower = report.upper = best;
    report.certificate = clique_tree_representation(g, cs.cliques, best_tree);
    report.diagnostics.push_back("maximal cliques: " + std::to_string(m));
    report.diagnostics.push_back("clique trees: " + std::to_string(trees));
    return report;
}

}
