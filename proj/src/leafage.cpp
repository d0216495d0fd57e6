#include "leafage/leafage.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "host_builder.hpp"
#include "leafage/asteroidal.hpp"
#include "leafage/cliques.hpp"
#include "leafage/error.hpp"

namespace leafage {

namespace {

bool subset_of(const VertexSet& a, const std::set<int>& b) {
    return std::all_of(a.begin(), a.end(), [&](int v) { return b.count(v) > 0; });
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet merged(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LeafageReport exact_report(const std::string& method, int value, SubtreeRepresentation rep, const Graph& g) {
    auto verdict = verify(rep, g);
    if (!verdict) {
        throw Error(ErrorKind::ConstructionFailed, method + ": invalid certificate: " + verdict.violation);
    }
    int leaves = leaf_count(rep);
    if (leaves != value) {
        throw Error(ErrorKind::ConstructionFailed, method + ": certificate has " + std::to_string(leaves) +
                                                       " leaves, expected " + std::to_string(value));
    }
    LeafageReport report;
    report.lower = report.upper = value;
    report.exact = true;
    report.method = method;
    report.certificate = std::move(rep);
    return report;
}

SubtreeRepresentation single_node(const Graph& g) {
    SubtreeRepresentation rep;
    rep.host.node_count = 1;
    rep.assign.assign(g.size(), VertexSet{0});
    return rep;
}

// Interval fast path shared by the class routes: exact 2 on a host path.
LeafageReport interval_report(const Graph& g, const std::string& method) {
    auto rep = interval_representation(g);
    if (!rep) {
        throw Error(ErrorKind::ConstructionFailed, method + ": no clique path found for an interval graph");
    }
    return exact_report(method, 2, std::move(*rep), g);
}

}

std::vector<SimplicialGroup> simplicial_groups(const Graph& g) {
    auto simplicial = simplicial_vertices(g);
    std::vector<char> in_s(g.size(), 0);
    for (int v : simplicial) {
        in_s[v] = 1;
    }
    std::map<VertexSet, VertexSet> members;
    for (int v : simplicial) {
        VertexSet r;
        for (int u : g.neighbors(v)) {
            if (!in_s[u]) {
                r.push_back(u);
            }
        }
        members[r].push_back(v);
    }
    std::vector<SimplicialGroup> groups;
    for (auto& [r, vs] : members) {
        SimplicialGroup group;
        group.neighborhood = r;
        auto sub = induced_subgraph(g, vs);
        for (auto& comp : components(sub.graph)) {
            group.components.push_back(sub.lift(comp));
        }
        std::sort(group.components.begin(), group.components.end());
        groups.push_back(std::move(group));
    }
    return groups;
}

SubtreeRepresentation chain_representation(const Graph& g, const std::vector<std::vector<VertexSet>>& chains) {
    auto core = derived_graph(g);
    if (core.graph.size() == 0) {
        throw Error(ErrorKind::WrongClass, "chain_representation: graph is a clique");
    }
    auto groups = simplicial_groups(g);
    std::map<VertexSet, const SimplicialGroup*> by_neighborhood;
    for (auto& group : groups) {
        by_neighborhood[group.neighborhood] = &group;
    }

    detail::HostBuilder host;
    auto cs = build_clique_structure(core.graph);
    std::vector<VertexSet> core_cliques;
    for (int i = 0; i < static_cast<int>(cs.cliques.size()); ++i) {
        core_cliques.push_back(core.lift(cs.cliques[i]));
        std::sort(core_cliques.back().begin(), core_cliques.back().end());
        host.add_node(core_cliques.back());
        if (i > 0) {
            host.add_edge(cs.dominator[i], i);
        }
    }

    std::set<VertexSet> used;
    for (auto& chain : chains) {
        if (chain.empty()) {
            throw Error(ErrorKind::BadParams, "chain_representation: empty chain");
        }
        int previous = -1;
        for (size_t i = 0; i < chain.size(); ++i) {
            auto it = by_neighborhood.find(chain[i]);
            if (it == by_neighborhood.end() || !used.insert(chain[i]).second) {
                throw Error(ErrorKind::BadParams, "chain_representation: chains must partition the neighborhoods");
            }
            if (i > 0 && !(subset_of(chain[i - 1], chain[i]) && chain[i - 1] != chain[i])) {
                throw Error(ErrorKind::BadParams, "chain_representation: chain is not increasing");
            }
            for (auto& component : it->second->components) {
                int t = host.add_node(merged(component, chain[i]));
                if (previous >= 0) {
                    host.add_edge(previous, t);
                }
                previous = t;
            }
        }
        int hook = -1;
        for (int q = 0; q < static_cast<int>(core_cliques.size()); ++q) {
            if (subset_of(chain.back(), core_cliques[q])) {
                hook = q;
                break;
            }
        }
        if (hook < 0) {
            throw Error(ErrorKind::ConstructionFailed, "chain_representation: no clique of G' holds a chain top");
        }
        host.add_edge(previous, hook);
    }
    if (used.size() != groups.size()) {
        throw Error(ErrorKind::BadParams, "chain_representation: chains miss a neighborhood");
    }
    auto rep = minimize(host.build(g.size()));
    auto verdict = verify(rep, g);
    if (!verdict) {
        throw Error(ErrorKind::ConstructionFailed, "chain_representation: " + verdict.violation);
    }
    return rep;
}

std::optional<SubtreeRepresentation> interval_representation(const Graph& g, long long step_limit) {
    require_connected(g, "interval_representation");
    require_chordal(g, "interval_representation");
    auto cs = build_clique_structure(g);
    int m = static_cast<int>(cs.cliques.size());
    if (m == 1) {
        return single_node(g);
    }
    int n = g.size();
    std::vector<int> remaining(n, 0);
    for (auto& q : cs.cliques) {
        for (int v : q) {
            ++remaining[v];
        }
    }
    std::vector<char> placed(m, 0), closed(n, 0);
    std::vector<int> order;
    long long steps = 0;

    // A vertex still owed cliques must lie in the next clique; a vertex that
    // was left behind may never return.
    auto fits = [&](int c) {
        std::vector<char> in_c(n, 0);
        for (int v : cs.cliques[c]) {
            if (closed[v]) {
                return false;
            }
            in_c[v] = 1;
        }
        if (!order.empty()) {
            for (int v : cs.cliques[order.back()]) {
                if (remaining[v] > 0 && !in_c[v]) {
                    return false;
                }
            }
        }
        return true;
    };

    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(order.size()) == m) {
            return true;
        }
        if (++steps > step_limit) {
            return false;
        }
        for (int c = 0; c < m; ++c) {
            if (placed[c] || !fits(c)) {
                continue;
            }
            std::vector<int> newly_closed;
            if (!order.empty()) {
                std::vector<char> in_c(n, 0);
                for (int v : cs.cliques[c]) {
                    in_c[v] = 1;
                }
                for (int v : cs.cliques[order.back()]) {
                    if (!in_c[v] && !closed[v]) {
                        closed[v] = 1;
                        newly_closed.push_back(v);
                    }
                }
            }
            placed[c] = 1;
            order.push_back(c);
            for (int v : cs.cliques[c]) {
                --remaining[v];
            }
            if (extend()) {
                return true;
            }
            for (int v : cs.cliques[c]) {
                ++remaining[v];
            }
            order.pop_back();
            placed[c] = 0;
            for (int v : newly_closed) {
                closed[v] = 0;
            }
            if (steps > step_limit) {
                return false;
            }
        }
        return false;
    };

    // An end clique of a clique path owns a private vertex.
    std::vector<int> starts;
    for (int c = 0; c < m; ++c) {
        for (int v : cs.cliques[c]) {
            if (remaining[v] == 1) {
                starts.push_back(c);
                break;
            }
        }
    }
    for (int c : starts) {
        placed[c] = 1;
        order.push_back(c);
        for (int v : cs.cliques[c]) {
            --remaining[v];
        }
        if (extend()) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < m; ++i) {
                edges.emplace_back(order[i], order[i + 1]);
            }
            return canonical(clique_tree_representation(g, cs.cliques, edges));
        }
        for (int v : cs.cliques[c]) {
            ++remaining[v];
        }
        order.pop_back();
        placed[c] = 0;
        if (steps > step_limit) {
            break;
        }
    }
    return std::nullopt;
}

LeafageReport bounds(const Graph& g, const LeafageOptions& options) {
    require_connected(g, "bounds");
    require_chordal(g, "bounds");
    if (is_complete(g)) {
        return exact_report("clique", 1, single_node(g), g);
    }
    if (is_interval(g)) {
        return interval_report(g, "interval");
    }
    auto p = build_msn_poset(g);
    auto decomposition = dilworth(p);
    std::vector<std::vector<VertexSet>> chains;
    for (auto& chain : decomposition.chains) {
        std::vector<VertexSet> sets;
        for (int e : chain) {
            sets.push_back(p.elements[e]);
        }
        chains.push_back(std::move(sets));
    }
    auto rep = chain_representation(g, chains);
    int w = static_cast<int>(decomposition.chains.size());
    int leaves = leaf_count(rep);
    if (leaves > std::max(2, w)) {
        throw Error(ErrorKind::ConstructionFailed, "bounds: chain host exceeds w(P) leaves");
    }

    LeafageReport report;
    report.method = "bounds";
    report.upper = leaves;
    report.diagnostics.push_back("w(P) = " + std::to_string(w));
    try {
        auto at = asteroidal_number(g, options.max_simplicial);
        report.lower = at.number;
        report.diagnostics.push_back("a(G) = " + std::to_string(at.number));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) {
            throw;
        }
        auto sub = subgraph_width_bound(g, options.budget, options.max_simplicial);
        report.lower = sub.value;
        report.diagnostics.push_back("a(G) search capped; restricted-width bound " + std::to_string(sub.value));
    }
    report.lower = std::max(report.lower, 2);
    report.exact = report.lower == report.upper;
    report.certificate = std::move(rep);
    return report;
}

LeafageReport leafage_tree(const Graph& g) {
    if (!is_tree(g)) {
        throw Error(ErrorKind::WrongClass, "leafage_tree: graph is not a tree");
    }
    if (is_complete(g)) {
        return exact_report("tree", 1, single_node(g), g);
    }
    auto core = derived_graph(g);
    if (core.graph.size() <= 1) {
        return interval_report(g, "tree");
    }
    int n = g.size();
    std::vector<int> local(n, -1);
    for (int i = 0; i < core.graph.size(); ++i) {
        local[core.to_parent[i]] = i;
    }

    // Subdivided derived tree; each vertex's leaves form a pendant chain
    // spliced into its first incident derived edge.
    detail::HostBuilder host;
    std::vector<int> vertex_node(n, -1);
    for (int i = 0; i < core.graph.size(); ++i) {
        vertex_node[core.to_parent[i]] = host.add_node({core.to_parent[i]});
    }
    std::map<std::pair<int, int>, int> edge_node;
    for (auto [a, b] : core.graph.edges()) {
        int u = core.to_parent[a], v = core.to_parent[b];
        int t = host.add_node({std::min(u, v), std::max(u, v)});
        edge_node[{std::min(u, v), std::max(u, v)}] = t;
        host.add_edge(vertex_node[u], t);
        host.add_edge(t, vertex_node[v]);
    }
    int leaves = 0;
    for (int i = 0; i < core.graph.size(); ++i) {
        int c = core.to_parent[i];
        if (core.graph.degree(i) == 1) {
            ++leaves;
        }
        int first = core.to_parent[core.graph.neighbors(i).front()];
        for (int v : core.graph.neighbors(i)) {
            first = std::min(first, core.to_parent[v]);
        }
        int attach = edge_node[{std::min(c, first), std::max(c, first)}];
        int previous = vertex_node[c];
        for (int leaf : g.neighbors(c)) {
            if (local[leaf] >= 0) {
                continue;
            }
            previous = host.subdivide(previous, attach, {std::min(c, leaf), std::max(c, leaf)});
        }
    }
    return exact_report("tree", leaves, minimize(host.build(n)), g);
}

int ktree_good_neighborhoods(const Graph& g) {
    if (!ktree_width(g)) {
        throw Error(ErrorKind::WrongClass, "ktree_good_neighborhoods: graph is not a non-clique k-tree");
    }
    auto core = derived_graph(g);
    std::vector<int> local(g.size(), -1);
    for (int i = 0; i < core.graph.size(); ++i) {
        local[core.to_parent[i]] = i;
    }
    std::set<VertexSet> seen;
    int good = 0;
    for (int v : simplicial_vertices(g)) {
        VertexSet r;
        for (int u : g.neighbors(v)) {
            r.push_back(local[u]);
        }
        std::sort(r.begin(), r.end());
        if (!seen.insert(r).second) {
            continue;
        }
        auto rest = delete_vertices(core.graph, r);
        if (rest.graph.size() > 0 && is_connected(rest.graph)) {
            ++good;
        }
    }
    return good;
}

LeafageReport leafage_ktree(const Graph& g) {
    auto k = ktree_width(g);
    if (!k) {
        throw Error(ErrorKind::WrongClass, "leafage_ktree: graph is not a non-clique k-tree");
    }
    int r = ktree_good_neighborhoods(g);
    int value = std::max(2, r);
    int n = g.size();

    std::vector<char> alive(n, 1);
    auto neighborhood = [&](int v) {
        VertexSet out;
        for (int u : g.neighbors(v)) {
            if (alive[u]) {
                out.push_back(u);
            }
        }
        return out;
    };
    auto simplicial_alive = [&]() {
        VertexSet keep;
        for (int v = 0; v < n; ++v) {
            if (alive[v]) {
                keep.push_back(v);
            }
        }
        auto sub = induced_subgraph(g, keep);
        return sub.lift(simplicial_vertices(sub.graph));
    };

    // Peel good simplicial vertices until one simplicial neighborhood remains.
    std::vector<int> removed;
    while (true) {
        auto simplicial = simplicial_alive();
        std::set<VertexSet> distinct;
        for (int v : simplicial) {
            distinct.insert(neighborhood(v));
        }
        if (distinct.size() <= 1) {
            break;
        }
        VertexSet core;
        std::vector<char> in_s(n, 0);
        for (int v : simplicial) {
            in_s[v] = 1;
        }
        for (int v = 0; v < n; ++v) {
            if (alive[v] && !in_s[v]) {
                core.push_back(v);
            }
        }
        int chosen = -1;
        for (int x : simplicial) {
            auto nx = neighborhood(x);
            VertexSet rest;
            std::set_difference(core.begin(), core.end(), nx.begin(), nx.end(), std::back_inserter(rest));
            if (!rest.empty() && is_connected(induced_subgraph(g, rest).graph)) {
                chosen = x;
                break;
            }
        }
        if (chosen < 0) {
            throw Error(ErrorKind::ConstructionFailed, "leafage_ktree: no good simplicial vertex");
        }
        alive[chosen] = 0;
        removed.push_back(chosen);
    }

    // Base: the join of a k-clique and independent vertices on a host path.
    detail::HostBuilder host;
    auto simplicial = simplicial_alive();
    VertexSet common = neighborhood(simplicial.front());
    for (int v : simplicial) {
        if (neighborhood(v) != common) {
            throw Error(ErrorKind::ConstructionFailed, "leafage_ktree: base graph is not a clique join");
        }
        int t = host.add_node(merged(common, {v}));
        if (t > 0) {
            host.add_edge(t - 1, t);
        }
    }

    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        int x = *it;
        auto nx = neighborhood(x);
        auto before = simplicial_alive();
        alive[x] = 1;
        auto after = simplicial_alive();
        VertexSet member = merged(nx, {x});

        int twin = -1;
        for (int y : after) {
            if (y != x && neighborhood(y) == nx) {
                twin = y;
                break;
            }
        }
        if (twin >= 0) {
            int t = host.node_holding(twin);
            host.subdivide(t, *host.adj[t].begin(), member);
            continue;
        }
        int z = -1;
        for (int v : nx) {
            if (std::binary_search(before.begin(), before.end(), v)) {
                z = v;
            }
        }
        if (z < 0) {
            int target = -1;
            for (int t = 0; t < static_cast<int>(host.bag.size()); ++t) {
                if (subset_of(nx, host.bag[t]) && (target < 0 || (host.is_leaf(target) && !host.is_leaf(t)))) {
                    target = t;
                }
            }
            if (target < 0) {
                throw Error(ErrorKind::ConstructionFailed, "leafage_ktree: neighborhood not in one bag");
            }
            int leaf = host.add_node(member);
            host.add_edge(target, leaf);
            continue;
        }
        // z stops being simplicial: move it to a leaf of its pendant path if
        // a twin sits there, then hang x beside it.
        alive[x] = 0;
        auto qz = neighborhood(z);
        int q = host.node_holding(z);
        if (!host.is_leaf(q)) {
            for (int y : before) {
                if (y == z || neighborhood(y) != qz) {
                    continue;
                }
                int t = host.node_holding(y);
                if (host.is_leaf(t)) {
                    host.bag[t].erase(y);
                    host.bag[t].insert(z);
                    host.bag[q].erase(z);
                    host.bag[q].insert(y);
                    q = t;
                    break;
                }
            }
        }
        alive[x] = 1;
        int leaf = host.add_node(member);
        host.add_edge(q, leaf);
    }
    auto report = exact_report("ktree", value, host.build(n), g);
    report.diagnostics.push_back("k = " + std::to_string(*k));
    report.diagnostics.push_back("r = " + std::to_string(r));
    return report;
}

int block_simplicial_cut_vertices(const Graph& g) {
    if (!is_block_graph(g) || is_complete(g)) {
        throw Error(ErrorKind::WrongClass, "block_simplicial_cut_vertices: not a non-clique block graph");
    }
    auto core = derived_graph(g);
    return static_cast<int>(simplicial_vertices(core.graph).size());
}

LeafageReport leafage_block_graph(const Graph& g) {
    int r = block_simplicial_cut_vertices(g);
    int n = g.size();
    auto block_list = blocks(g);
    auto cuts = cut_vertices(g);
    std::vector<char> is_cut(n, 0);
    for (int c : cuts) {
        is_cut[c] = 1;
    }

    // One node per block; around each cut vertex the blocks form a path with
    // its leaf blocks tucked between the first two nonleaf blocks.
    detail::HostBuilder host;
    std::vector<int> cut_count(block_list.size(), 0);
    for (size_t b = 0; b < block_list.size(); ++b) {
        host.add_node(block_list[b]);
        for (int v : block_list[b]) {
            cut_count[b] += is_cut[v];
        }
    }
    for (int c : cuts) {
        std::vector<int> inner, outer;
        for (size_t b = 0; b < block_list.size(); ++b) {
            if (std::binary_search(block_list[b].begin(), block_list[b].end(), c)) {
                (cut_count[b] == 1 ? outer : inner).push_back(static_cast<int>(b));
            }
        }
        std::vector<int> path;
        if (!inner.empty()) {
            path.push_back(inner.front());
        }
        path.insert(path.end(), outer.begin(), outer.end());
        for (size_t i = 1; i < inner.size(); ++i) {
            path.push_back(inner[i]);
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            host.add_edge(path[i], path[i + 1]);
        }
    }
    auto report = exact_report("block", std::max(2, r), host.build(n), g);
    report.diagnostics.push_back("simplicial cut vertices of G' = " + std::to_string(r));
    return report;
}

bool is_two_clique_derived(const Graph& g) {
    if (g.size() == 0 || !is_connected(g) || !is_chordal(g)) {
        return false;
    }
    auto core = derived_graph(g);
    if (core.graph.size() == 0 || !is_connected(core.graph)) {
        return false;
    }
    return build_clique_structure(core.graph).cliques.size() == 2;
}

int max_leafage(int n) {
    if (n < 4) {
        throw Error(ErrorKind::BadParams, "max_leafage: n must be at least 4");
    }
    auto binomial = [](int a, int b) {
        long long out = 1;
        for (int i = 1; i <= b; ++i) {
            out = out * (a - b + i) / i;
        }
        return out;
    };
    int best = 0;
    for (int k = 1; k < n; ++k) {
        if (k <= binomial(n - k, (n - k) / 2)) {
            best = k;
        }
    }
    return best;
}

Graph extremal_graph(int n) {
    int k = max_leafage(n);
    int core = n - k;
    int half = core / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < core; ++u) {
        for (int v = u + 1; v < core; ++v) {
            edges.emplace_back(u, v);
        }
    }
    // Lexicographically first half-size subsets of the core clique.
    std::vector<int> pick(half);
    for (int i = 0; i < half; ++i) {
        pick[i] = i;
    }
    for (int s = 0; s < k; ++s) {
        for (int u : pick) {
            edges.emplace_back(u, core + s);
        }
        int i = half - 1;
        while (i >= 0 && pick[i] == core - half + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pick[i];
        for (int j = i + 1; j < half; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return Graph::from_edges(n, edges);
}

LeafageReport leafage(const Graph& g, const LeafageOptions& options) {
    if (g.size() == 0) {
        throw Error(ErrorKind::BadParams, "leafage: empty graph");
    }
    require_connected(g, "leafage");
    require_chordal(g, "leafage");
    if (is_complete(g)) {
        return exact_report("clique", 1, single_node(g), g);
    }
    if (is_interval(g)) {
        return interval_report(g, "interval");
    }

    std::vector<LeafageReport> routes;
    if (is_tree(g)) {
        routes.push_back(leafage_tree(g));
    }
    if (ktree_width(g)) {
        routes.push_back(leafage_ktree(g));
    }
    if (is_block_graph(g)) {
        routes.push_back(leafage_block_graph(g));
    }
    if (is_two_clique_derived(g)) {
        routes.push_back(leafage_two_clique(g, options));
    }
    std::optional<LeafageReport> oracle;
    try {
        oracle = oracle_leafage(g, options.max_cliques);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) {
            throw;
        }
    }

    std::vector<std::string> trail;
    for (auto& route : routes) {
        trail.push_back(route.method + " = " + std::to_string(route.upper));
    }
    if (oracle) {
        trail.push_back("oracle = " + std::to_string(oracle->upper));
    }
    std::optional<LeafageReport> chosen = oracle;
    for (auto& route : routes) {
        if (!chosen && route.exact) {
            chosen = route;
        }
    }
    if (!chosen && !routes.empty()) {
        chosen = routes.front();
    }
    if (!chosen) {
        auto report = bounds(g, options);
        report.diagnostics.insert(report.diagnostics.begin(), "no exact route applies");
        return report;
    }
    for (auto& route : routes) {
        bool agrees = route.exact ? route.upper == chosen->upper
                                  : route.lower <= chosen->upper && chosen->upper <= route.upper;
        if (!agrees) {
            std::string joined;
            for (auto& line : trail) {
                joined += (joined.empty() ? "" : ", ") + line;
            }
            throw Error(ErrorKind::ConstructionFailed, "leafage: routes disagree: " + joined);
        }
    }
    chosen->diagnostics.insert(chosen->diagnostics.end(), trail.begin(), trail.end());
    return *chosen;
}

}
