#include "leafage/proper.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "host_builder.hpp"
#include "leafage/asteroidal.hpp"
#include "leafage/cliques.hpp"
#include "leafage/error.hpp"
#include "leafage/leafage.hpp"

namespace leafage {

namespace {

bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool strict_subset(const VertexSet& a, const VertexSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int count_leaf_blocks(const Graph& g) {
    auto cuts = cut_vertices(g);
    int leaves = 0;
    for (auto& block : blocks(g)) {
        int c = 0;
        for (int v : block) {
            c += contains(cuts, v);
        }
        leaves += c == 1;
    }
    return leaves;
}

ProperReport proper_exact(const std::string& method, int value, SubtreeRepresentation rep, const Graph& g) {
    auto verdict = verify(rep, g);
    if (!verdict) {
        throw Error(ErrorKind::ConstructionFailed, method + ": invalid certificate: " + verdict.violation);
    }
    auto proper = is_proper(rep);
    if (!proper) {
        throw Error(ErrorKind::ConstructionFailed, method + ": certificate not proper: " + proper.violation);
    }
    int leaves = leaf_count(rep);
    if (leaves != value) {
        throw Error(ErrorKind::ConstructionFailed, method + ": certificate has " + std::to_string(leaves) +
                                                       " leaves, expected " + std::to_string(value));
    }
    ProperReport report;
    report.lower = report.upper = value;
    report.exact = true;
    report.method = method;
    report.certificate = std::move(rep);
    return report;
}

int max_independent(const Graph& g, const VertexSet& pool, VertexSet& best) {
    VertexSet current;
    std::function<void(size_t)> grow = [&](size_t i) {
        if (current.size() + (pool.size() - i) <= best.size()) {
            return;
        }
        if (i == pool.size()) {
            best = current;
            return;
        }
        bool free = std::none_of(current.begin(), current.end(), [&](int u) { return g.adjacent(u, pool[i]); });
        if (free) {
            current.push_back(pool[i]);
            grow(i + 1);
            current.pop_back();
        }
        grow(i + 1);
    };
    grow(0);
    return static_cast<int>(best.size());
}

int mep_count(const Graph& h) {
    return static_cast<int>(modified_extreme_points(h).size());
}

// Copies each representative's subtree to the rest of its equivalence class.
SubtreeRepresentation expand_classes(const SubtreeRepresentation& reduced_rep, const Reduction& r, int n) {
    SubtreeRepresentation rep;
    rep.host = reduced_rep.host;
    rep.assign.assign(n, {});
    for (int v = 0; v < n; ++v) {
        rep.assign[v] = reduced_rep.assign[r.reduced_id[v]];
    }
    return rep;
}

}

VertexSet extreme_points(const Graph& g) {
    VertexSet out;
    for (int a : simplicial_vertices(g)) {
        auto closed = closed_neighborhood(g, a);
        VertexSet others;
        for (int w : g.neighbors(a)) {
            if (closed_neighborhood(g, w) != closed) {
                others.push_back(w);
            }
        }
        bool extreme = true;
        for (size_t i = 0; i < others.size() && extreme; ++i) {
            for (size_t j = i + 1; j < others.size() && extreme; ++j) {
                bool shared = false;
                for (int c : g.neighbors(others[i])) {
                    if (!contains(closed, c) && g.adjacent(c, others[j])) {
                        shared = true;
                        break;
                    }
                }
                extreme = shared;
            }
        }
        if (extreme) {
            out.push_back(a);
        }
    }
    return out;
}

VertexSet modified_extreme_points(const Graph& g) {
    VertexSet out;
    for (int a : simplicial_vertices(g)) {
        auto closed = closed_neighborhood(g, a);
        auto comps = components_after_delete(g, closed);
        bool same = true;
        VertexSet first;
        for (size_t i = 0; i < comps.size() && same; ++i) {
            auto b = boundary(g, closed, comps[i]);
            if (i == 0) {
                first = b;
            } else {
                same = b == first;
            }
        }
        if (same) {
            out.push_back(a);
        }
    }
    return out;
}

int mep_lower_bound(const Graph& g, int budget) {
    int n = g.size();
    int best = 2;
    if (n <= budget) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            VertexSet keep;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1) {
                    keep.push_back(v);
                }
            }
            auto h = induced_subgraph(g, keep).graph;
            if (is_connected(h) && is_reduced(h)) {
                best = std::max(best, mep_count(h));
            }
        }
        return best;
    }
    best = std::max(best, mep_count(reduce(g).reduced_graph));
    // Induced stars around every vertex.
    for (int c = 0; c < n; ++c) {
        VertexSet leaves;
        max_independent(g, g.neighbors(c), leaves);
        if (leaves.size() >= 2) {
            best = std::max(best, static_cast<int>(leaves.size()));
        }
    }
    // Union of the closed neighborhoods of simplicial vertices.
    std::set<int> seed;
    for (int s : simplicial_vertices(g)) {
        for (int v : closed_neighborhood(g, s)) {
            seed.insert(v);
        }
    }
    auto h = induced_subgraph(g, VertexSet(seed.begin(), seed.end())).graph;
    if (is_connected(h)) {
        best = std::max(best, mep_count(reduce(h).reduced_graph));
    }
    return best;
}

int cut_decomposition_bound(const Graph& g, int budget) {
    std::map<VertexSet, int> memo;
    std::function<int(const VertexSet&)> bound = [&](const VertexSet& keep) -> int {
        if (auto it = memo.find(keep); it != memo.end()) {
            return it->second;
        }
        auto h = induced_subgraph(g, keep).graph;
        int value = 2;
        if (is_complete(h) || is_proper_interval(h)) {
            return memo[keep] = 2;
        }
        if (is_block_graph(h)) {
            return memo[keep] = std::max(2, count_leaf_blocks(h));
        }
        if (is_claw_free(h).claw_free) {
            try {
                return memo[keep] = std::max(2, asteroidal_number(h).number);
            } catch (const Error&) {
            }
        }
        value = mep_lower_bound(h, budget);
        for (int c : cut_vertices(h)) {
            VertexSet removed{c};
            auto comps = components_after_delete(h, removed);
            if (comps.size() != 2) {
                continue;
            }
            int total = 0;
            bool refined = false;
            for (auto& comp : comps) {
                VertexSet side{keep[c]};
                for (int x : comp) {
                    side.push_back(keep[x]);
                }
                std::sort(side.begin(), side.end());
                total += bound(side);
                auto sh = induced_subgraph(g, side);
                int local = static_cast<int>(std::lower_bound(side.begin(), side.end(), keep[c]) - side.begin());
                refined = refined || (!is_complete(sh.graph) && is_proper_interval(sh.graph) &&
                                      !is_simplicial(sh.graph, local));
            }
            value = std::max(value, total - (refined ? 1 : 2));
        }
        return memo[keep] = value;
    };
    VertexSet all(g.size());
    for (int v = 0; v < g.size(); ++v) {
        all[v] = v;
    }
    return bound(all);
}

bool is_proper_interval(const Graph& g) {
    return is_chordal(g) && is_claw_free(g).claw_free && is_interval(g);
}

SubtreeRepresentation clique_path_representation(int vertex_count) {
    SubtreeRepresentation rep;
    if (vertex_count <= 1) {
        rep.host.node_count = 2;
        rep.host.edges = {{0, 1}};
        rep.assign.assign(vertex_count, VertexSet{0, 1});
        return rep;
    }
    int k = vertex_count;
    rep.host.node_count = 2 * k - 1;
    for (int t = 0; t + 1 < rep.host.node_count; ++t) {
        rep.host.edges.emplace_back(t, t + 1);
    }
    rep.assign.resize(k);
    for (int i = 0; i < k; ++i) {
        for (int t = i; t < i + k; ++t) {
            rep.assign[i].push_back(t);
        }
    }
    return rep;
}

std::optional<SubtreeRepresentation> proper_interval_representation(const Graph& g) {
    if (!is_connected(g) || !is_proper_interval(g)) {
        return std::nullopt;
    }
    if (is_complete(g)) {
        return clique_path_representation(g.size());
    }
    auto path = interval_representation(g);
    if (!path) {
        return std::nullopt;
    }
    // Position of every host node along the path.
    auto adj = path->host.adjacency();
    std::vector<int> position(path->host.node_count, -1);
    int end = 0;
    while (adj[end].size() > 1) {
        ++end;
    }
    for (int t = end, previous = -1, i = 0; t >= 0; ++i) {
        position[t] = i;
        int next = -1;
        for (int s : adj[t]) {
            if (s != previous) {
                next = s;
            }
        }
        previous = t;
        t = next;
    }
    // Without a claw, sorting by (first, last) makes both ends monotone; opening
    // and closing events in that order give staggered intervals.
    int n = g.size();
    std::vector<std::pair<int, int>> range(n);
    for (int v = 0; v < n; ++v) {
        range[v] = {n + path->host.node_count, -1};
        for (int t : path->assign[v]) {
            range[v].first = std::min(range[v].first, position[t]);
            range[v].second = std::max(range[v].second, position[t]);
        }
    }
    std::vector<std::tuple<int, int, int, int>> events;  // (place, close?, rank, vertex)
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return range[a] < range[b]; });
    for (int rank = 0; rank < n; ++rank) {
        int v = order[rank];
        events.emplace_back(range[v].first, 0, rank, v);
        events.emplace_back(range[v].second, 1, rank, v);
    }
    std::sort(events.begin(), events.end());
    SubtreeRepresentation rep;
    rep.host.node_count = 2 * n;
    for (int t = 0; t + 1 < 2 * n; ++t) {
        rep.host.edges.emplace_back(t, t + 1);
    }
    rep.assign.assign(n, {});
    std::vector<int> open(n, -1);
    for (int t = 0; t < 2 * n; ++t) {
        auto [place, close, rank, v] = events[t];
        if (!close) {
            open[v] = t;
        } else {
            for (int s = open[v]; s <= t; ++s) {
                rep.assign[v].push_back(s);
            }
        }
    }
    rep = canonical(rep);
    if (!verify(rep, g) || !is_proper(rep)) {
        return std::nullopt;
    }
    return rep;
}

ProperReport proper_leafage_block_graph(const Graph& g) {
    if (g.size() == 0 || !is_connected(g) || !is_block_graph(g)) {
        throw Error(ErrorKind::WrongClass, "proper_leafage_block_graph: not a connected block graph");
    }
    if (is_complete(g)) {
        return proper_exact("block", 2, clique_path_representation(g.size()), g);
    }
    auto block_list = blocks(g);
    auto cuts = cut_vertices(g);
    int count = static_cast<int>(block_list.size());
    std::vector<VertexSet> block_cuts(count);
    for (int b = 0; b < count; ++b) {
        for (int v : block_list[b]) {
            if (contains(cuts, v)) {
                block_cuts[b].push_back(v);
            }
        }
    }
    int root = 0;
    while (block_cuts[root].size() != 1) {
        ++root;
    }

    // Each block is a proper path: its attaching vertex alone at one end and,
    // at the other, a non-cut vertex for leaf blocks or another cut vertex
    // whose first child block will consume that end.
    detail::HostBuilder host;
    std::vector<char> done(count, 0);
    std::vector<int> open_end(g.size(), -1);
    std::vector<std::pair<int, int>> queue{{root, -1}};
    done[root] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [b, via] = queue[head];
        const auto& members = block_list[b];
        int first = via, last = -1;
        if (via < 0) {
            for (int v : members) {
                if (!contains(cuts, v)) {
                    first = v;
                    break;
                }
            }
            last = block_cuts[b].front();
        } else if (block_cuts[b].size() == 1) {
            for (int v : members) {
                if (!contains(cuts, v)) {
                    last = v;
                    break;
                }
            }
        } else {
            for (int c : block_cuts[b]) {
                if (c != via) {
                    last = c;
                    break;
                }
            }
        }
        VertexSet order{first};
        for (int v : members) {
            if (v != first && v != last) {
                order.push_back(v);
            }
        }
        order.push_back(last);
        int k = static_cast<int>(order.size());
        std::vector<int> nodes;
        for (int t = 0; t < 2 * k - 1; ++t) {
            VertexSet bag;
            for (int i = 0; i < k; ++i) {
                if (i <= t && t < i + k) {
                    bag.push_back(order[i]);
                }
            }
            std::sort(bag.begin(), bag.end());
            nodes.push_back(host.add_node(bag));
            if (t > 0) {
                host.add_edge(nodes[t - 1], nodes[t]);
            }
        }
        if (via >= 0) {
            int target = open_end[via];
            if (target >= 0) {
                open_end[via] = -1;
            } else {
                target = host.node_holding(via);
            }
            host.add_edge(target, nodes.front());
        }
        if (contains(cuts, last)) {
            open_end[last] = nodes.back();
        }
        for (int c : block_cuts[b]) {
            if (c == via) {
                continue;
            }
            for (int other = 0; other < count; ++other) {
                if (!done[other] && contains(block_list[other], c)) {
                    done[other] = 1;
                    queue.emplace_back(other, c);
                }
            }
        }
    }
    auto report = proper_exact("block", count_leaf_blocks(g), host.build(g.size()), g);
    report.diagnostics.push_back("leaf blocks = " + std::to_string(report.upper));
    return report;
}

std::optional<std::vector<int>> detect_kite(const Graph& g) {
    int total = g.size();
    if (total < 4 || (total - 1) % 3 != 0) {
        return std::nullopt;
    }
    int n = (total - 1) / 3;
    if (g.edge_count() != 5 * n || !is_connected(g)) {
        return std::nullopt;
    }
    std::map<VertexSet, VertexSet> spurs;  // spine edge -> its two degree-2 vertices
    std::vector<char> spine(total, 1);
    for (int v = 0; v < total; ++v) {
        if (g.degree(v) == 2 && g.adjacent(g.neighbors(v)[0], g.neighbors(v)[1])) {
            spurs[g.neighbors(v)].push_back(v);
            spine[v] = 0;
        }
    }
    VertexSet path;
    for (int v = 0; v < total; ++v) {
        if (spine[v]) {
            path.push_back(v);
        }
    }
    if (static_cast<int>(path.size()) != n + 1 || static_cast<int>(spurs.size()) != n) {
        return std::nullopt;
    }
    for (auto& [edge, pair] : spurs) {
        if (pair.size() != 2 || g.adjacent(pair[0], pair[1]) || !spine[edge[0]] || !spine[edge[1]]) {
            return std::nullopt;
        }
    }
    auto sub = induced_subgraph(g, path);
    int start = -1;
    for (int i = 0; i < sub.graph.size(); ++i) {
        if (sub.graph.degree(i) > 2) {
            return std::nullopt;
        }
        if (sub.graph.degree(i) <= 1 && start < 0) {
            start = i;
        }
    }
    if (start < 0 || sub.graph.edge_count() != n) {
        return std::nullopt;
    }
    std::vector<int> order{sub.to_parent[start]};
    int previous = -1, current = start;
    while (static_cast<int>(order.size()) < n + 1) {
        int next = -1;
        for (int u : sub.graph.neighbors(current)) {
            if (u != previous) {
                next = u;
            }
        }
        if (next < 0) {
            return std::nullopt;
        }
        previous = current;
        current = next;
        order.push_back(sub.to_parent[current]);
    }
    for (int i = 0; i < n; ++i) {
        VertexSet edge{std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1])};
        if (!spurs.count(edge)) {
            return std::nullopt;
        }
    }
    return order;
}

SubtreeRepresentation kite_proper_representation(int n) {
    if (n < 1) {
        throw Error(ErrorKind::BadParams, "kite_proper_representation: n must be at least 1");
    }
    auto v = [](int i) { return i; };
    auto u = [n](int i) { return n + i; };
    auto w = [n](int i) { return 2 * n + i; };
    SubtreeRepresentation rep;
    if (n == 1) {
        // u_1, v_0, v_1, w_1 as staggered windows of width three.
        rep.host.node_count = 6;
        for (int t = 0; t < 5; ++t) {
            rep.host.edges.emplace_back(t, t + 1);
        }
        rep.assign.assign(4, {});
        rep.assign[u(1)] = {0, 1, 2};
        rep.assign[v(0)] = {1, 2, 3};
        rep.assign[v(1)] = {2, 3, 4};
        rep.assign[w(1)] = {3, 4, 5};
        return canonical(rep);
    }
    // Spine M_0, (P_i, J_i, N_i, M_i) for i = 1..n, with a spur J_i - b_i - c_i.
    detail::HostBuilder host;
    int m0 = host.add_node();
    std::vector<int> p(n + 2), j(n + 2), nn(n + 2), m(n + 1), b(n + 2), c(n + 1);
    m[0] = m0;
    int previous = m0;
    for (int i = 1; i <= n; ++i) {
        p[i] = host.add_node();
        j[i] = host.add_node();
        nn[i] = host.add_node();
        m[i] = host.add_node();
        b[i] = host.add_node();
        c[i] = host.add_node();
        host.add_edge(previous, p[i]);
        host.add_edge(p[i], j[i]);
        host.add_edge(j[i], nn[i]);
        host.add_edge(nn[i], m[i]);
        host.add_edge(j[i], b[i]);
        host.add_edge(b[i], c[i]);
        previous = m[i];
    }
    auto put = [&](int vertex, std::initializer_list<int> nodes) {
        for (int t : nodes) {
            host.bag[t].insert(vertex);
        }
    };
    put(v(0), {m[0], p[1], j[1], b[1]});
    for (int i = 1; i < n; ++i) {
        put(v(i), {j[i], b[i], nn[i], m[i], p[i + 1], j[i + 1], b[i + 1]});
    }
    put(v(n), {j[n], b[n], nn[n], m[n]});
    for (int i = 1; i <= n; ++i) {
        put(u(i), {b[i], c[i]});
        put(w(i), {p[i], j[i], nn[i]});
    }
    return host.build(3 * n + 1);
}

SubtreeRepresentation make_proper(const SubtreeRepresentation& rep, const Graph& g) {
    auto r = reduce(g);
    const Graph& h = r.reduced_graph;
    int k = h.size();
    detail::HostBuilder host;
    for (int t = 0; t < rep.host.node_count; ++t) {
        host.add_node();
    }
    for (auto [a, b] : rep.host.edges) {
        host.add_edge(a, b);
    }
    for (int id = 0; id < k; ++id) {
        for (int t : rep.assign[r.classes[id].front()]) {
            host.bag[t].insert(id);
        }
    }
    auto subtree = [&](int x) {
        VertexSet nodes;
        for (int t = 0; t < static_cast<int>(host.bag.size()); ++t) {
            if (host.bag[t].count(x)) {
                nodes.push_back(t);
            }
        }
        return nodes;
    };
    auto contained = [&](int x) {
        auto fx = subtree(x);
        for (int y = 0; y < k; ++y) {
            if (y != x && strict_subset(fx, subtree(y))) {
                return true;
            }
        }
        return false;
    };
    auto pendant = [&](int x, int at) {
        int t = host.add_node({x});
        host.add_edge(at, t);
    };

    int extensions = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < k; ++x) {
            if (!contained(x)) {
                continue;
            }
            changed = true;
            auto fx = subtree(x);
            int leaf = -1;
            for (int t : fx) {
                if (host.is_leaf(t)) {
                    leaf = t;
                    break;
                }
            }
            if (leaf >= 0) {
                pendant(x, leaf);
                continue;
            }
            // A side of the host carrying only neighbors of x: run x out to
            // one of its leaves and one step beyond.
            bool extended = false;
            if (extensions < 4 * k) {
                for (int t : fx) {
                    for (int s : host.adj[t]) {
                        if (contains(fx, s)) {
                            continue;
                        }
                        std::vector<int> side{s};
                        std::vector<int> parent(host.bag.size(), -1);
                        parent[s] = t;
                        bool friendly = true;
                        for (size_t i = 0; i < side.size() && friendly; ++i) {
                            for (int y : host.bag[side[i]]) {
                                friendly = friendly && h.adjacent(x, y);
                            }
                            for (int z : host.adj[side[i]]) {
                                if (z != parent[side[i]]) {
                                    parent[z] = side[i];
                                    side.push_back(z);
                                }
                            }
                        }
                        if (!friendly) {
                            continue;
                        }
                        int end = side.back();
                        for (int y = end; y != t; y = parent[y]) {
                            host.bag[y].insert(x);
                        }
                        pendant(x, end);
                        extended = true;
                        ++extensions;
                        break;
                    }
                    if (extended) {
                        break;
                    }
                }
            }
            if (!extended) {
                pendant(x, fx.front());
            }
        }
    }
    auto reduced_rep = host.build(k);
    auto out = canonical(expand_classes(reduced_rep, r, g.size()));
    auto verdict = verify(out, g);
    if (!verdict || !is_proper(out)) {
        throw Error(ErrorKind::ConstructionFailed, "make_proper: result is not a valid proper representation");
    }
    return out;
}

ProperReport proper_leafage_claw_free(const Graph& g, const ProperOptions& options) {
    require_connected(g, "proper_leafage_claw_free");
    require_chordal(g, "proper_leafage_claw_free");
    if (!is_claw_free(g).claw_free) {
        throw Error(ErrorKind::WrongClass, "proper_leafage_claw_free: graph has a claw");
    }
    if (is_complete(g)) {
        return proper_exact("claw-free", 2, clique_path_representation(g.size()), g);
    }
    int a = asteroidal_number(g, options.max_simplicial).number;
    auto meps = modified_extreme_points(g);
    std::set<VertexSet> classes;
    for (int v : meps) {
        classes.insert(closed_neighborhood(g, v));
    }
    int m = std::max(2, static_cast<int>(classes.size()));
    if (m != a) {
        throw Error(ErrorKind::ConstructionFailed, "proper_leafage_claw_free: a(G) = " + std::to_string(a) +
                                                       " but inequivalent MEPs = " + std::to_string(m));
    }
    if (auto path = proper_interval_representation(g)) {
        return proper_exact("claw-free", 2, std::move(*path), g);
    }

    std::optional<SubtreeRepresentation> best;
    auto offer = [&](const SubtreeRepresentation& rep) {
        auto proper = make_proper(rep, g);
        if (!best || leaf_count(proper) < leaf_count(*best)) {
            best = std::move(proper);
        }
        return leaf_count(*best) > a;
    };
    LeafageOptions leaf_options;
    leaf_options.max_cliques = options.max_cliques;
    leaf_options.max_simplicial = options.max_simplicial;
    auto base = leafage(g, leaf_options);
    if (base.certificate) {
        offer(*base.certificate);
    }
    auto cs = build_clique_structure(g);
    if (leaf_count(*best) > a && static_cast<int>(cs.cliques.size()) <= options.max_cliques) {
        auto wcg = weighted_clique_graph(cs);
        int visited = 0;
        for_each_max_weight_tree(wcg, [&](const std::vector<std::pair<int, int>>& edges) {
            return offer(clique_tree_representation(g, cs.cliques, edges)) && ++visited < 20000;
        });
    }
    ProperReport report;
    report.method = "claw-free";
    report.lower = a;
    report.upper = leaf_count(*best);
    report.exact = report.upper == a;
    report.certificate = std::move(best);
    report.diagnostics.push_back("a(G) = inequivalent MEPs = " + std::to_string(a));
    if (!report.exact) {
        report.diagnostics.push_back("leaf extension did not reach a(G)");
    }
    return report;
}

ProperReport proper_leafage(const Graph& g, const ProperOptions& options) {
    if (g.size() == 0) {
        throw Error(ErrorKind::BadParams, "proper_leafage: empty graph");
    }
    require_connected(g, "proper_leafage");
    require_chordal(g, "proper_leafage");
    if (is_complete(g)) {
        return proper_exact("clique", 2, clique_path_representation(g.size()), g);
    }
    if (auto path = proper_interval_representation(g)) {
        return proper_exact("proper-interval", 2, std::move(*path), g);
    }

    std::vector<ProperReport> routes;
    if (is_block_graph(g)) {
        routes.push_back(proper_leafage_block_graph(g));
    }
    if (auto spine = detect_kite(g)) {
        int n = static_cast<int>(spine->size()) - 1;
        // Relabel the canonical kite onto g.
        std::vector<int> to_g(3 * n + 1, -1);
        for (int i = 0; i <= n; ++i) {
            to_g[i] = (*spine)[i];
        }
        std::vector<char> used(g.size(), 0);
        for (int i = 1; i <= n; ++i) {
            int slot = 0;
            for (int x = 0; x < g.size(); ++x) {
                if (g.degree(x) == 2 && g.adjacent(x, (*spine)[i - 1]) && g.adjacent(x, (*spine)[i]) &&
                    std::find(spine->begin(), spine->end(), x) == spine->end()) {
                    to_g[(slot == 0 ? n : 2 * n) + i] = x;
                    ++slot;
                }
            }
        }
        auto canonical_rep = kite_proper_representation(n);
        SubtreeRepresentation rep;
        rep.host = canonical_rep.host;
        rep.assign.assign(g.size(), {});
        for (int x = 0; x < 3 * n + 1; ++x) {
            rep.assign[to_g[x]] = canonical_rep.assign[x];
        }
        auto report = proper_exact("kite", n >= 2 ? n + 2 : 2, canonical(rep), g);
        report.diagnostics.push_back("kite order n = " + std::to_string(n));
        routes.push_back(std::move(report));
    }
    if (is_claw_free(g).claw_free) {
        routes.push_back(proper_leafage_claw_free(g, options));
    }

    std::vector<std::string> trail;
    for (auto& route : routes) {
        trail.push_back(route.method + " = " + std::to_string(route.upper));
    }
    const ProperReport* chosen = nullptr;
    for (auto& route : routes) {
        if (route.exact && !chosen) {
            chosen = &route;
        }
    }
    if (chosen) {
        for (auto& route : routes) {
            bool agrees = route.exact ? route.upper == chosen->upper
                                      : route.lower <= chosen->upper && chosen->upper <= route.upper;
            if (!agrees) {
                std::string joined;
                for (auto& line : trail) {
                    joined += (joined.empty() ? "" : ", ") + line;
                }
                throw Error(ErrorKind::ConstructionFailed, "proper_leafage: routes disagree: " + joined);
            }
        }
        auto report = *chosen;
        report.diagnostics.insert(report.diagnostics.end(), trail.begin(), trail.end());
        return report;
    }

    ProperReport report;
    report.method = "bounds";
    int mep = mep_lower_bound(g, options.budget);
    int cut = cut_decomposition_bound(g, options.budget);
    report.lower = std::max(mep, cut);
    report.diagnostics.push_back("MEP bound = " + std::to_string(mep));
    report.diagnostics.push_back("cut decomposition bound = " + std::to_string(cut));
    for (auto& route : routes) {
        report.lower = std::max(report.lower, route.lower);
    }

    std::optional<SubtreeRepresentation> best;
    auto offer = [&](const SubtreeRepresentation& rep) {
        auto proper = make_proper(rep, g);
        if (!best || leaf_count(proper) < leaf_count(*best)) {
            best = std::move(proper);
        }
        return leaf_count(*best) > report.lower;
    };
    for (auto& route : routes) {
        if (route.certificate) {
            offer(*route.certificate);
        }
    }
    LeafageOptions leaf_options;
    leaf_options.max_cliques = options.max_cliques;
    leaf_options.max_simplicial = options.max_simplicial;
    leaf_options.budget = options.budget;
    auto base = leafage(g, leaf_options);
    report.lower = std::max(report.lower, base.lower);
    if (base.certificate) {
        offer(*base.certificate);
    }
    auto cs = build_clique_structure(g);
    int cliques = static_cast<int>(cs.cliques.size());
    if (leaf_count(*best) > report.lower && cliques <= options.max_cliques) {
        auto wcg = weighted_clique_graph(cs);
        int visited = 0;
        for_each_max_weight_tree(wcg, [&](const std::vector<std::pair<int, int>>& edges) {
            return offer(clique_tree_representation(g, cs.cliques, edges)) && ++visited < 20000;
        });
    }
    report.upper = leaf_count(*best);
    report.certificate = std::move(best);

    if (report.lower < report.upper && g.size() <= options.search_budget) {
        int max_nodes = 2 * cliques + 2;
        auto found = search_proper_host(g, report.lower, report.upper, max_nodes, options.search_steps);
        report.diagnostics.push_back("host search up to " + std::to_string(max_nodes) + " nodes" +
                                     (found.exhausted ? "" : " (step limit reached)"));
        if (found.found) {
            report.method = "search";
            int leaves = leaf_count(*found.found);
            if (leaves > report.lower) {
                report.conditional = true;
            }
            report.lower = report.upper = leaves;
            report.certificate = std::move(found.found);
        } else if (found.exhausted) {
            report.method = "search";
            report.conditional = true;
            report.lower = report.upper;
        }
    }
    report.exact = report.lower == report.upper;
    return report;
}

}
