#include "leafage/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "leafage/error.hpp"

namespace leafage {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotChordal: return "not-chordal";
    case ErrorKind::Disconnected: return "disconnected-input";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::InvalidPeo: return "invalid-peo";
    case ErrorKind::WrongClass: return "wrong-class";
    case ErrorKind::HypothesisViolated: return "hypothesis-violated";
    case ErrorKind::ConstructionFailed: return "construction-failed";
    case ErrorKind::BadParams: return "bad-params";
    case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

Graph::Graph(int vertex_count)
    : n_(vertex_count), adj_(static_cast<size_t>(vertex_count)),
      matrix_(static_cast<size_t>(vertex_count) * vertex_count, 0) {
    if (vertex_count < 0) {
        throw Error(ErrorKind::BadParams, "negative vertex count");
    }
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<int, int>> edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw Error(ErrorKind::BadParams,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw Error(ErrorKind::BadParams, "self-loop at vertex " + std::to_string(u));
        }
        auto& cell = g.matrix_[static_cast<size_t>(u) * vertex_count + v];
        if (cell) {
            continue;
        }
        cell = 1;
        g.matrix_[static_cast<size_t>(v) * vertex_count + u] = 1;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

VertexSet Subgraph::lift(std::span<const int> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) {
        out.push_back(to_parent[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_complete(const Graph& g) {
    long long n = g.size();
    return g.edge_count() == n * (n - 1) / 2;
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> to_parent(vertices.begin(), vertices.end());
    std::sort(to_parent.begin(), to_parent.end());
    to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());
    std::vector<int> local(g.size(), -1);
    for (size_t i = 0; i < to_parent.size(); ++i) {
        local[to_parent[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < to_parent.size(); ++i) {
        for (int w : g.neighbors(to_parent[i])) {
            if (local[w] > static_cast<int>(i)) {
                edges.emplace_back(static_cast<int>(i), local[w]);
            }
        }
    }
    return {Graph::from_edges(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

Subgraph delete_vertices(const Graph& g, std::span<const int> removed) {
    std::vector<char> gone(g.size(), 0);
    for (int v : removed) {
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.size(); ++v) {
        if (!gone[v]) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

namespace {

std::vector<VertexSet> components_masked(const Graph& g, const std::vector<char>& blocked) {
    std::vector<VertexSet> out;
    std::vector<char> seen(blocked);
    for (int s = 0; s < g.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        VertexSet comp{s};
        seen[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head) {
            for (int w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& set) {
    std::vector<char> inside(g.size(), 0);
    for (int v : set) {
        inside[v] = 1;
    }
    VertexSet out;
    std::vector<char> added(g.size(), 0);
    for (int v : set) {
        for (int w : g.neighbors(v)) {
            if (!inside[w] && !added[w]) {
                added[w] = 1;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}

std::vector<VertexSet> components(const Graph& g) {
    return components_masked(g, std::vector<char>(g.size(), 0));
}

bool is_connected(const Graph& g) {
    return g.size() <= 1 || components(g).size() == 1;
}

std::vector<VertexSet> components_after_delete(const Graph& g, std::span<const int> removed) {
    std::vector<char> blocked(g.size(), 0);
    for (int v : removed) {
        blocked[v] = 1;
    }
    return components_masked(g, blocked);
}

VertexSet boundary(const Graph& g, std::span<const int> separator, std::span<const int> component) {
    VertexSet out;
    for (int s : separator) {
        for (int c : component) {
            if (g.adjacent(s, c)) {
                out.push_back(s);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.size(), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

bool is_peo(const Graph& g, const Peo& peo) {
    int n = g.size();
    if (static_cast<int>(peo.order.size()) != n) {
        return false;
    }
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = peo.order[i];
        if (v < 0 || v >= n || position[v] >= 0) {
            return false;
        }
        position[v] = i;
    }
    for (int v = 0; v < n; ++v) {
        VertexSet later;
        for (int w : g.neighbors(v)) {
            if (position[w] > position[v]) {
                later.push_back(w);
            }
        }
        if (!is_clique(g, later)) {
            return false;
        }
    }
    return true;
}

namespace {

// Maximum cardinality search; the visit order reversed is a PEO iff g is chordal.
std::vector<int> mcs_order(const Graph& g) {
    int n = g.size();
    std::vector<int> weight(n, 0);
    std::vector<char> done(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!done[v] && (best < 0 || weight[v] > weight[best])) {
                best = v;
            }
        }
        done[best] = 1;
        visit.push_back(best);
        for (int w : g.neighbors(best)) {
            if (!done[w]) {
                ++weight[w];
            }
        }
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

std::vector<int> find_chordless_cycle(const Graph& g) {
    int n = g.size();
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i];
                int y = nb[j];
                if (g.adjacent(x, y)) {
                    continue;
                }
                std::vector<char> blocked(n, 0);
                blocked[v] = 1;
                for (int w : nb) {
                    blocked[w] = 1;
                }
                blocked[x] = 0;
                blocked[y] = 0;
                std::vector<int> parent(n, -1);
                std::vector<char> seen(blocked);
                std::queue<int> queue;
                seen[x] = 1;
                queue.push(x);
                while (!queue.empty() && !seen[y]) {
                    int a = queue.front();
                    queue.pop();
                    for (int b : g.neighbors(a)) {
                        if (!seen[b]) {
                            seen[b] = 1;
                            parent[b] = a;
                            queue.push(b);
                        }
                    }
                }
                if (!seen[y] || parent[y] < 0) {
                    continue;
                }
                std::vector<int> cycle{v};
                std::vector<int> path;
                for (int a = y; a != -1; a = parent[a]) {
                    path.push_back(a);
                }
                std::reverse(path.begin(), path.end());
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    return {};
}

}

ChordalVerdict recognize_chordal(const Graph& g) {
    Peo peo{mcs_order(g)};
    ChordalVerdict verdict;
    if (is_peo(g, peo)) {
        verdict.peo = std::move(peo);
    } else {
        verdict.witness_cycle = find_chordless_cycle(g);
    }
    return verdict;
}

bool is_chordal(const Graph& g) {
    return recognize_chordal(g).chordal();
}

bool is_simplicial(const Graph& g, int v) {
    return is_clique(g, g.neighbors(v));
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.size(); ++v) {
        if (is_simplicial(g, v)) {
            out.push_back(v);
        }
    }
    return out;
}

Subgraph derived_graph(const Graph& g) {
    return delete_vertices(g, simplicial_vertices(g));
}

bool equivalent(const Graph& g, int u, int v) {
    return u == v || (g.adjacent(u, v) && closed_neighborhood(g, u) == closed_neighborhood(g, v));
}

Reduction reduce(const Graph& g) {
    int n = g.size();
    Reduction r;
    r.representative.assign(n, -1);
    r.reduced_id.assign(n, -1);
    std::vector<VertexSet> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = closed_neighborhood(g, v);
    }
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        if (r.representative[v] >= 0) {
            continue;
        }
        int id = static_cast<int>(reps.size());
        reps.push_back(v);
        r.classes.emplace_back();
        // Equivalent vertices are adjacent, so only scan N[v].
        for (int w : closed[v]) {
            if (r.representative[w] < 0 && closed[w] == closed[v]) {
                r.representative[w] = v;
                r.reduced_id[w] = id;
                r.classes.back().push_back(w);
            }
        }
    }
    r.reduced_graph = induced_subgraph(g, reps).graph;
    return r;
}

bool is_reduced(const Graph& g) {
    return reduce(g).reduced_graph.size() == g.size();
}

ClawCheck is_claw_free(const Graph& g) {
    for (int c = 0; c < g.size(); ++c) {
        const auto& nb = g.neighbors(c);
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) {
                    continue;
                }
                for (size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
                        return {false, {c, nb[i], nb[j], nb[k]}};
                    }
                }
            }
        }
    }
    return {};
}

std::vector<VertexSet> minimal_separators(const Graph& g) {
    // Berry, Bordat and Cogis: seed with N(C) for components C of G - N[v],
    // then close under S -> N(C) for components C of G - (S u N(x)), x in S.
    std::set<VertexSet> found;
    std::vector<VertexSet> queue;
    auto add = [&](VertexSet s) {
        if (!s.empty() && found.insert(s).second) {
            queue.push_back(std::move(s));
        }
    };
    for (int v = 0; v < g.size(); ++v) {
        for (auto& comp : components_after_delete(g, closed_neighborhood(g, v))) {
            add(neighborhood_of_set(g, comp));
        }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexSet s = queue[head];
        for (int x : s) {
            VertexSet removed = s;
            removed.insert(removed.end(), g.neighbors(x).begin(), g.neighbors(x).end());
            for (auto& comp : components_after_delete(g, removed)) {
                add(neighborhood_of_set(g, comp));
            }
        }
    }
    return {found.begin(), found.end()};
}

std::vector<VertexSet> minimal_cutsets(const Graph& g) {
    auto all = minimal_separators(g);
    std::vector<VertexSet> out;
    for (auto& s : all) {
        bool smallest = std::none_of(all.begin(), all.end(), [&](const VertexSet& t) {
            return t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end());
        });
        if (smallest) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<VertexSet> minimal_separators_for(const Graph& g, int x) {
    require_connected(g, "minimal_separators_for");
    std::vector<VertexSet> out;
    const auto& nb = g.neighbors(x);
    for (auto& s : minimal_cutsets(g)) {
        if (std::includes(nb.begin(), nb.end(), s.begin(), s.end())) {
            out.push_back(s);
        }
    }
    return out;
}

bool is_cutset(const Graph& g, std::span<const int> set) {
    return components_after_delete(g, set).size() >= 2;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.size(), -1), low(graph.size(), 0), is_cut(graph.size(), 0) {}

    void run() {
        for (int v = 0; v < g.size(); ++v) {
            if (disc[v] >= 0) {
                continue;
            }
            if (g.degree(v) == 0) {
                disc[v] = timer++;
                blocks.push_back({v});
                continue;
            }
            visit(v, -1);
        }
        for (auto& b : blocks) {
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
        }
        std::sort(blocks.begin(), blocks.end());
    }

    void visit(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (disc[w] < 0) {
                ++children;
                edge_stack.emplace_back(v, w);
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent >= 0) {
                        is_cut[v] = 1;
                    }
                    VertexSet block;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                        if (e == std::make_pair(v, w)) {
                            break;
                        }
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (w != parent && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent < 0 && children >= 2) {
            is_cut[v] = 1;
        }
    }
};

}

VertexSet cut_vertices(const Graph& g) {
    BlockFinder finder(g);
    finder.run();
    VertexSet out;
    for (int v = 0; v < g.size(); ++v) {
        if (finder.is_cut[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<VertexSet> blocks(const Graph& g) {
    BlockFinder finder(g);
    finder.run();
    return finder.blocks;
}

bool is_tree(const Graph& g) {
    return g.size() >= 1 && g.edge_count() == g.size() - 1 && is_connected(g);
}

bool is_block_graph(const Graph& g) {
    if (!is_connected(g)) {
        return false;
    }
    for (auto& b : blocks(g)) {
        if (!is_clique(g, b)) {
            return false;
        }
    }
    return true;
}

std::optional<int> ktree_width(const Graph& g) {
    int n = g.size();
    if (n < 3 || !is_connected(g) || is_complete(g)) {
        return std::nullopt;
    }
    auto verdict = recognize_chordal(g);
    if (!verdict.chordal()) {
        return std::nullopt;
    }
    const auto& order = verdict.peo->order;
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
        position[order[i]] = i;
    }
    int omega = 1;
    for (int v = 0; v < n; ++v) {
        int later = 0;
        for (int w : g.neighbors(v)) {
            later += position[w] > position[v];
        }
        omega = std::max(omega, later + 1);
    }
    int k = omega - 1;
    if (n < k + 2 || static_cast<long long>(g.edge_count()) !=
                         static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2) {
        return std::nullopt;
    }
    // Peel simplicial vertices of current degree k down to a k-clique.
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
    }
    int remaining = n;
    while (remaining > k) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v] || degree[v] != k) {
                continue;
            }
            VertexSet nb;
            for (int w : g.neighbors(v)) {
                if (alive[w]) {
                    nb.push_back(w);
                }
            }
            if (is_clique(g, nb)) {
                pick = v;
            }
        }
        if (pick < 0) {
            return std::nullopt;
        }
        alive[pick] = 0;
        --remaining;
        for (int w : g.neighbors(pick)) {
            if (alive[w]) {
                --degree[w];
            }
        }
    }
    VertexSet rest;
    for (int v = 0; v < n; ++v) {
        if (alive[v]) {
            rest.push_back(v);
        }
    }
    if (!is_clique(g, rest)) {
        return std::nullopt;
    }
    return k;
}

void require_connected(const Graph& g, const char* context) {
    if (!is_connected(g)) {
        throw Error(ErrorKind::Disconnected, std::string(context) + ": input graph is disconnected");
    }
}

void require_chordal(const Graph& g, const char* context) {
    if (!is_chordal(g)) {
        throw Error(ErrorKind::NotChordal, std::string(context) + ": input graph is not chordal");
    }
}

}
