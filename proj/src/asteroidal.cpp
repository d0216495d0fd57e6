#include "leafage/asteroidal.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "leafage/error.hpp"
#include "leafage/poset.hpp"

namespace leafage {

namespace {

// Shortest x-y path in g avoiding N[z]; empty when none exists.
std::vector<int> avoiding_path(const Graph& g, int x, int y, int z) {
    if (x == z || y == z || g.adjacent(x, z) || g.adjacent(y, z)) {
        return {};
    }
    std::vector<int> parent(g.size(), -1);
    std::vector<char> seen(g.size(), 0);
    seen[z] = 1;
    for (int w : g.neighbors(z)) {
        seen[w] = 1;
    }
    std::queue<int> queue;
    seen[x] = 1;
    queue.push(x);
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop();
        if (a == y) {
            break;
        }
        for (int b : g.neighbors(a)) {
            if (!seen[b]) {
                seen[b] = 1;
                parent[b] = a;
                queue.push(b);
            }
        }
    }
    if (x != y && parent[y] < 0) {
        return {};
    }
    std::vector<int> path;
    for (int a = y; a != x; a = parent[a]) {
        path.push_back(a);
    }
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}

bool is_asteroidal_triple(const Graph& g, int x, int y, int z) {
    return !avoiding_path(g, x, y, z).empty() && !avoiding_path(g, x, z, y).empty() &&
           !avoiding_path(g, y, z, x).empty();
}

bool is_asteroidal_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) {
                return false;
            }
        }
    }
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) {
            for (size_t k = j + 1; k < s.size(); ++k) {
                if (!is_asteroidal_triple(g, s[i], s[j], s[k])) {
                    return false;
                }
            }
        }
    }
    return true;
}

long long distance_sum(const Graph& g, const VertexSet& s) {
    long long total = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        auto dist = bfs_distances(g, s[i]);
        for (size_t j = i + 1; j < s.size(); ++j) {
            total += dist[s[j]];
        }
    }
    return total;
}

AsteroidalReport asteroidal_number(const Graph& g, int max_simplicial) {
    require_connected(g, "asteroidal_number");
    require_chordal(g, "asteroidal_number");
    AsteroidalReport report;
    report.method = "simplicial-search";
    if (g.size() == 0) {
        return report;
    }
    auto cand = simplicial_vertices(g);
    int k = static_cast<int>(cand.size());
    if (k > max_simplicial) {
        throw Error(ErrorKind::CapExceeded, "asteroidal_number: " + std::to_string(k) +
                                                " simplicial vertices exceed cap " + std::to_string(max_simplicial));
    }
    std::vector<std::vector<int>> dist(k);
    for (int i = 0; i < k; ++i) {
        auto d = bfs_distances(g, cand[i]);
        for (int j = 0; j < k; ++j) {
            dist[i].push_back(d[cand[j]]);
        }
    }
    std::vector<char> triple(static_cast<size_t>(k) * k * k, 0);
    auto at = [&](int a, int b, int c) -> char& { return triple[(static_cast<size_t>(a) * k + b) * k + c]; };
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int c = b + 1; c < k; ++c) {
                char ok = is_asteroidal_triple(g, cand[a], cand[b], cand[c]);
                at(a, b, c) = at(a, c, b) = at(b, a, c) = at(b, c, a) = at(c, a, b) = at(c, b, a) = ok;
            }
        }
    }
    std::vector<int> best{0};
    long long best_sigma = 0;
    std::vector<int> current;
    std::function<void(int, long long)> grow = [&](int next, long long sigma) {
        int size = static_cast<int>(current.size());
        int best_size = static_cast<int>(best.size());
        if (size > best_size || (size == best_size && sigma > best_sigma)) {
            best = current;
            best_sigma = sigma;
            best_size = size;
        }
        if (size + (k - next) < best_size) {
            return;
        }
        for (int c = next; c < k; ++c) {
            if (size + (k - c) < best_size) {
                return;
            }
            bool fits = true;
            long long added = 0;
            for (int i = 0; i < size && fits; ++i) {
                fits = !g.adjacent(cand[current[i]], cand[c]);
                added += dist[current[i]][c];
                for (int j = i + 1; j < size && fits; ++j) {
                    fits = at(current[i], current[j], c);
                }
            }
            if (fits) {
                current.push_back(c);
                grow(c + 1, sigma + added);
                current.pop_back();
            }
        }
    };
    grow(0, 0);
    for (int i : best) {
        report.witness.push_back(cand[i]);
    }
    report.number = static_cast<int>(report.witness.size());
    report.distance_sum = best_sigma;
    return report;
}

bool is_interval(const Graph& g) {
    require_chordal(g, "is_interval");
    for (auto& comp : components(g)) {
        auto h = induced_subgraph(g, comp).graph;
        auto s = simplicial_vertices(h);
        for (size_t i = 0; i < s.size(); ++i) {
            for (size_t j = i + 1; j < s.size(); ++j) {
                for (size_t k = j + 1; k < s.size(); ++k) {
                    if (is_asteroidal_triple(h, s[i], s[j], s[k])) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

int restricted_width(const Graph& h) {
    if (is_complete(h) || derived_graph(h).graph.size() <= 1) {
        return 1;
    }
    return width(build_restricted_poset(h)).width;
}

VertexSet asteroidal_path_union(const Graph& g, const VertexSet& asteroidal) {
    std::vector<char> in(g.size(), 0);
    for (int v : asteroidal) {
        in[v] = 1;
    }
    for (int x : asteroidal) {
        for (int y : asteroidal) {
            for (int z : asteroidal) {
                if (x < y && z != x && z != y) {
                    for (int v : avoiding_path(g, x, y, z)) {
                        in[v] = 1;
                    }
                }
            }
        }
    }
    VertexSet out;
    for (int v = 0; v < g.size(); ++v) {
        if (in[v]) {
            out.push_back(v);
        }
    }
    return out;
}

SubgraphBound subgraph_width_bound(const Graph& g, int budget, int max_simplicial) {
    require_connected(g, "subgraph_width_bound");
    require_chordal(g, "subgraph_width_bound");
    SubgraphBound bound;
    int n = g.size();
    if (n <= budget && n < 31) {
        bound.exhaustive = true;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            VertexSet s;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1u) {
                    s.push_back(v);
                }
            }
            auto h = induced_subgraph(g, s).graph;
            if (is_connected(h)) {
                bound.value = std::max(bound.value, restricted_width(h));
            }
        }
    } else {
        bound.value = restricted_width(g);
        try {
            auto a = asteroidal_number(g, max_simplicial);
            if (a.number >= 3) {
                auto h = induced_subgraph(g, asteroidal_path_union(g, a.witness)).graph;
                bound.value = std::max(bound.value, restricted_width(h));
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapExceeded) {
                throw;
            }
        }
    }
    if (!is_complete(g)) {
        bound.value = std::max(bound.value, 2);
    }
    return bound;
}

}
