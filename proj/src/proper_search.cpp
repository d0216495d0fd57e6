#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "leafage/error.hpp"
#include "leafage/proper.hpp"

namespace leafage {

namespace {

using Adjacency = std::vector<std::vector<int>>;

std::string rooted_code(const Adjacency& adj, int v, int parent) {
    std::vector<std::string> parts;
    for (int w : adj[v]) {
        if (w != parent) {
            parts.push_back(rooted_code(adj, w, v));
        }
    }
    std::sort(parts.begin(), parts.end());
    std::string code = "(";
    for (auto& p : parts) {
        code += p;
    }
    return code + ")";
}

std::vector<int> centers(const Adjacency& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> degree(n), layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) {
            layer.push_back(v);
        }
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (int w : adj[v]) {
                if (--degree[w] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = next;
    }
    return layer;
}

std::string tree_code(const Adjacency& adj) {
    std::string best;
    for (int c : centers(adj)) {
        auto code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) {
            best = code;
        }
    }
    return best;
}

// Free trees on 1..max_nodes nodes, grouped by node count.
std::vector<std::vector<Adjacency>> free_trees(int max_nodes) {
    std::vector<std::vector<Adjacency>> by_size(max_nodes + 1);
    if (max_nodes < 1) {
        return by_size;
    }
    by_size[1].push_back(Adjacency(1));
    for (int n = 1; n < max_nodes; ++n) {
        std::set<std::string> seen;
        for (const auto& tree : by_size[n]) {
            for (int v = 0; v < n; ++v) {
                auto grown = tree;
                grown.emplace_back(1, v);
                grown[v].push_back(n);
                if (seen.insert(tree_code(grown)).second) {
                    by_size[n + 1].push_back(std::move(grown));
                }
            }
        }
    }
    return by_size;
}

int leaves_of(const Adjacency& adj) {
    if (adj.size() == 1) {
        return 1;
    }
    return static_cast<int>(std::count_if(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 1; }));
}

std::vector<uint32_t> connected_masks(const Adjacency& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<uint32_t> nbr(n, 0), out;
    for (int v = 0; v < n; ++v) {
        for (int w : adj[v]) {
            nbr[v] |= 1u << w;
        }
    }
    std::function<void(uint32_t, uint32_t, uint32_t)> grow = [&](uint32_t sub, uint32_t ext, uint32_t banned) {
        out.push_back(sub);
        while (ext) {
            int v = __builtin_ctz(ext);
            ext &= ext - 1;
            uint32_t fresh = nbr[v] & ~sub & ~banned & ~ext & ~(1u << v);
            grow(sub | 1u << v, ext | fresh, banned);
            banned |= 1u << v;
        }
    };
    for (int r = 0; r < n; ++r) {
        uint32_t below = (1u << r) - 1;
        grow(1u << r, nbr[r] & ~below, below);
    }
    return out;
}

}

HostSearchResult search_proper_host(const Graph& g, int from, int below, int max_nodes, long long step_limit) {
    if (max_nodes > 30) {
        throw Error(ErrorKind::BadParams, "search_proper_host: at most 30 host nodes");
    }
    auto r = reduce(g);
    const Graph& h = r.reduced_graph;
    int k = h.size();
    std::vector<int> order{0}, seen(k, 0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        for (int w : h.neighbors(order[i])) {
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
        }
    }
    if (static_cast<int>(order.size()) != k) {
        throw Error(ErrorKind::Disconnected, "search_proper_host: graph is not connected");
    }

    HostSearchResult result;
    long long steps = 0;
    auto trees = free_trees(max_nodes);
    for (int target = std::max(from, 1); target < below; ++target) {
        for (int nodes = 1; nodes <= max_nodes; ++nodes) {
            for (const auto& tree : trees[nodes]) {
                if (leaves_of(tree) != target) {
                    continue;
                }
                auto masks = connected_masks(tree);
                uint32_t full = nodes == 32 ? ~0u : (1u << nodes) - 1;
                std::vector<uint32_t> f(k, 0);
                bool limit = false;
                std::function<bool(int, uint32_t)> place = [&](int depth, uint32_t covered) {
                    if (depth == k) {
                        return covered == full;
                    }
                    if (++steps > step_limit) {
                        limit = true;
                        return false;
                    }
                    int x = order[depth];
                    for (uint32_t m : masks) {
                        bool fits = true;
                        for (int i = 0; i < depth && fits; ++i) {
                            uint32_t other = f[order[i]];
                            bool meet = (m & other) != 0;
                            fits = meet == h.adjacent(x, order[i]) && (m & other) != m && (m & other) != other;
                        }
                        if (!fits) {
                            continue;
                        }
                        f[x] = m;
                        if (place(depth + 1, covered | m)) {
                            return true;
                        }
                        if (limit) {
                            return false;
                        }
                    }
                    return false;
                };
                bool ok = place(0, 0);
                if (limit) {
                    result.exhausted = false;
                    return result;
                }
                if (ok) {
                    SubtreeRepresentation rep;
                    rep.host.node_count = nodes;
                    for (int v = 0; v < nodes; ++v) {
                        for (int w : tree[v]) {
                            if (v < w) {
                                rep.host.edges.emplace_back(v, w);
                            }
                        }
                    }
                    rep.assign.assign(g.size(), {});
                    for (int v = 0; v < g.size(); ++v) {
                        uint32_t m = f[r.reduced_id[v]];
                        for (int t = 0; t < nodes; ++t) {
                            if (m >> t & 1) {
                                rep.assign[v].push_back(t);
                            }
                        }
                    }
                    result.found = canonical(rep);
                    return result;
                }
            }
        }
    }
    return result;
}

}
