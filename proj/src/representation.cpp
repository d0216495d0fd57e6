#include "leafage/representation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "leafage/error.hpp"

namespace leafage {

std::vector<std::vector<int>> HostTree::adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
    }
    return adj;
}

bool HostTree::is_tree() const {
    if (node_count < 1 || static_cast<int>(edges.size()) != node_count - 1) {
        return false;
    }
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= node_count || b >= node_count || a == b) {
            return false;
        }
    }
    auto adj = adjacency();
    std::vector<char> seen(node_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : adj[t]) {
            if (!seen[s]) {
                seen[s] = 1;
                ++reached;
                stack.push_back(s);
            }
        }
    }
    return reached == node_count;
}

namespace {

bool connected_within(const std::vector<std::vector<int>>& adj, const VertexSet& nodes) {
    if (nodes.empty()) {
        return false;
    }
    std::set<int> inside(nodes.begin(), nodes.end());
    std::set<int> seen{nodes[0]};
    std::vector<int> stack{nodes[0]};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : adj[t]) {
            if (inside.count(s) && seen.insert(s).second) {
                stack.push_back(s);
            }
        }
    }
    return seen.size() == inside.size();
}

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

}

bool is_subtree(const HostTree& host, const VertexSet& nodes) {
    for (int t : nodes) {
        if (t < 0 || t >= host.node_count) {
            return false;
        }
    }
    return connected_within(host.adjacency(), nodes);
}

std::vector<int> host_path(const HostTree& host, int a, int b) {
    auto adj = host.adjacency();
    std::vector<int> parent(host.node_count, -1);
    std::vector<int> stack{a};
    parent[a] = a;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : adj[t]) {
            if (parent[s] < 0) {
                parent[s] = t;
                stack.push_back(s);
            }
        }
    }
    std::vector<int> path;
    for (int t = b; t != a; t = parent[t]) {
        path.push_back(t);
    }
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<VertexSet> bags(const SubtreeRepresentation& rep) {
    std::vector<VertexSet> out(rep.host.node_count);
    for (int v = 0; v < static_cast<int>(rep.assign.size()); ++v) {
        for (int t : rep.assign[v]) {
            out[t].push_back(v);
        }
    }
    return out;
}

Verdict verify(const SubtreeRepresentation& rep, const Graph& g) {
    if (!rep.host.is_tree()) {
        return Verdict::fail("host is not a tree");
    }
    if (static_cast<int>(rep.assign.size()) != g.size()) {
        return Verdict::fail("assignment covers " + std::to_string(rep.assign.size()) + " vertices, graph has " +
                             std::to_string(g.size()));
    }
    auto adj = rep.host.adjacency();
    for (int v = 0; v < g.size(); ++v) {
        const auto& nodes = rep.assign[v];
        if (!std::is_sorted(nodes.begin(), nodes.end()) ||
            std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
            return Verdict::fail("vertex " + std::to_string(v) + ": node set not sorted and distinct");
        }
        for (int t : nodes) {
            if (t < 0 || t >= rep.host.node_count) {
                return Verdict::fail("vertex " + std::to_string(v) + ": host node " + std::to_string(t) +
                                     " out of range");
            }
        }
        if (nodes.empty()) {
            return Verdict::fail("vertex " + std::to_string(v) + ": empty subtree");
        }
        if (!connected_within(adj, nodes)) {
            return Verdict::fail("vertex " + std::to_string(v) + ": disconnected subtree");
        }
    }
    std::vector<char> meet(static_cast<size_t>(g.size()) * g.size(), 0);
    for (auto& bag : bags(rep)) {
        for (int u : bag) {
            for (int v : bag) {
                meet[static_cast<size_t>(u) * g.size() + v] = 1;
            }
        }
    }
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            bool m = meet[static_cast<size_t>(u) * g.size() + v];
            if (m != g.adjacent(u, v)) {
                return Verdict::fail("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                     (m ? ": subtrees intersect but not adjacent"
                                        : ": adjacent but subtrees disjoint"));
            }
        }
    }
    return Verdict::pass();
}

int leaf_count(const HostTree& host) {
    if (host.node_count <= 1) {
        return host.node_count;
    }
    std::vector<int> degree(host.node_count, 0);
    for (auto [a, b] : host.edges) {
        ++degree[a];
        ++degree[b];
    }
    return static_cast<int>(std::count(degree.begin(), degree.end(), 1));
}

int leaf_count(const SubtreeRepresentation& rep) {
    return leaf_count(rep.host);
}

Verdict is_proper(const SubtreeRepresentation& rep) {
    int n = static_cast<int>(rep.assign.size());
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const auto& a = rep.assign[u];
            const auto& b = rep.assign[v];
            if (u != v && a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                return Verdict::fail("subtree of " + std::to_string(u) + " strictly inside subtree of " +
                                     std::to_string(v));
            }
        }
    }
    return Verdict::pass();
}

Verdict is_minimal(const SubtreeRepresentation& rep, const Graph& g) {
    auto all = bags(rep);
    std::set<VertexSet> seen;
    for (int t = 0; t < rep.host.node_count; ++t) {
        const auto& bag = all[t];
        if (!is_clique(g, bag)) {
            return Verdict::fail("node " + std::to_string(t) + " bag is not a clique");
        }
        for (int x = 0; x < g.size(); ++x) {
            if (std::binary_search(bag.begin(), bag.end(), x)) {
                continue;
            }
            bool extends = std::all_of(bag.begin(), bag.end(), [&](int y) { return g.adjacent(x, y); });
            if (extends) {
                return Verdict::fail("node " + std::to_string(t) + " bag " + set_text(bag) +
                                     " is not a maximal clique");
            }
        }
        if (!seen.insert(bag).second) {
            return Verdict::fail("two host nodes carry the clique " + set_text(bag));
        }
    }
    // In a valid representation every maximal clique lies in some bag, so
    // distinct maximal bags already exhaust the maximal cliques.
    return Verdict::pass();
}

bool is_asteroidal_collection(const HostTree& host, const std::vector<VertexSet>& subtrees) {
    for (size_t i = 0; i < subtrees.size(); ++i) {
        if (!is_subtree(host, subtrees[i])) {
            throw Error(ErrorKind::BadParams, "asteroidal collection: member " + std::to_string(i) +
                                                  " is not a subtree");
        }
        for (size_t j = i + 1; j < subtrees.size(); ++j) {
            VertexSet common;
            std::set_intersection(subtrees[i].begin(), subtrees[i].end(), subtrees[j].begin(),
                                  subtrees[j].end(), std::back_inserter(common));
            if (!common.empty()) {
                throw Error(ErrorKind::BadParams, "asteroidal collection: members not disjoint");
            }
        }
    }
    for (size_t i = 0; i < subtrees.size(); ++i) {
        for (size_t j = i + 1; j < subtrees.size(); ++j) {
            auto path = host_path(host, subtrees[i][0], subtrees[j][0]);
            for (size_t k = 0; k < subtrees.size(); ++k) {
                if (k == i || k == j) {
                    continue;
                }
                for (int t : path) {
                    if (std::binary_search(subtrees[k].begin(), subtrees[k].end(), t)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

SubtreeRepresentation minimize(const SubtreeRepresentation& rep) {
    int count = rep.host.node_count;
    std::vector<std::set<int>> adj(count);
    for (auto [a, b] : rep.host.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    auto bag = bags(rep);
    std::vector<char> alive(count, 1);
    auto nested = [&](int a, int b) {
        return std::includes(bag[b].begin(), bag[b].end(), bag[a].begin(), bag[a].end());
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < count && !changed; ++a) {
            if (!alive[a]) {
                continue;
            }
            for (int b : adj[a]) {
                if (!nested(a, b)) {
                    continue;
                }
                // Fold a into b.
                for (int c : adj[a]) {
                    if (c != b) {
                        adj[c].erase(a);
                        adj[c].insert(b);
                        adj[b].insert(c);
                    }
                }
                adj[b].erase(a);
                adj[a].clear();
                alive[a] = 0;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> id(count, -1);
    int next = 0;
    for (int t = 0; t < count; ++t) {
        if (alive[t]) {
            id[t] = next++;
        }
    }
    SubtreeRepresentation out;
    out.host.node_count = next;
    for (int t = 0; t < count; ++t) {
        for (int s : adj[t]) {
            if (alive[t] && t < s) {
                out.host.edges.emplace_back(id[t], id[s]);
            }
        }
    }
    out.assign.assign(rep.assign.size(), {});
    for (int t = 0; t < count; ++t) {
        if (alive[t]) {
            for (int v : bag[t]) {
                out.assign[v].push_back(id[t]);
            }
        }
    }
    return canonical(out);
}

SubtreeRepresentation canonical(const SubtreeRepresentation& rep) {
    SubtreeRepresentation out = rep;
    for (auto& [a, b] : out.host.edges) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(out.host.edges.begin(), out.host.edges.end());
    for (auto& nodes : out.assign) {
        std::sort(nodes.begin(), nodes.end());
    }
    return out;
}

nlohmann::json to_json(const SubtreeRepresentation& rep, const std::string& method, bool proper) {
    auto c = canonical(rep);
    nlohmann::json doc;
    doc["n"] = c.assign.size();
    doc["host_edges"] = nlohmann::json::array();
    for (auto [a, b] : c.host.edges) {
        doc["host_edges"].push_back({a, b});
    }
    doc["assign"] = nlohmann::json::object();
    for (size_t v = 0; v < c.assign.size(); ++v) {
        doc["assign"][std::to_string(v)] = c.assign[v];
    }
    doc["meta"] = {{"method", method}, {"leaves", leaf_count(c)}, {"proper", proper}};
    return doc;
}

SubtreeRepresentation representation_from_json(const nlohmann::json& doc) {
    try {
        SubtreeRepresentation rep;
        int n = doc.at("n").get<int>();
        if (n < 0) {
            throw Error(ErrorKind::Parse, "certificate: negative n");
        }
        for (auto& e : doc.at("host_edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw Error(ErrorKind::Parse, "certificate: host edge must be a pair");
            }
            rep.host.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        rep.host.node_count = static_cast<int>(rep.host.edges.size()) + 1;
        rep.assign.assign(n, {});
        for (auto& [key, nodes] : doc.at("assign").items()) {
            size_t used = 0;
            int v = std::stoi(key, &used);
            if (used != key.size() || v < 0 || v >= n) {
                throw Error(ErrorKind::Parse, "certificate: bad vertex key '" + key + "'");
            }
            rep.assign[v] = nodes.get<VertexSet>();
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("certificate: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "certificate: non-numeric vertex key");
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::Parse, "certificate: vertex key out of range");
    }
}

std::string to_dot(const SubtreeRepresentation& rep) {
    auto c = canonical(rep);
    auto all = bags(c);
    std::ostringstream out;
    out << "graph host {\n";
    for (int t = 0; t < c.host.node_count; ++t) {
        out << "  q" << t << " [label=\"";
        for (size_t i = 0; i < all[t].size(); ++i) {
            out << (i ? " " : "") << all[t][i];
        }
        out << "\"];\n";
    }
    for (auto [a, b] : c.host.edges) {
        out << "  q" << a << " -- q" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}
