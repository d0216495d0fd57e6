#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "leafage/representation.hpp"

namespace leafage::detail {

// Mutable host tree with per-node bags, used while assembling certificates.
struct HostBuilder {
    std::vector<std::set<int>> bag;
    std::vector<std::set<int>> adj;

    int add_node(const VertexSet& members = {}) {
        bag.emplace_back(members.begin(), members.end());
        adj.emplace_back();
        return static_cast<int>(bag.size()) - 1;
    }

    void add_edge(int a, int b) {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    void remove_edge(int a, int b) {
        adj[a].erase(b);
        adj[b].erase(a);
    }

    // New node placed on the edge a-b.
    int subdivide(int a, int b, const VertexSet& members) {
        int t = add_node(members);
        remove_edge(a, b);
        add_edge(a, t);
        add_edge(t, b);
        return t;
    }

    bool is_leaf(int t) const { return adj[t].size() == 1; }

    int node_holding(int v) const {
        for (int t = 0; t < static_cast<int>(bag.size()); ++t) {
            if (bag[t].count(v)) {
                return t;
            }
        }
        return -1;
    }

    SubtreeRepresentation build(int vertex_count) const {
        SubtreeRepresentation rep;
        rep.host.node_count = static_cast<int>(bag.size());
        for (int t = 0; t < rep.host.node_count; ++t) {
            for (int s : adj[t]) {
                if (t < s) {
                    rep.host.edges.emplace_back(t, s);
                }
            }
        }
        rep.assign.assign(vertex_count, {});
        for (int t = 0; t < rep.host.node_count; ++t) {
            for (int v : bag[t]) {
                rep.assign[v].push_back(t);
            }
        }
        return canonical(rep);
    }
};

}
