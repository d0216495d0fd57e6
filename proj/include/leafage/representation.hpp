#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "leafage/graph.hpp"

namespace leafage {

struct HostTree {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> adjacency() const;
    bool is_tree() const;
};

/// assign[v] is the sorted set of host nodes of the subtree f(v).
struct SubtreeRepresentation {
    HostTree host;
    std::vector<VertexSet> assign;
};

struct Verdict {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

/// True iff nodes is nonempty and induces a connected subgraph of host.
bool is_subtree(const HostTree& host, const VertexSet& nodes);
/// Node sequence of the unique host path from a to b.
std::vector<int> host_path(const HostTree& host, int a, int b);

Verdict verify(const SubtreeRepresentation& rep, const Graph& g);
/// Degree-1 host nodes; a single-node host counts as one leaf.
int leaf_count(const HostTree& host);
int leaf_count(const SubtreeRepresentation& rep);
/// No assigned set is a strict subset of another (equal sets allowed).
Verdict is_proper(const SubtreeRepresentation& rep);
/// Host nodes correspond one-to-one to the maximal cliques of g.
Verdict is_minimal(const SubtreeRepresentation& rep, const Graph& g);

/// No subtree meets the host path between two others. Throws BadParams when
/// the subtrees are not pairwise disjoint subtrees.
bool is_asteroidal_collection(const HostTree& host, const std::vector<VertexSet>& subtrees);

/// Vertices whose subtree contains each host node.
std::vector<VertexSet> bags(const SubtreeRepresentation& rep);

/// Contracts host edges whose two bags are nested until none remain, then
/// renumbers nodes densely. Validity is preserved and leaves never increase.
SubtreeRepresentation minimize(const SubtreeRepresentation& rep);

/// Deterministic form: host edges oriented (min, max) and sorted.
SubtreeRepresentation canonical(const SubtreeRepresentation& rep);

nlohmann::json to_json(const SubtreeRepresentation& rep, const std::string& method, bool proper);
/// Throws Error(Parse) on malformed input.
SubtreeRepresentation representation_from_json(const nlohmann::json& doc);
std::string to_dot(const SubtreeRepresentation& rep);

}
