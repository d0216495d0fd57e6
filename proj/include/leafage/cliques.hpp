#pragma once

#include <functional>
#include <vector>

#include "leafage/graph.hpp"
#include "leafage/report.hpp"
#include "leafage/representation.hpp"

namespace leafage {

/// Maximal cliques in creation order along the reverse of a PEO. dominator[i]
/// is an earlier clique j with Q_i n Q_k inside Q_i n Q_j for every k < i
/// (smallest such j); dominator[0] = -1.
struct CliqueStructure {
    std::vector<VertexSet> cliques;
    std::vector<int> dominator;
    Peo peo_used;
};

struct WeightedEdge {
    int a = 0;
    int b = 0;
    int weight = 0;
};

/// Node per maximal clique; edge when two cliques meet, weighted by the
/// intersection size.
struct WeightedCliqueGraph {
    int node_count = 0;
    std::vector<WeightedEdge> edges;
};

CliqueStructure build_clique_structure(const Graph& g, const Peo& peo);
/// Uses the PEO from recognize_chordal.
CliqueStructure build_clique_structure(const Graph& g);

/// Host edges q_i -- q_dominator(i); each vertex gets the cliques holding it.
SubtreeRepresentation dominator_tree_representation(const CliqueStructure& cs, const Graph& g);

/// Representation on an arbitrary tree over the cliques.
SubtreeRepresentation clique_tree_representation(const Graph& g, const std::vector<VertexSet>& cliques,
                                                 const std::vector<std::pair<int, int>>& tree_edges);

WeightedCliqueGraph weighted_clique_graph(const CliqueStructure& cs);

/// Number of spanning trees of maximum weight (matrix-tree theorem per weight
/// level); saturates at limit.
long long count_max_weight_trees(const WeightedCliqueGraph& wcg, long long limit);

/// Calls visit(edges) for every maximum-weight spanning tree until it returns false.
void for_each_max_weight_tree(const WeightedCliqueGraph& wcg,
                              const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit);

/// Exact leafage by enumerating every clique tree. Throws CapExceeded above
/// max_cliques cliques or tree_limit clique trees. A clique reports 1.
LeafageReport oracle_leafage(const Graph& g, int max_cliques = 10, long long tree_limit = 20'000'000);

}
