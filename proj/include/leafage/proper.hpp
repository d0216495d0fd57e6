#pragma once

#include <optional>
#include <vector>

#include "leafage/graph.hpp"
#include "leafage/report.hpp"
#include "leafage/representation.hpp"

namespace leafage {

struct ProperOptions {
    int budget = 8;          // exhaustive induced-subgraph enumeration up to this order
    int search_budget = 7;   // exhaustive host search up to this order
    int max_cliques = 10;    // clique-tree enumeration cap for the upper bound
    int max_simplicial = 20;
    long long search_steps = 3'000'000;
};

/// Simplicial a such that every two vertices of N(a) not equivalent to a have
/// a common neighbor outside N[a].
VertexSet extreme_points(const Graph& g);
/// Simplicial a such that all components of G - N[a] have the same boundary in N[a].
VertexSet modified_extreme_points(const Graph& g);

/// Maximum MEP count over connected reduced induced subgraphs; exhaustive when
/// n <= budget, otherwise over the whole reduction and induced stars. At least 2.
int mep_lower_bound(const Graph& g, int budget = 8);

/// Splits at cut vertices whose deletion leaves two components and combines
/// the sides' bounds (sum minus 2, or minus 1 when a side is a non-clique
/// proper interval graph in which the cut vertex is not simplicial). Never
/// below mep_lower_bound.
int cut_decomposition_bound(const Graph& g, int budget = 8);

/// Chordal, interval and claw-free.
bool is_proper_interval(const Graph& g);
/// Host path with pairwise distinct endpoints per clique order; 2 leaves.
std::optional<SubtreeRepresentation> proper_interval_representation(const Graph& g);

/// Proper representation of a clique on a path (two leaves).
SubtreeRepresentation clique_path_representation(int vertex_count);

/// Non-clique block graphs: number of leaf blocks; cliques: 2.
ProperReport proper_leafage_block_graph(const Graph& g);

/// Spine order v_0..v_n when g is an n-kite (v_i = i, u_i = n+i, w_i = 2n+i
/// up to relabelling), nullopt otherwise.
std::optional<std::vector<int>> detect_kite(const Graph& g);
/// Proper representation of kite(n): n + 2 leaves for n >= 2, a path for n = 1.
SubtreeRepresentation kite_proper_representation(int n);

/// Makes a valid representation proper by giving each strictly contained
/// subtree a private node, reusing host leaves where possible.
SubtreeRepresentation make_proper(const SubtreeRepresentation& rep, const Graph& g);

/// Claw-free non-clique chordal graphs: a(G) = inequivalent MEP count.
ProperReport proper_leafage_claw_free(const Graph& g, const ProperOptions& options = {});

/// Smallest leaf count of a proper representation on hosts with at most
/// max_nodes nodes, searching leaf counts in [from, below); nullopt when none
/// is found or the step limit is hit (reported through exhausted).
struct HostSearchResult {
    std::optional<SubtreeRepresentation> found;
    bool exhausted = true;
};
HostSearchResult search_proper_host(const Graph& g, int from, int below, int max_nodes, long long step_limit);

ProperReport proper_leafage(const Graph& g, const ProperOptions& options = {});

}
