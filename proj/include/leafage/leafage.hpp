#pragma once

#include <optional>

#include "leafage/graph.hpp"
#include "leafage/poset.hpp"
#include "leafage/report.hpp"
#include "leafage/representation.hpp"

namespace leafage {

struct LeafageOptions {
    int max_cliques = 10;     // oracle cap
    int max_simplicial = 20;  // asteroidal search cap
    int budget = 8;           // exhaustive subgraph enumeration up to this order
};

/// Simplicial vertices sharing one modified neighborhood R' = N(v) - S(G),
/// split into the components they induce (each a clique of equivalent vertices).
struct SimplicialGroup {
    VertexSet neighborhood;
    std::vector<VertexSet> components;
};

std::vector<SimplicialGroup> simplicial_groups(const Graph& g);

/// Host built from chains of modified simplicial neighborhoods (bottom to top):
/// each chain becomes a path with one node per simplicial component, small end
/// outward, and its big end is hooked to the dominator-tree host of G'. The
/// result is minimized. Chains are given as sets; every set must be an R' of g.
SubtreeRepresentation chain_representation(const Graph& g, const std::vector<std::vector<VertexSet>>& chains);

/// a(G) <= l(G) <= w(P(G)) with the chain construction as certificate.
LeafageReport bounds(const Graph& g, const LeafageOptions& options = {});

/// A host path for an interval graph, found by backtracking over clique orders.
std::optional<SubtreeRepresentation> interval_representation(const Graph& g, long long step_limit = 2'000'000);

/// Trees: exact leaf count of the derived tree (stars are interval: 2).
LeafageReport leafage_tree(const Graph& g);

/// Distinct simplicial neighborhoods R with G' - R connected and nonempty.
int ktree_good_neighborhoods(const Graph& g);
/// Non-clique k-trees: max(2, ktree_good_neighborhoods).
LeafageReport leafage_ktree(const Graph& g);

/// Cut vertices of a block graph that are simplicial in G'.
int block_simplicial_cut_vertices(const Graph& g);
/// Non-clique block graphs: max(2, block_simplicial_cut_vertices).
LeafageReport leafage_block_graph(const Graph& g);

/// G' has exactly two maximal cliques.
bool is_two_clique_derived(const Graph& g);
/// Exact value when G' is the union of two maximal cliques Q1, Q2.
LeafageReport leafage_two_clique(const Graph& g, const LeafageOptions& options = {});

/// Largest k with k <= C(n-k, floor((n-k)/2)); n >= 4.
int max_leafage(int n);
/// K_{n-k} plus k simplicial vertices on the first k distinct half-size subsets.
Graph extremal_graph(int n);

/// Routes by class, cross-checks every applicable route (and the oracle when
/// within the clique cap) and falls back to bounds.
LeafageReport leafage(const Graph& g, const LeafageOptions& options = {});

}
