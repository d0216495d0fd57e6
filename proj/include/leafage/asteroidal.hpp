#pragma once

#include <string>

#include "leafage/graph.hpp"

namespace leafage {

struct AsteroidalReport {
    int number = 0;
    VertexSet witness;
    std::string method;
    long long distance_sum = 0;  // sum of pairwise distances within the witness
};

struct SubgraphBound {
    int value = 0;
    bool exhaustive = false;
};

/// Each pair has a path avoiding the closed neighborhood of the third.
bool is_asteroidal_triple(const Graph& g, int x, int y, int z);
/// Every triple is asteroidal; sets of size <= 2 qualify iff independent.
bool is_asteroidal_set(const Graph& g, const VertexSet& s);
long long distance_sum(const Graph& g, const VertexSet& s);

/// Exact a(G) by branch and bound over the simplicial vertices; among maximum
/// sets the witness maximizes the distance sum. Throws CapExceeded when there
/// are more than max_simplicial simplicial vertices.
AsteroidalReport asteroidal_number(const Graph& g, int max_simplicial = 20);

/// Chordal and free of asteroidal triples. Throws NotChordal.
bool is_interval(const Graph& g);

/// w(P'(H)) for a connected chordal H; 1 when H is a clique or its derived
/// graph has at most one vertex.
int restricted_width(const Graph& h);

/// Maximum restricted width over connected induced subgraphs, at least 2 for
/// non-cliques. Exhaustive when n <= budget; otherwise a heuristic family
/// (the whole graph and the union of avoiding paths of a maximum asteroidal set).
SubgraphBound subgraph_width_bound(const Graph& g, int budget = 8, int max_simplicial = 20);

/// Union of chordless avoiding paths between the members of an asteroidal set.
VertexSet asteroidal_path_union(const Graph& g, const VertexSet& asteroidal);

}
