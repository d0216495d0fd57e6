#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafage/graph.hpp"

namespace leafage {

/// Finite poset; for neighborhood posets the order is strict containment.
struct NeighborhoodPoset {
    std::vector<VertexSet> elements;  // empty for abstract posets
    std::vector<std::vector<char>> below;  // below[i][j]: i < j
    std::string tag;

    int size() const { return static_cast<int>(below.size()); }
    bool less(int i, int j) const { return below[i][j] != 0; }
    bool comparable(int i, int j) const { return below[i][j] || below[j][i]; }

    static NeighborhoodPoset from_sets(std::vector<VertexSet> sets, std::string tag);
    /// Transitive closure of the given strict relations on 0..n-1.
    static NeighborhoodPoset from_relation(int n, const std::vector<std::pair<int, int>>& less_pairs);
};

struct Subposet {
    NeighborhoodPoset poset;
    std::vector<int> to_parent;
};

/// Chains listed bottom to top.
struct ChainDecomposition {
    std::vector<std::vector<int>> chains;
};

struct WidthResult {
    int width = 0;
    std::vector<int> antichain;  // a maximum antichain, sorted
};

Subposet subposet(const NeighborhoodPoset& p, const std::vector<int>& keep);

/// Distinct sets N(v) - S(G) over simplicial v; no error checking.
std::vector<VertexSet> modified_simplicial_neighborhoods(const Graph& g);

/// P(G). Throws WrongClass for cliques and when the derived graph is a single
/// vertex, Disconnected for disconnected input.
NeighborhoodPoset build_msn_poset(const Graph& g);
/// P'(G): P(G) minus the elements containing a minimal cutset of G'.
NeighborhoodPoset build_restricted_poset(const Graph& g);
/// Same poset, found by testing every subset of each element as a cutset of G'.
NeighborhoodPoset build_restricted_poset_by_subsets(const Graph& g);

/// Width |P| - (maximum matching of the split graph), with a König antichain.
WidthResult width(const NeighborhoodPoset& p);
/// The lattice-minimum maximum antichain, sorted.
std::vector<int> minimal_maximum_antichain(const NeighborhoodPoset& p);

ChainDecomposition dilworth(const NeighborhoodPoset& p);
/// Decomposition with w(P) chains where each listed element is the bottom of
/// its chain; nullopt when no such decomposition exists.
std::optional<ChainDecomposition> dilworth_with_bottoms(const NeighborhoodPoset& p, const std::vector<int>& bottoms);
/// x must lie in A_P (HypothesisViolated otherwise). One chain is x together
/// with the elements above it on its chain in some Dilworth decomposition.
ChainDecomposition dilworth_with_bottom(const NeighborhoodPoset& p, int x);
/// x in side_one, y in side_two, both in A_P, and w(P) >= w(P - sides) + 2;
/// throws HypothesisViolated otherwise. Chains bottomed at x and y.
ChainDecomposition dilworth_with_two_bottoms(const NeighborhoodPoset& p, int x, int y,
                                             const std::vector<int>& side_one, const std::vector<int>& side_two);

/// True iff the chains partition p, each totally ordered bottom to top.
bool is_chain_partition(const NeighborhoodPoset& p, const ChainDecomposition& d);

}
