#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace leafage {

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range ids throw Error(BadParams).
    static Graph from_edges(int vertex_count, std::span<const std::pair<int, int>> edges);

    int size() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return matrix_[static_cast<size_t>(u) * n_ + v] != 0; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
};

/// Induced subgraph plus the map from its ids back to the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;

    VertexSet lift(std::span<const int> local) const;
};

/// Perfect elimination ordering: for each position i, the neighbors of
/// order[i] appearing later in the order form a clique.
struct Peo {
    std::vector<int> order;
};

struct ChordalVerdict {
    std::optional<Peo> peo;
    /// Chordless cycle of length >= 4 (in cycle order) when not chordal.
    std::vector<int> witness_cycle;

    bool chordal() const { return peo.has_value(); }
};

/// Vertices grouped by equal closed neighborhoods.
struct Reduction {
    std::vector<int> representative;  // vertex -> smallest id in its class
    std::vector<int> reduced_id;      // vertex -> id of its class in reduced_graph
    std::vector<VertexSet> classes;   // reduced id -> members
    Graph reduced_graph;
};

struct ClawCheck {
    bool claw_free = true;
    std::array<int, 4> witness{};  // center first, then three pairwise nonadjacent leaves
};

VertexSet closed_neighborhood(const Graph& g, int v);
bool is_clique(const Graph& g, std::span<const int> vertices);
bool is_complete(const Graph& g);

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
Subgraph delete_vertices(const Graph& g, std::span<const int> removed);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
/// Components of g - removed, in parent ids, ordered by smallest member.
std::vector<VertexSet> components_after_delete(const Graph& g, std::span<const int> removed);
/// Members of separator having a neighbor inside component.
VertexSet boundary(const Graph& g, std::span<const int> separator, std::span<const int> component);
std::vector<int> bfs_distances(const Graph& g, int source);

ChordalVerdict recognize_chordal(const Graph& g);
bool is_chordal(const Graph& g);
bool is_peo(const Graph& g, const Peo& peo);

bool is_simplicial(const Graph& g, int v);
VertexSet simplicial_vertices(const Graph& g);
Subgraph derived_graph(const Graph& g);

Reduction reduce(const Graph& g);
bool is_reduced(const Graph& g);
bool equivalent(const Graph& g, int u, int v);

ClawCheck is_claw_free(const Graph& g);

/// Every minimal (a,b)-separator of g (sorted, distinct).
std::vector<VertexSet> minimal_separators(const Graph& g);
/// Inclusion-minimal cutsets: minimal separators with no smaller separator inside.
std::vector<VertexSet> minimal_cutsets(const Graph& g);
/// Inclusion-minimal cutsets of a connected graph that are contained in N(x).
std::vector<VertexSet> minimal_separators_for(const Graph& g, int x);
/// True iff deleting the set leaves a disconnected graph.
bool is_cutset(const Graph& g, std::span<const int> set);

VertexSet cut_vertices(const Graph& g);
/// Vertex sets of the biconnected components (blocks), ordered by smallest member.
std::vector<VertexSet> blocks(const Graph& g);

bool is_tree(const Graph& g);
bool is_block_graph(const Graph& g);
/// k when g is a non-clique k-tree, nullopt otherwise.
std::optional<int> ktree_width(const Graph& g);

void require_connected(const Graph& g, const char* context);
void require_chordal(const Graph& g, const char* context);

}
