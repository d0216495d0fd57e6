#pragma once

#include <random>

#include "leafage/graph.hpp"

namespace leafage {

using Rng = std::mt19937_64;

/// Uniform random parent attachment; vertex 0 is the root.
Graph random_tree(int n, Rng& rng);
/// Grown from K_k, each new vertex joined to a random k-clique.
Graph random_ktree(int n, int k, Rng& rng);
/// Cliques of size 2..max_block glued at random existing vertices until n vertices.
Graph random_block_graph(int n, int max_block, Rng& rng);
/// Reverse-elimination growth: each new vertex joins a random nonempty subset of
/// a random current maximal clique. keep is the per-member inclusion probability.
Graph random_chordal(int n, Rng& rng, double keep = 0.5);
/// random_chordal samples rejected until claw-free and non-clique.
Graph random_claw_free_chordal(int n, Rng& rng);
/// Random chordal graphs whose derived graph is exactly two maximal cliques.
Graph random_two_clique_derived(int n, Rng& rng);

/// v_i = i (0..n), u_i = n+i, w_i = 2n+i (1..n); N(u_i) = N(w_i) = {v_{i-1}, v_i}.
Graph kite(int n);

}
