#pragma once

#include <utility>
#include <vector>

#include "leafage/graph.hpp"

namespace fixtures {

using leafage::Graph;

inline Graph make(int n, std::vector<std::pair<int, int>> edges) {
    return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make(n, e);
}

inline Graph cycle(int n) {
    auto e = path(n).edges();
    e.emplace_back(0, n - 1);
    return make(n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make(n, e);
}

// Center 0, leaves 1..k.
inline Graph star(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return make(k + 1, e);
}

// Center 0; leg i is 0 - (2i+1) - (2i+2).
inline Graph spider(int legs) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < legs; ++i) {
        e.emplace_back(0, 2 * i + 1);
        e.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return make(2 * legs + 1, e);
}

// Derived graph 2K_2 join K_1 (hub 0, edges 1-2 and 3-4) plus a simplicial
// vertex on each of its six edges (5..10).
inline Graph fig1() {
    std::vector<std::pair<int, int>> core{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
    auto e = core;
    int next = 5;
    for (auto [a, b] : core) {
        e.emplace_back(a, next);
        e.emplace_back(b, next);
        ++next;
    }
    return make(11, e);
}

// Triangle 0,1,2 with 3~{0,1}, 4~{1,2}, 5~{0,2}.
inline Graph sun3() {
    return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}

// Path 0..4 joined with hub 5.
inline Graph p5_join_k1() {
    auto e = path(5).edges();
    for (int i = 0; i < 5; ++i) e.emplace_back(i, 5);
    return make(6, e);
}

// K_4 minus edge {2,3}.
inline Graph k4_minus_e() {
    return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Central triangle 0,1,2 with triangles {0,3,4}, {1,5,6}, {2,7,8}.
inline Graph hung_triangles() {
    return make(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6},
                    {2, 7}, {2, 8}, {7, 8}});
}

}

namespace fixtures {

// Square of corners 0..3 with side midpoints 4..7 (4 between 0,1; 5 between
// 1,2; 6 between 2,3; 7 between 3,0), the midpoint diamond with chord 4-6, and
// two-edge tails 7-8-9 and 5-10-11. Corners are the degree-2 simplicial vertices.
inline Graph fig2() {
    return make(12, {{0, 4}, {4, 1}, {1, 5}, {5, 2}, {2, 6}, {6, 3}, {3, 7}, {7, 0},
                     {4, 5}, {5, 6}, {6, 7}, {7, 4}, {4, 6},
                     {7, 8}, {8, 9}, {5, 10}, {10, 11}});
}

}
