#include <algorithm>
#include <map>
#include <string>

#include "host_builder.hpp"
#include "leafage/asteroidal.hpp"
#include "leafage/cliques.hpp"
#include "leafage/error.hpp"
#include "leafage/leafage.hpp"

namespace leafage {

namespace {

bool subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet merged(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct TwoCliqueShape {
    VertexSet q1, q2, q;
    NeighborhoodPoset p;
    std::vector<SimplicialGroup> groups;
};

// Each chain hangs from the clique of its side; the sides are then glued by
// one edge between the given endpoints instead of q1 -- q2. side_of[c] is
// 0 or 1 per chain; a join end of -1 denotes the other side's clique node.
// The element equal to Q, when left out of d, is threaded onto the join edge.
std::optional<SubtreeRepresentation> joined_host(const Graph& g, const TwoCliqueShape& shape,
                                                 const ChainDecomposition& d, const std::vector<int>& side_of,
                                                 int join_a, int join_b, int bridge = -1) {
    std::map<VertexSet, const SimplicialGroup*> by_neighborhood;
    for (auto& group : shape.groups) {
        by_neighborhood[group.neighborhood] = &group;
    }
    detail::HostBuilder host;
    int clique_node[2] = {host.add_node(shape.q1), host.add_node(shape.q2)};
    std::map<int, int> bottom_node;
    std::map<int, int> side_of_element;
    for (size_t c = 0; c < d.chains.size(); ++c) {
        int side = side_of[c];
        if (!subset_of(shape.p.elements[d.chains[c].back()], side == 0 ? shape.q1 : shape.q2)) {
            return std::nullopt;
        }
        int previous = -1;
        for (int e : d.chains[c]) {
            side_of_element[e] = side;
            for (auto& component : by_neighborhood.at(shape.p.elements[e])->components) {
                int t = host.add_node(merged(component, shape.p.elements[e]));
                if (previous < 0) {
                    bottom_node[e] = t;
                } else {
                    host.add_edge(previous, t);
                }
                previous = t;
            }
        }
        host.add_edge(previous, clique_node[side]);
    }
    int ends[2] = {clique_node[0], clique_node[1]};
    if (join_a >= 0 && join_b < 0) {
        ends[0] = bottom_node.at(join_a);
        ends[1] = clique_node[1 - side_of_element.at(join_a)];
    } else if (join_a >= 0) {
        if (side_of_element.at(join_a) == side_of_element.at(join_b)) {
            return std::nullopt;
        }
        ends[0] = bottom_node.at(join_a);
        ends[1] = bottom_node.at(join_b);
    }
    int previous = ends[0];
    if (bridge >= 0) {
        for (auto& component : by_neighborhood.at(shape.p.elements[bridge])->components) {
            int t = host.add_node(merged(component, shape.p.elements[bridge]));
            host.add_edge(previous, t);
            previous = t;
        }
    }
    host.add_edge(previous, ends[1]);
    auto rep = minimize(host.build(g.size()));
    if (!verify(rep, g)) {
        return std::nullopt;
    }
    return rep;
}

ChainDecomposition lifted(const ChainDecomposition& d, const std::vector<int>& to_parent) {
    ChainDecomposition out = d;
    for (auto& chain : out.chains) {
        for (int& e : chain) {
            e = to_parent[e];
        }
    }
    return out;
}

int chain_with(const ChainDecomposition& d, int e) {
    for (size_t c = 0; c < d.chains.size(); ++c) {
        if (std::find(d.chains[c].begin(), d.chains[c].end(), e) != d.chains[c].end()) {
            return static_cast<int>(c);
        }
    }
    return -1;
}

// Side per chain by its top; forced chains take the given side when they fit.
std::vector<int> sides_by_top(const TwoCliqueShape& shape, const ChainDecomposition& d,
                              const std::map<int, int>& forced) {
    std::vector<int> side(d.chains.size(), 0);
    for (size_t c = 0; c < d.chains.size(); ++c) {
        side[c] = subset_of(shape.p.elements[d.chains[c].back()], shape.q1) ? 0 : 1;
    }
    for (auto [c, s] : forced) {
        side[c] = s;
    }
    return side;
}

}

LeafageReport leafage_two_clique(const Graph& g, const LeafageOptions& options) {
    if (!is_two_clique_derived(g)) {
        throw Error(ErrorKind::WrongClass, "leafage_two_clique: derived graph is not two maximal cliques");
    }
    TwoCliqueShape shape;
    auto core = derived_graph(g);
    auto cs = build_clique_structure(core.graph);
    shape.q1 = core.lift(cs.cliques[0]);
    shape.q2 = core.lift(cs.cliques[1]);
    std::sort(shape.q1.begin(), shape.q1.end());
    std::sort(shape.q2.begin(), shape.q2.end());
    std::set_intersection(shape.q1.begin(), shape.q1.end(), shape.q2.begin(), shape.q2.end(),
                          std::back_inserter(shape.q));
    shape.p = build_msn_poset(g);
    shape.groups = simplicial_groups(g);
    auto& p = shape.p;
    int size = p.size();

    std::vector<int> restricted;
    for (int e = 0; e < size; ++e) {
        if (!subset_of(shape.q, p.elements[e])) {
            restricted.push_back(e);
        }
    }
    int wp = width(p).width;
    int wpp = width(subposet(p, restricted).poset).width;
    auto ap = minimal_maximum_antichain(p);
    std::vector<int> beyond;  // A_P - P'
    for (int e : ap) {
        if (subset_of(shape.q, p.elements[e])) {
            beyond.push_back(e);
        }
    }

    const VertexSet* sides[2] = {&shape.q1, &shape.q2};
    bool degenerate[2];
    std::vector<int> holds[2];
    std::vector<int> side_members[2];
    for (int i = 0; i < 2; ++i) {
        std::vector<int> inside;
        for (int e = 0; e < size; ++e) {
            if (subset_of(p.elements[e], *sides[i])) {
                inside.push_back(e);
                if (p.elements[e] != shape.q && subset_of(shape.q, p.elements[e])) {
                    side_members[i].push_back(e);
                }
            }
        }
        degenerate[i] = true;
        for (size_t a = 0; a < inside.size(); ++a) {
            for (size_t b = a + 1; b < inside.size(); ++b) {
                if (!p.comparable(inside[a], inside[b])) {
                    degenerate[i] = false;
                }
            }
        }
        for (int e : beyond) {
            if (subset_of(p.elements[e], *sides[i])) {
                holds[i].push_back(e);
            }
        }
    }

    // alpha: nondegenerate cliques matched to distinct elements of A_P - P'.
    int alpha = 0;
    bool usable[2] = {!degenerate[0] && !holds[0].empty(), !degenerate[1] && !holds[1].empty()};
    if (usable[0] && usable[1]) {
        bool distinct = false;
        for (int a : holds[0]) {
            for (int b : holds[1]) {
                distinct = distinct || a != b;
            }
        }
        alpha = distinct ? 2 : 1;
    } else if (usable[0] || usable[1]) {
        alpha = 1;
    }

    // Each element of A_P - P' lies in some degenerate clique.
    bool only_degenerate = !beyond.empty();
    for (int e : beyond) {
        bool found = false;
        for (int i = 0; i < 2; ++i) {
            found = found || (degenerate[i] && subset_of(p.elements[e], *sides[i]));
        }
        only_degenerate = only_degenerate && found;
    }
    int case_number = wpp <= wp - 2 ? 1 : (wpp == wp - 1 && only_degenerate ? 2 : 3);

    LeafageReport report;
    report.method = "two-clique";
    report.diagnostics.push_back("w(P) = " + std::to_string(wp));
    report.diagnostics.push_back("w(P') = " + std::to_string(wpp));
    report.diagnostics.push_back("alpha = " + std::to_string(alpha));
    report.diagnostics.push_back(std::string("degenerate: Q1 ") + (degenerate[0] ? "yes" : "no") + ", Q2 " +
                                 (degenerate[1] ? "yes" : "no"));
    report.diagnostics.push_back("case " + std::to_string(case_number));

    // Candidate hosts: plain chains, a single join and a pair join.
    std::optional<SubtreeRepresentation> best;
    auto offer = [&](std::optional<SubtreeRepresentation> rep) {
        if (rep && (!best || leaf_count(*rep) < leaf_count(*best))) {
            best = std::move(rep);
        }
    };
    auto plain = dilworth(p);
    offer(joined_host(g, shape, plain, sides_by_top(shape, plain, {}), -1, -1));
    for (int x : beyond) {
        auto d = dilworth_with_bottom(p, x);
        int c = chain_with(d, x);
        for (int s = 0; s < 2; ++s) {
            offer(joined_host(g, shape, d, sides_by_top(shape, d, {{c, s}}), x, -1));
        }
    }
    for (int x : beyond) {
        for (int y : beyond) {
            if (x == y || !subset_of(p.elements[x], shape.q1) || !subset_of(p.elements[y], shape.q2)) {
                continue;
            }
            std::optional<ChainDecomposition> d;
            try {
                d = dilworth_with_two_bottoms(p, x, y, side_members[0], side_members[1]);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::HypothesisViolated && e.kind() != ErrorKind::ConstructionFailed) {
                    throw;
                }
                d = dilworth_with_bottoms(p, {x, y});
            }
            if (d) {
                offer(joined_host(g, shape, *d, sides_by_top(shape, *d, {{chain_with(*d, x), 0}, {chain_with(*d, y), 1}}),
                                  x, y));
            }
        }
    }
    // Q itself as an element can sit on the join edge instead of in a chain.
    int q_element = -1;
    for (int e = 0; e < size; ++e) {
        if (p.elements[e] == shape.q) {
            q_element = e;
        }
    }
    if (q_element >= 0) {
        std::vector<int> keep;
        for (int e = 0; e < size; ++e) {
            if (e != q_element) {
                keep.push_back(e);
            }
        }
        auto rest = subposet(p, keep);
        auto local = [&](int e) {
            return static_cast<int>(std::lower_bound(keep.begin(), keep.end(), e) - keep.begin());
        };
        auto rest_plain = lifted(dilworth(rest.poset), keep);
        offer(joined_host(g, shape, rest_plain, sides_by_top(shape, rest_plain, {}), -1, -1, q_element));
        for (int x : beyond) {
            if (x == q_element) {
                continue;
            }
            if (auto d = dilworth_with_bottoms(rest.poset, {local(x)})) {
                auto up = lifted(*d, keep);
                int c = chain_with(up, x);
                for (int s = 0; s < 2; ++s) {
                    offer(joined_host(g, shape, up, sides_by_top(shape, up, {{c, s}}), x, -1, q_element));
                }
            }
            for (int y : beyond) {
                if (y == q_element || x == y || !subset_of(p.elements[x], shape.q1) ||
                    !subset_of(p.elements[y], shape.q2)) {
                    continue;
                }
                if (auto d = dilworth_with_bottoms(rest.poset, {local(x), local(y)})) {
                    auto up = lifted(*d, keep);
                    offer(joined_host(g, shape, up,
                                      sides_by_top(shape, up, {{chain_with(up, x), 0}, {chain_with(up, y), 1}}), x,
                                      y, q_element));
                }
            }
        }
    }
    if (is_interval(g)) {
        offer(interval_representation(g));
    }
    if (!best) {
        throw Error(ErrorKind::ConstructionFailed, "leafage_two_clique: no host built");
    }
    int built = leaf_count(*best);

    // A larger asteroidal set tightens the lower bound.
    auto raise_lower = [&]() {
        if (report.lower >= built) {
            return;
        }
        try {
            auto at = asteroidal_number(g, options.max_simplicial);
            if (at.number > report.lower) {
                report.lower = std::min(at.number, built);
                report.diagnostics.push_back("asteroidal set of size " + std::to_string(at.number));
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapExceeded) {
                throw;
            }
        }
    };

    int value = 0;
    if (case_number == 2) {
        int statement = std::max(2, wp), proof = std::max(2, wp - 1);
        report.diagnostics.push_back("case 2 variants: statement " + std::to_string(statement) + ", proof " +
                                     std::to_string(proof));
        std::optional<LeafageReport> oracle;
        try {
            oracle = oracle_leafage(g, options.max_cliques);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapExceeded) {
                throw;
            }
        }
        if (!oracle) {
            report.diagnostics.push_back("case 2 decided by construction");
            report.lower = proof;
            report.upper = built;
            raise_lower();
            report.exact = built == report.lower;
            report.certificate = std::move(best);
            return report;
        }
        value = oracle->upper;
        report.diagnostics.push_back("case 2 oracle = " + std::to_string(value));
        if (value != statement && value != proof) {
            throw Error(ErrorKind::ConstructionFailed, "leafage_two_clique: oracle matches neither case-2 variant");
        }
        if (built > value) {
            report.diagnostics.push_back("join construction reached " + std::to_string(built) +
                                         "; certificate taken from the oracle");
            best = oracle->certificate;
            built = value;
        }
    } else {
        value = std::max(2, case_number == 1 ? wp - alpha : wpp);
    }
    if (built < value) {
        throw Error(ErrorKind::ConstructionFailed, "leafage_two_clique: host with " + std::to_string(built) +
                                                       " leaves beats the formula value " + std::to_string(value));
    }
    report.lower = value;
    report.upper = built;
    if (built > value) {
        // The formula value is still a lower bound; an asteroidal set may close the gap.
        report.diagnostics.push_back("join construction did not reach the formula value " + std::to_string(value));
        raise_lower();
    }
    report.exact = built == report.lower;
    report.certificate = std::move(best);
    return report;
}

}
